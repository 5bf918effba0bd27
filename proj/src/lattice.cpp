#include "floorcount/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "floorcount/errors.hpp"

namespace floorcount {

namespace {

struct Vec {
  std::int64_t x;
  std::int64_t y;
};

Vec operator-(const LatticePoint& a, const LatticePoint& b) { return {a.x - b.x, a.y - b.y}; }

std::int64_t cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
std::int64_t dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }

// Angular order of directions in [0, 2pi) starting at the positive x-axis.
int half_plane(Vec d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; }

bool angle_less(Vec a, Vec b) {
  if (half_plane(a) != half_plane(b)) return half_plane(a) < half_plane(b);
  return cross(a, b) > 0;
}

std::int64_t signed_area2(const std::vector<LatticePoint>& ring) {
  std::int64_t area = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % ring.size()];
    area += a.x * b.y - a.y * b.x;
  }
  return area;
}

// Removes consecutive duplicates (cyclically) and points in the interior of
// an edge. Returns false when a point makes the boundary fold back on itself.
bool simplify_ring(std::vector<LatticePoint>& ring) {
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& prev = ring[(i + ring.size() - 1) % ring.size()];
      const auto& cur = ring[i];
      const auto& next = ring[(i + 1) % ring.size()];
      const Vec in = cur - prev;
      const Vec out = next - cur;
      if (cross(in, out) == 0) {
        if (dot(in, out) < 0) return false;
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return true;
}

int sum(const std::vector<int>& values, int count) {
  return std::accumulate(values.begin(), values.begin() + count, 0);
}

std::vector<int> parse_csv_ints(std::string_view text, std::string_view key) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw ParseError(0, "bad integer list for " + std::string(key) + ": '" + std::string(text) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

int parse_int(std::string_view text, std::string_view key) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError(0, "bad integer for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

HTransversePolygon HTransversePolygon::from_quadruple(std::vector<int> left, std::vector<int> right,
                                                      int d_minus, int d_plus) {
  if (left.empty() || right.empty()) {
    throw PolygonError(PolygonErrc::empty_height, "no left or right directions");
  }
  if (left.size() != right.size()) {
    throw PolygonError(PolygonErrc::closure_violated,
                       "left and right direction counts differ (" + std::to_string(left.size()) +
                           " vs " + std::to_string(right.size()) + ")");
  }
  if (d_minus < 0 || d_plus < 0) {
    throw PolygonError(PolygonErrc::width_violated, "negative horizontal edge length");
  }
  std::sort(left.begin(), left.end(), std::greater<>());
  std::sort(right.begin(), right.end());

  HTransversePolygon p;
  p.left_ = std::move(left);
  p.right_ = std::move(right);
  p.d_minus_ = d_minus;
  p.d_plus_ = d_plus;

  const int h = p.height();
  const int expected_top = d_minus + sum(p.left_, h) - sum(p.right_, h);
  if (d_plus != expected_top) {
    throw PolygonError(PolygonErrc::closure_violated,
                       "top length " + std::to_string(d_plus) + " but the sides close at " +
                           std::to_string(expected_top));
  }
  bool any_positive = false;
  for (int k = 0; k <= h; ++k) {
    const std::int64_t w = p.width(k);
    const bool interior = k > 0 && k < h;
    if (w < 0 || (interior && w == 0)) {
      throw PolygonError(PolygonErrc::width_violated,
                         "width " + std::to_string(w) + " at height " + std::to_string(k));
    }
    any_positive = any_positive || w > 0;
  }
  if (!any_positive) {
    throw PolygonError(PolygonErrc::width_violated, "polygon is a segment");
  }
  return p;
}

HTransversePolygon HTransversePolygon::from_vertices(std::span<const LatticePoint> vertices) {
  std::vector<LatticePoint> ring(vertices.begin(), vertices.end());
  const bool flat = std::all_of(ring.begin(), ring.end(), [&](const LatticePoint& q) {
    return ring.size() < 3 || cross(ring[1] - ring[0], q - ring[0]) == 0;
  });
  if (flat) throw PolygonError(PolygonErrc::not_two_dimensional, "vertices are collinear");
  if (!simplify_ring(ring)) {
    throw PolygonError(PolygonErrc::not_convex, "boundary folds back on itself");
  }
  if (ring.size() < 3 || signed_area2(ring) == 0) {
    throw PolygonError(PolygonErrc::not_two_dimensional, "vertices are collinear");
  }
  if (signed_area2(ring) < 0) std::reverse(ring.begin(), ring.end());

  const std::size_t n = ring.size();
  int wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec in = ring[i] - ring[(i + n - 1) % n];
    const Vec out = ring[(i + 1) % n] - ring[i];
    if (cross(in, out) <= 0) {
      throw PolygonError(PolygonErrc::not_convex, "reflex or degenerate corner");
    }
    if (angle_less(out, in)) ++wraps;
  }
  if (wraps != 1) {
    throw PolygonError(PolygonErrc::not_convex, "boundary winds more than once");
  }

  std::vector<int> left;
  std::vector<int> right;
  int d_minus = 0;
  int d_plus = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = ring[(i + 1) % n] - ring[i];
    const std::int64_t length = std::gcd(e.x < 0 ? -e.x : e.x, e.y < 0 ? -e.y : e.y);
    if (e.y == 0) {
      (e.x > 0 ? d_minus : d_plus) = static_cast<int>(length);
      continue;
    }
    if ((e.y < 0 ? -e.y : e.y) != length) {
      throw PolygonError(PolygonErrc::not_h_transverse,
                         "side edge (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                             ") has primitive vector not of the form (a,+-1)");
    }
    const int alpha = static_cast<int>(-e.x / e.y);
    auto& side = e.y > 0 ? right : left;
    side.insert(side.end(), static_cast<std::size_t>(length), alpha);
  }
  return from_quadruple(std::move(left), std::move(right), d_minus, d_plus);
}

std::int64_t HTransversePolygon::left_x(int k) const { return -sum(left_, k); }

std::int64_t HTransversePolygon::right_x(int k) const { return d_minus_ - sum(right_, k); }

std::vector<LatticePoint> HTransversePolygon::reconstruct_vertices() const {
  const int h = height();
  std::vector<LatticePoint> ring;
  ring.push_back({0, 0});
  ring.push_back({d_minus_, 0});
  for (int k = 1; k <= h; ++k) ring.push_back({right_x(k), k});
  for (int k = h; k >= 1; --k) ring.push_back({left_x(k), k});
  simplify_ring(ring);  // the origin is a corner, so it stays in front
  return ring;
}

HTransversePolygon delta_d(int d) {
  if (d < 1) throw RangeError("degree must be at least 1");
  return HTransversePolygon::from_quadruple(std::vector<int>(d, 0), std::vector<int>(d, 1), d, 0);
}

HTransversePolygon hirzebruch_polygon(int n, int a, int b) {
  if (n < 0 || a < 1 || b < 0) throw RangeError("hirzebruch polygon needs n >= 0, a >= 1, b >= 0");
  const std::int64_t na = static_cast<std::int64_t>(n) * a;
  const std::vector<LatticePoint> vertices{{0, 0}, {na + b, 0}, {b, a}, {0, a}};
  return HTransversePolygon::from_vertices(vertices);
}

int boundary_lattice_count(const HTransversePolygon& p) {
  return 2 * p.height() + p.d_minus() + p.d_plus();
}

int configuration_size(const HTransversePolygon& p, int genus) {
  if (genus < 0) throw RangeError("genus must be non-negative");
  return boundary_lattice_count(p) + genus - 1;
}

int interior_lattice_count(const HTransversePolygon& p) {
  const auto ring = p.reconstruct_vertices();
  std::int64_t min_x = ring.front().x, max_x = ring.front().x;
  std::int64_t min_y = ring.front().y, max_y = ring.front().y;
  for (const auto& v : ring) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  int count = 0;
  for (std::int64_t y = min_y; y <= max_y; ++y) {
    for (std::int64_t x = min_x; x <= max_x; ++x) {
      const LatticePoint q{x, y};
      bool inside = true;
      for (std::size_t i = 0; i < ring.size() && inside; ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % ring.size()];
        inside = cross(b - a, q - a) > 0;
      }
      count += inside ? 1 : 0;
    }
  }
  return count;
}

std::string to_text(const HTransversePolygon& p) {
  std::ostringstream out;
  const auto csv = [&out](const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  };
  out << "polygon dl=";
  csv(p.left_directions());
  out << " dr=";
  csv(p.right_directions());
  out << " dminus=" << p.d_minus() << " dplus=" << p.d_plus();
  return out.str();
}

HTransversePolygon parse_polygon_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) tokens.push_back(token);
  if (tokens.size() != 5 || tokens[0] != "polygon") {
    throw ParseError(0, "expected 'polygon dl=... dr=... dminus=... dplus=...'");
  }
  constexpr std::string_view keys[] = {"dl", "dr", "dminus", "dplus"};
  std::string_view values[4];
  for (int i = 0; i < 4; ++i) {
    std::string_view token = tokens[static_cast<std::size_t>(i) + 1];
    const auto eq = token.find('=');
    if (eq == std::string_view::npos || token.substr(0, eq) != keys[i]) {
      throw ParseError(0, "expected field '" + std::string(keys[i]) + "=' in position " +
                              std::to_string(i + 1));
    }
    values[i] = token.substr(eq + 1);
  }
  return HTransversePolygon::from_quadruple(parse_csv_ints(values[0], keys[0]),
                                            parse_csv_ints(values[1], keys[1]),
                                            parse_int(values[2], keys[2]),
                                            parse_int(values[3], keys[3]));
}

}  // namespace floorcount
