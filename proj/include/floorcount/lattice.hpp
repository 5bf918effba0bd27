#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace floorcount {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const LatticePoint&) const = default;
};

/// An h-transverse lattice polygon, identified by its quadruple
/// (left directions, right directions, bottom length, top length).
///
/// Left directions are kept sorted non-increasing and right directions
/// non-decreasing, which is the order in which they occur walking the
/// boundary from bottom to top. Two polygons compare equal iff they agree
/// up to translation.
class HTransversePolygon {
 public:
  /// Validates and normalizes a raw quadruple. Throws PolygonError with
  /// closure_violated, width_violated or empty_height.
  static HTransversePolygon from_quadruple(std::vector<int> left, std::vector<int> right,
                                           int d_minus, int d_plus);

  /// Accepts the vertices of a convex lattice polygon in either orientation.
  /// Collinear boundary points are tolerated. Throws PolygonError with
  /// not_convex, not_two_dimensional or not_h_transverse.
  static HTransversePolygon from_vertices(std::span<const LatticePoint> vertices);

  const std::vector<int>& left_directions() const noexcept { return left_; }
  const std::vector<int>& right_directions() const noexcept { return right_; }
  int d_minus() const noexcept { return d_minus_; }
  int d_plus() const noexcept { return d_plus_; }
  int height() const noexcept { return static_cast<int>(left_.size()); }

  /// x-coordinate of the left (right) boundary at height k, with the
  /// bottom-left boundary point at the origin.
  std::int64_t left_x(int k) const;
  std::int64_t right_x(int k) const;
  std::int64_t width(int k) const { return right_x(k) - left_x(k); }

  /// Counterclockwise vertex list starting at the bottom-left boundary point,
  /// which is placed at the origin. Collinear points are dropped.
  std::vector<LatticePoint> reconstruct_vertices() const;

  bool operator==(const HTransversePolygon&) const = default;

 private:
  HTransversePolygon() = default;

  std::vector<int> left_;
  std::vector<int> right_;
  int d_minus_ = 0;
  int d_plus_ = 0;
};

/// The triangle with vertices (0,0), (d,0), (0,d).
HTransversePolygon delta_d(int d);

/// The polygon with vertices (0,0), (na+b,0), (0,a), (b,a).
HTransversePolygon hirzebruch_polygon(int n, int a, int b);

/// Number of lattice points on the boundary: 2*height + d_- + d_+.
int boundary_lattice_count(const HTransversePolygon& p);

/// Number of points a curve of genus g must pass through.
int configuration_size(const HTransversePolygon& p, int genus);

/// Number of interior lattice points, by a direct scan of the polygon.
int interior_lattice_count(const HTransversePolygon& p);

/// `polygon dl=<csv> dr=<csv> dminus=<int> dplus=<int>`
std::string to_text(const HTransversePolygon& p);

/// Inverse of to_text. Throws ParseError on malformed text and PolygonError
/// when the quadruple is not a valid polygon.
HTransversePolygon parse_polygon_text(std::string_view text);

}  // namespace floorcount
