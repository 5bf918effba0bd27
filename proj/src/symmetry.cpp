#include "floorcount/symmetry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace floorcount {

namespace {

using EdgeTriple = std::array<int, 3>;

// Isomorphism-invariant vertex colors by iterated neighborhood refinement.
// Colors are ranks of signatures within the diagram; the depth of a floor
// comes first, so canonical ids follow height.
std::vector<int> refine_colors(const FloorDiagram& d) {
  const auto n = static_cast<std::size_t>(d.vertex_count());
  std::vector<int> depth(n, 0);
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (const auto& e : d.elevators) {
      auto& dst = depth[static_cast<std::size_t>(e.dst)];
      const int cand = depth[static_cast<std::size_t>(e.src)] + 1;
      if (cand > dst && cand < static_cast<int>(n)) {
        dst = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<std::vector<int>> signature(n);
  for (std::size_t v = 0; v < n; ++v) signature[v] = {depth[v], d.floors[v].theta, 0, 0};
  for (const auto& e : d.bottoms) ++signature[static_cast<std::size_t>(e.vertex)][2];
  for (const auto& e : d.tops) ++signature[static_cast<std::size_t>(e.vertex)][3];

  const auto rank = [n](const std::vector<std::vector<int>>& sigs) {
    std::vector<std::vector<int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (std::size_t v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
    }
    return std::pair{colors, sorted.size()};
  };

  auto [colors, classes] = rank(signature);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<int>> next(n);
    std::vector<std::vector<EdgeTriple>> neighbors(n);
    for (const auto& e : d.elevators) {
      neighbors[static_cast<std::size_t>(e.src)].push_back({1, e.weight, colors[static_cast<std::size_t>(e.dst)]});
      neighbors[static_cast<std::size_t>(e.dst)].push_back({0, e.weight, colors[static_cast<std::size_t>(e.src)]});
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(neighbors[v].begin(), neighbors[v].end());
      next[v] = {colors[v]};
      for (const auto& t : neighbors[v]) next[v].insert(next[v].end(), t.begin(), t.end());
    }
    auto [refined, refined_classes] = rank(next);
    colors = std::move(refined);
    if (refined_classes == classes) break;
    classes = refined_classes;
  }
  return colors;
}

struct OrderSearch {
  // Each order lists original floors by new index. All optimal orders
  // produce the same relabeled diagram; the first one is the chosen one.
  std::vector<std::vector<int>> optimal_orders;
  std::vector<EdgeTriple> best_edges;
};

std::vector<int> inverse(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return pos;
}

OrderSearch search_orders(const FloorDiagram& d) {
  const auto colors = refine_colors(d);
  std::vector<int> order(d.floors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && colors[static_cast<std::size_t>(order[j])] == colors[static_cast<std::size_t>(order[i])]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  OrderSearch result;
  std::vector<EdgeTriple> edges(d.elevators.size());
  const auto evaluate = [&] {
    const auto pos = inverse(order);
    for (std::size_t i = 0; i < d.elevators.size(); ++i) {
      const auto& e = d.elevators[i];
      edges[i] = {pos[static_cast<std::size_t>(e.src)], pos[static_cast<std::size_t>(e.dst)], e.weight};
    }
    std::sort(edges.begin(), edges.end());
    if (result.optimal_orders.empty() || edges < result.best_edges) {
      result.best_edges = edges;
      result.optimal_orders.assign(1, order);
    } else if (edges == result.best_edges) {
      result.optimal_orders.push_back(order);
    }
  };
  const auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      evaluate();
      return;
    }
    const auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    const auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return result;
}

// Elements of one kind grouped by their attachment; members in storage order.
struct EdgeClasses {
  std::map<EdgeTriple, std::vector<int>> elevators;
  std::map<int, std::vector<int>> bottoms;
  std::map<int, std::vector<int>> tops;
};

EdgeClasses edge_classes(const FloorDiagram& d) {
  EdgeClasses classes;
  for (std::size_t i = 0; i < d.elevators.size(); ++i) {
    const auto& e = d.elevators[i];
    classes.elevators[{e.src, e.dst, e.weight}].push_back(d.elevator_element(static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < d.bottoms.size(); ++i) {
    classes.bottoms[d.bottoms[i].vertex].push_back(d.bottom_element(static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < d.tops.size(); ++i) {
    classes.tops[d.tops[i].vertex].push_back(d.top_element(static_cast<int>(i)));
  }
  return classes;
}

// Maps every element of `from` to `to` along a floor bijection, matching
// twins in storage order.
std::vector<int> induced_element_map(const FloorDiagram& from, const EdgeClasses& from_classes,
                                     const EdgeClasses& to_classes, const std::vector<int>& floor_map) {
  std::vector<int> map(static_cast<std::size_t>(from.element_count()), -1);
  for (int v = 0; v < from.vertex_count(); ++v) map[static_cast<std::size_t>(v)] = floor_map[static_cast<std::size_t>(v)];
  const auto assign = [&map](const std::vector<int>& src, const std::vector<int>& dst) {
    for (std::size_t j = 0; j < src.size(); ++j) map[static_cast<std::size_t>(src[j])] = dst.at(j);
  };
  for (const auto& [triple, members] : from_classes.elevators) {
    const EdgeTriple image{floor_map[static_cast<std::size_t>(triple[0])], floor_map[static_cast<std::size_t>(triple[1])], triple[2]};
    assign(members, to_classes.elevators.at(image));
  }
  for (const auto& [v, members] : from_classes.bottoms) {
    assign(members, to_classes.bottoms.at(floor_map[static_cast<std::size_t>(v)]));
  }
  for (const auto& [v, members] : from_classes.tops) {
    assign(members, to_classes.tops.at(floor_map[static_cast<std::size_t>(v)]));
  }
  return map;
}

}  // namespace

CanonicalForm canonicalize(const FloorDiagram& d) {
  const OrderSearch search = search_orders(d);
  const auto& order = search.optimal_orders.front();
  const auto pos = inverse(order);

  CanonicalForm form;
  FloorDiagram& c = form.diagram;
  for (int old : order) c.floors.push_back({"", d.floors[static_cast<std::size_t>(old)].theta});
  for (const auto& [src, dst, w] : search.best_edges) c.elevators.push_back({"", src, dst, w});
  for (const auto& e : d.bottoms) c.bottoms.push_back({"", pos[static_cast<std::size_t>(e.vertex)]});
  for (const auto& e : d.tops) c.tops.push_back({"", pos[static_cast<std::size_t>(e.vertex)]});
  const auto by_vertex = [](const LeafEdge& a, const LeafEdge& b) { return a.vertex < b.vertex; };
  std::stable_sort(c.bottoms.begin(), c.bottoms.end(), by_vertex);
  std::stable_sort(c.tops.begin(), c.tops.end(), by_vertex);
  c.assign_default_ids();

  form.element_map = induced_element_map(d, edge_classes(d), edge_classes(c), pos);

  std::ostringstream key;
  key << "h" << c.vertex_count() << "|";
  std::vector<std::array<int, 3>> labels(c.floors.size(), {0, 0, 0});
  for (std::size_t v = 0; v < c.floors.size(); ++v) labels[v][0] = c.floors[v].theta;
  for (const auto& e : c.bottoms) ++labels[static_cast<std::size_t>(e.vertex)][1];
  for (const auto& e : c.tops) ++labels[static_cast<std::size_t>(e.vertex)][2];
  for (const auto& [theta, nb, nt] : labels) key << theta << "." << nb << "." << nt << ",";
  key << "|";
  for (const auto& [src, dst, w] : search.best_edges) key << src << ">" << dst << "*" << w << ",";
  form.key = key.str();
  return form;
}

CanonicalKey canonical_key(const FloorDiagram& d) { return canonicalize(d).key; }

SymmetryGroup::SymmetryGroup(const FloorDiagram& d) {
  const OrderSearch search = search_orders(d);
  const auto pos0 = inverse(search.optimal_orders.front());
  const EdgeClasses classes = edge_classes(d);
  for (const auto& order : search.optimal_orders) {
    std::vector<int> sigma(pos0.size());
    for (std::size_t v = 0; v < pos0.size(); ++v) sigma[v] = order[static_cast<std::size_t>(pos0[v])];
    element_images_.push_back(induced_element_map(d, classes, classes, sigma));
    vertex_autos_.push_back(std::move(sigma));
  }

  twin_class_of_.assign(static_cast<std::size_t>(d.element_count()), -1);
  const auto add = [this](const std::vector<int>& members) {
    if (members.size() < 2) return;
    for (int e : members) twin_class_of_[static_cast<std::size_t>(e)] = static_cast<int>(twins_.size());
    twins_.push_back(members);
  };
  for (const auto& [triple, members] : classes.elevators) add(members);
  for (const auto& [v, members] : classes.bottoms) add(members);
  for (const auto& [v, members] : classes.tops) add(members);
}

BigInt SymmetryGroup::order() const {
  BigInt result = static_cast<unsigned long>(vertex_autos_.size());
  for (const auto& c : twins_) result *= factorial(c.size());
  return result;
}

void SymmetryGroup::twin_sort(std::span<int> sequence) const {
  std::vector<std::vector<int>> present(twins_.size());
  for (int e : sequence) {
    const int c = twin_class_of_[static_cast<std::size_t>(e)];
    if (c >= 0) present[static_cast<std::size_t>(c)].push_back(e);
  }
  for (auto& members : present) std::sort(members.begin(), members.end());
  std::vector<std::size_t> next(twins_.size(), 0);
  for (int& e : sequence) {
    const int c = twin_class_of_[static_cast<std::size_t>(e)];
    if (c >= 0) e = present[static_cast<std::size_t>(c)][next[static_cast<std::size_t>(c)]++];
  }
}

std::vector<int> SymmetryGroup::orbit_minimal(std::span<const int> sequence) const {
  std::vector<int> best;
  std::vector<int> image(sequence.size());
  for (const auto& map : element_images_) {
    for (std::size_t i = 0; i < sequence.size(); ++i) image[i] = map[static_cast<std::size_t>(sequence[i])];
    twin_sort(image);
    if (best.empty() || image < best) best = image;
  }
  return best;
}

BigInt automorphism_count(const FloorDiagram& d) { return SymmetryGroup(d).order(); }

namespace {

std::vector<int> mapped(const std::vector<int>& element_map, const Marking& m) {
  std::vector<int> result;
  result.reserve(m.sequence.size());
  for (int e : m.sequence) result.push_back(element_map.at(static_cast<std::size_t>(e)));
  return result;
}

}  // namespace

bool marked_equivalent(const MarkedFloorDiagram& a, const MarkedFloorDiagram& b) {
  const CanonicalForm ca = canonicalize(a.diagram);
  const CanonicalForm cb = canonicalize(b.diagram);
  if (ca.key != cb.key || a.marking.sequence.size() != b.marking.sequence.size()) return false;
  const SymmetryGroup group(ca.diagram);
  return group.equivalent(mapped(ca.element_map, a.marking), mapped(cb.element_map, b.marking));
}

MarkedFloorDiagram canonical_marked(const MarkedFloorDiagram& m) {
  CanonicalForm form = canonicalize(m.diagram);
  const SymmetryGroup group(form.diagram);
  Marking marking{group.orbit_minimal(mapped(form.element_map, m.marking))};
  return {std::move(form.diagram), std::move(marking)};
}

}  // namespace floorcount
