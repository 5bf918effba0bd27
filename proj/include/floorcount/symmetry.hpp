#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/diagram.hpp"

namespace floorcount {

/// Identifies a floor diagram up to isomorphism. Keys are totally ordered
/// by byte comparison.
using CanonicalKey = std::string;

struct CanonicalForm {
  /// The relabeled diagram with default ids; elevators sorted by
  /// (src, dst, weight), leaf edges by floor.
  FloorDiagram diagram;
  CanonicalKey key;
  /// Original element -> element of `diagram`.
  std::vector<int> element_map;
};

CanonicalForm canonicalize(const FloorDiagram& d);
CanonicalKey canonical_key(const FloorDiagram& d);

/// The automorphism group of a floor diagram: relabelings preserving theta,
/// weights, orientation and edge kinds. Parallel elevators of equal weight
/// and leaf edges of the same kind on the same floor ("twins") are freely
/// interchangeable, so the group is (vertex automorphisms) x (twin swaps).
class SymmetryGroup {
 public:
  explicit SymmetryGroup(const FloorDiagram& d);

  /// Each entry maps floor v to its image; the identity is always first.
  const std::vector<std::vector<int>>& vertex_automorphisms() const noexcept { return vertex_autos_; }
  /// Classes of interchangeable edges, each sorted, only classes of size >= 2.
  const std::vector<std::vector<int>>& twin_classes() const noexcept { return twins_; }

  BigInt order() const;

  /// Sorts twins so that within every class the smaller element comes first.
  void twin_sort(std::span<int> sequence) const;

  /// Lexicographically smallest image of an element sequence under the group.
  std::vector<int> orbit_minimal(std::span<const int> sequence) const;

  bool equivalent(std::span<const int> a, std::span<const int> b) const {
    return orbit_minimal(a) == orbit_minimal(b);
  }

  /// Calls f on the image of `sequence` under every group element.
  template <class F>
  void for_each_image(std::span<const int> sequence, F&& f) const;

 private:
  std::vector<std::vector<int>> vertex_autos_;
  // element_images_[k][x] is the image of element x under vertex automorphism
  // k with twins matched in storage order.
  std::vector<std::vector<int>> element_images_;
  std::vector<std::vector<int>> twins_;
  std::vector<int> twin_class_of_;
};

BigInt automorphism_count(const FloorDiagram& d);

/// True iff both diagrams are isomorphic and an isomorphism carries the i-th
/// marked element of `a` to the i-th marked element of `b` for every i.
bool marked_equivalent(const MarkedFloorDiagram& a, const MarkedFloorDiagram& b);

/// The representative of the marked diagram's equivalence class in canonical
/// labeling.
MarkedFloorDiagram canonical_marked(const MarkedFloorDiagram& m);

template <class F>
void SymmetryGroup::for_each_image(std::span<const int> sequence, F&& f) const {
  std::vector<int> base(sequence.size());
  std::vector<int> image(sequence.size());
  for (const auto& map : element_images_) {
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      base[i] = map[static_cast<std::size_t>(sequence[i])];
    }
    twin_sort(base);
    // Walk all arrangements of every twin class over its positions.
    std::vector<std::vector<std::size_t>> positions(twins_.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      const int c = twin_class_of_[static_cast<std::size_t>(base[i])];
      if (c >= 0) positions[static_cast<std::size_t>(c)].push_back(i);
    }
    std::vector<std::vector<int>> arrangement = twins_;
    const auto recurse = [&](auto&& self, std::size_t c) -> void {
      if (c == twins_.size()) {
        image = base;
        for (std::size_t k = 0; k < twins_.size(); ++k) {
          for (std::size_t j = 0; j < positions[k].size(); ++j) image[positions[k][j]] = arrangement[k][j];
        }
        f(std::span<const int>(image));
        return;
      }
      std::sort(arrangement[c].begin(), arrangement[c].end());
      do {
        self(self, c + 1);
      } while (std::next_permutation(arrangement[c].begin(), arrangement[c].end()));
    };
    recurse(recurse, 0);
  }
}

}  // namespace floorcount
