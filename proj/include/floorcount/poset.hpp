#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/diagram.hpp"

namespace floorcount {

/// A finite poset on {0, .., size-1} given by cover relations. Limited to 64
/// elements so that down-sets fit in a machine word.
class ElementPoset {
 public:
  static constexpr int max_size = 64;

  explicit ElementPoset(int size);

  int size() const noexcept { return size_; }
  void add_cover(int lower, int upper);
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }
  /// Bitmask of the elements covered by x.
  std::uint64_t below(int x) const { return below_[static_cast<std::size_t>(x)]; }
  bool is_acyclic() const;

 private:
  int size_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> below_;
};

/// src < e < dst for elevators, e < dst for bottom edges, src < e for top
/// edges. Element numbering follows FloorDiagram.
ElementPoset element_poset(const FloorDiagram& d);

/// Exact count by dynamic programming over down-sets, one layer of
/// down-set size at a time.
BigInt count_linear_extensions(const ElementPoset& p);

/// Visits linear extensions in lexicographic order. The callback returns
/// false to stop early; the function returns false if it was stopped.
bool for_each_linear_extension(const ElementPoset& p,
                               const std::function<bool(std::span<const int>)>& visit);

}  // namespace floorcount
