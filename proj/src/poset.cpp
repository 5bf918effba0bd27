#include "floorcount/poset.hpp"

#include <bit>
#include <unordered_map>

#include "floorcount/errors.hpp"

namespace floorcount {

namespace {

constexpr std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

}  // namespace

ElementPoset::ElementPoset(int size) : size_(size), below_(static_cast<std::size_t>(size), 0) {
  if (size < 0 || size > max_size) {
    throw RangeError("poset with " + std::to_string(size) + " elements exceeds the limit of " +
                     std::to_string(max_size));
  }
}

void ElementPoset::add_cover(int lower, int upper) {
  if (lower < 0 || lower >= size_ || upper < 0 || upper >= size_ || lower == upper) {
    throw std::out_of_range("bad cover relation");
  }
  covers_.emplace_back(lower, upper);
  below_[static_cast<std::size_t>(upper)] |= bit(lower);
}

bool ElementPoset::is_acyclic() const {
  std::uint64_t placed = 0;
  for (int round = 0; round < size_; ++round) {
    bool progressed = false;
    for (int x = 0; x < size_; ++x) {
      if (!(placed & bit(x)) && (below(x) & ~placed) == 0) {
        placed |= bit(x);
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  return std::popcount(placed) == size_;
}

ElementPoset element_poset(const FloorDiagram& d) {
  ElementPoset p(d.element_count());
  for (std::size_t i = 0; i < d.elevators.size(); ++i) {
    const int e = d.elevator_element(static_cast<int>(i));
    p.add_cover(d.elevators[i].src, e);
    p.add_cover(e, d.elevators[i].dst);
  }
  for (std::size_t i = 0; i < d.bottoms.size(); ++i) {
    p.add_cover(d.bottom_element(static_cast<int>(i)), d.bottoms[i].vertex);
  }
  for (std::size_t i = 0; i < d.tops.size(); ++i) {
    p.add_cover(d.tops[i].vertex, d.top_element(static_cast<int>(i)));
  }
  return p;
}

BigInt count_linear_extensions(const ElementPoset& p) {
  if (!p.is_acyclic()) throw ValidationError("poset relations contain a cycle");
  std::unordered_map<std::uint64_t, BigInt> layer{{0, BigInt(1)}};
  for (int size = 0; size < p.size(); ++size) {
    std::unordered_map<std::uint64_t, BigInt> next;
    next.reserve(layer.size() * 2);
    for (const auto& [downset, ways] : layer) {
      for (int x = 0; x < p.size(); ++x) {
        if (!(downset & bit(x)) && (p.below(x) & ~downset) == 0) next[downset | bit(x)] += ways;
      }
    }
    layer = std::move(next);
  }
  return layer.empty() ? BigInt(0) : layer.begin()->second;
}

bool for_each_linear_extension(const ElementPoset& p,
                               const std::function<bool(std::span<const int>)>& visit) {
  if (!p.is_acyclic()) throw ValidationError("poset relations contain a cycle");
  std::vector<int> sequence;
  sequence.reserve(static_cast<std::size_t>(p.size()));
  const auto recurse = [&](auto&& self, std::uint64_t placed) -> bool {
    if (static_cast<int>(sequence.size()) == p.size()) return visit(sequence);
    for (int x = 0; x < p.size(); ++x) {
      if ((placed & bit(x)) || (p.below(x) & ~placed) != 0) continue;
      sequence.push_back(x);
      const bool keep_going = self(self, placed | bit(x));
      sequence.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return recurse(recurse, 0);
}

}  // namespace floorcount
