#include "floorcount/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <compare>
#include <functional>
#include <map>
#include <stdexcept>

#include "floorcount/errors.hpp"
#include "floorcount/poset.hpp"
#include "parallel.hpp"

namespace floorcount {

namespace {

std::atomic<std::uint64_t> g_enumeration_runs{0};

struct Label {
  int theta;
  int right;
  int bottoms;
  int tops;

  auto operator<=>(const Label&) const = default;
};

struct OpenGroup {
  int src;
  int weight;
  int count;
};

std::vector<std::pair<int, int>> value_counts(const std::vector<int>& values) {
  std::map<int, int> counts;
  for (int v : values) ++counts[v];
  return {counts.begin(), counts.end()};
}

// Calls f for every non-increasing sequence of positive parts summing to
// `total` with at most `max_parts` parts.
void for_each_partition(int total, int max_parts, bool reverse,
                        const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts;
  const auto recurse = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      f(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == max_parts) return;
    const int hi = std::min(left, cap);
    for (int i = 0; i < hi; ++i) {
      const int part = reverse ? 1 + i : hi - i;
      parts.push_back(part);
      self(self, left - part, part);
      parts.pop_back();
    }
  };
  recurse(recurse, total, total);
}

// Builds diagrams floor by floor along a topological order. Each floor takes
// a theta label and a right value, some bottom and top edges, absorbs open
// elevators from earlier floors and emits new ones so that divergence equals
// right - theta.
//
// Topological orders are pruned to those where every floor's label is not
// smaller than the label of any earlier floor placed after its last
// predecessor. The greedy smallest-label topological order satisfies this,
// so every isomorphism class is still reached.
class Sweep {
 public:
  Sweep(const HTransversePolygon& p, int genus, bool reverse, int worker, int workers,
        std::function<void(FloorDiagram)> emit)
      : height_(p.height()),
        edge_budget_(p.height() - 1 + genus),
        reverse_(reverse),
        worker_(worker),
        workers_(workers),
        thetas_(value_counts(p.left_directions())),
        rights_(value_counts(p.right_directions())),
        bottoms_left_(p.d_minus()),
        tops_left_(p.d_plus()),
        emit_(std::move(emit)) {}

  void run() {
    if (edge_budget_ < height_ - 1) return;
    place(0);
  }

 private:
  int index(int i, int size) const { return reverse_ ? size - 1 - i : i; }

  void place(int k) {
    if (k == height_) {
      finish();
      return;
    }
    const bool last = k == height_ - 1;
    for (int ti = 0; ti < static_cast<int>(thetas_.size()); ++ti) {
      auto& [theta, theta_count] = thetas_[static_cast<std::size_t>(index(ti, static_cast<int>(thetas_.size())))];
      if (theta_count == 0) continue;
      --theta_count;
      for (int ri = 0; ri < static_cast<int>(rights_.size()); ++ri) {
        auto& [right, right_count] = rights_[static_cast<std::size_t>(index(ri, static_cast<int>(rights_.size())))];
        if (right_count == 0) continue;
        --right_count;
        const int nb_lo = last ? bottoms_left_ : 0;
        const int nt_lo = last ? tops_left_ : 0;
        for (int bi = 0; bi <= bottoms_left_ - nb_lo; ++bi) {
          const int nb = reverse_ ? bottoms_left_ - bi : nb_lo + bi;
          for (int ci = 0; ci <= tops_left_ - nt_lo; ++ci) {
            const int nt = reverse_ ? tops_left_ - ci : nt_lo + ci;
            std::vector<int> take(open_.size(), 0);
            absorb(k, Label{theta, right, nb, nt}, take, 0, 0, -1);
          }
        }
        ++right_count;
      }
      ++theta_count;
    }
  }

  void absorb(int k, const Label& label, std::vector<int>& take, std::size_t group, int weight_in,
              int last_pred) {
    const bool last = k == height_ - 1;
    if (group < open_.size()) {
      const OpenGroup g = open_[group];
      const int lo = last ? g.count : 0;
      for (int i = 0; i <= g.count - lo; ++i) {
        const int c = reverse_ ? g.count - i : lo + i;
        take[group] = c;
        absorb(k, label, take, group + 1, weight_in + c * g.weight,
               c > 0 ? std::max(last_pred, g.src) : last_pred);
      }
      take[group] = 0;
      return;
    }

    for (int t = last_pred + 1; t < k; ++t) {
      if (labels_[static_cast<std::size_t>(t)] > label) return;
    }
    const int weight_out = weight_in + label.bottoms - label.tops - (label.right - label.theta);
    if (weight_out < 0 || (last && weight_out != 0)) return;
    if (height_ > 1 && weight_in == 0 && weight_out == 0) return;  // isolated floor

    int open_after = 0;
    for (std::size_t j = 0; j < open_.size(); ++j) open_after += open_[j].count - take[j];
    if (!last && open_after == 0 && weight_out == 0) return;  // prefix cut off from the rest

    const int max_parts = edge_budget_ - emitted_;
    for_each_partition(weight_out, max_parts, reverse_, [&](const std::vector<int>& parts) {
      if (k == 0 && branch_++ % static_cast<std::uint64_t>(workers_) != static_cast<std::uint64_t>(worker_)) return;
      descend(k, label, take, parts);
    });
  }

  void descend(int k, const Label& label, const std::vector<int>& take, const std::vector<int>& parts) {
    const std::size_t edges_before = edges_.size();
    const std::vector<OpenGroup> open_before = open_;
    for (std::size_t j = 0; j < take.size(); ++j) {
      for (int c = 0; c < take[j]; ++c) edges_.push_back({"", open_[j].src, k, open_[j].weight});
      open_[j].count -= take[j];
    }
    std::erase_if(open_, [](const OpenGroup& g) { return g.count == 0; });
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      open_.push_back({k, parts[i], static_cast<int>(j - i)});
      i = j;
    }
    emitted_ += static_cast<int>(parts.size());
    labels_.push_back(label);
    bottoms_left_ -= label.bottoms;
    tops_left_ -= label.tops;

    place(k + 1);

    bottoms_left_ += label.bottoms;
    tops_left_ += label.tops;
    labels_.pop_back();
    emitted_ -= static_cast<int>(parts.size());
    open_ = open_before;
    edges_.resize(edges_before);
  }

  void finish() {
    if (!open_.empty() || bottoms_left_ != 0 || tops_left_ != 0) return;
    if (static_cast<int>(edges_.size()) != edge_budget_) return;
    FloorDiagram d;
    for (const Label& l : labels_) d.floors.push_back({"", l.theta});
    d.elevators = edges_;
    for (int v = 0; v < height_; ++v) {
      for (int i = 0; i < labels_[static_cast<std::size_t>(v)].bottoms; ++i) d.bottoms.push_back({"", v});
      for (int i = 0; i < labels_[static_cast<std::size_t>(v)].tops; ++i) d.tops.push_back({"", v});
    }
    if (!d.is_connected()) return;
    d.assign_default_ids();
    emit_(std::move(d));
  }

  int height_;
  int edge_budget_;
  bool reverse_;
  int worker_;
  int workers_;
  std::vector<std::pair<int, int>> thetas_;
  std::vector<std::pair<int, int>> rights_;
  int bottoms_left_;
  int tops_left_;
  std::function<void(FloorDiagram)> emit_;

  std::vector<Label> labels_;
  std::vector<Elevator> edges_;
  std::vector<OpenGroup> open_;
  int emitted_ = 0;
  std::uint64_t branch_ = 0;
};

}  // namespace

std::uint64_t enumeration_runs() noexcept { return g_enumeration_runs.load(); }

DiagramInventory enumerate_diagrams(const HTransversePolygon& p, int genus,
                                    const EnumerationOptions& options) {
  if (genus < 0) throw RangeError("genus must be non-negative");
  ++g_enumeration_runs;
  const int workers = std::max(options.jobs, 1);

  std::vector<std::map<CanonicalKey, FloorDiagram>> found(static_cast<std::size_t>(workers));
  detail::parallel_for(static_cast<std::size_t>(workers), workers, [&](std::size_t w) {
    auto& bucket = found[w];
    Sweep sweep(p, genus, options.reverse_choice_order, static_cast<int>(w), workers,
                [&bucket](FloorDiagram d) {
                  CanonicalForm form = canonicalize(d);
                  bucket.try_emplace(std::move(form.key), std::move(form.diagram));
                });
    sweep.run();
  });
  std::map<CanonicalKey, FloorDiagram> merged;
  for (auto& bucket : found) merged.merge(bucket);

  DiagramInventory inventory{p, genus, {}};
  for (auto& [key, diagram] : merged) inventory.entries.push_back({std::move(diagram), key, 0, 0, 0});
  detail::parallel_for(inventory.entries.size(), workers, [&](std::size_t i) {
    InventoryEntry& entry = inventory.entries[i];
    if (!validate_diagram(entry.diagram, p, genus).empty()) {
      throw std::logic_error("enumerated diagram fails validation: " + entry.key);
    }
    entry.automorphisms = automorphism_count(entry.diagram);
    entry.markings = count_markings(entry.diagram);
    entry.complex_multiplicity = complex_multiplicity(entry.diagram);
  });
  return inventory;
}

BigInt count_markings(const FloorDiagram& d) {
  const BigInt extensions = count_linear_extensions(element_poset(d));
  const BigInt automorphisms = automorphism_count(d);
  if (extensions % automorphisms != 0) {
    throw ConsistencyError(ConsistencyErrc::non_integral_orbit_count,
                           to_string(extensions) + " linear extensions, " + to_string(automorphisms) +
                               " automorphisms for " + canonical_key(d));
  }
  return extensions / automorphisms;
}

std::vector<Marking> enumerate_marking_representatives(const FloorDiagram& d) {
  const SymmetryGroup group(d);
  ElementPoset poset = element_poset(d);
  // Twins are interchangeable, so only twin-sorted extensions need visiting.
  for (const auto& members : group.twin_classes()) {
    for (std::size_t j = 1; j < members.size(); ++j) poset.add_cover(members[j - 1], members[j]);
  }
  std::vector<Marking> result;
  for_each_linear_extension(poset, [&](std::span<const int> sequence) {
    if (group.vertex_automorphisms().size() == 1 ||
        std::ranges::equal(group.orbit_minimal(sequence), sequence)) {
      result.push_back({{sequence.begin(), sequence.end()}});
    }
    return true;
  });
  return result;
}

}  // namespace floorcount
