#include "floorcount/invariants.hpp"

#include <algorithm>
#include <map>

#include "floorcount/errors.hpp"
#include "floorcount/poset.hpp"
#include "parallel.hpp"

namespace floorcount {

namespace {

bool is_edge(const FloorDiagram& d, int element) { return d.kind(element) != ElementKind::floor; }

void check_real_preconditions(const FloorDiagram& d, const Marking& m, int r) {
  if (d.first_betti() != 0) throw RangeError("real multiplicities are defined for genus 0 only");
  const int s = static_cast<int>(m.sequence.size());
  if (r < 0 || 2 * r > s) {
    throw RangeError("need 0 <= 2r <= s, got r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
}

std::vector<int> compose(const Marking& m, const std::vector<int>& rho) {
  std::vector<int> result(m.sequence.size());
  for (std::size_t i = 0; i < result.size(); ++i) {
    result[i] = m.sequence[static_cast<std::size_t>(rho[i] - 1)];
  }
  return result;
}

BigInt multiplicity_from(const FloorDiagram& d, const SymmetryGroup& group, const Marking& m,
                         const RealMarkingData& data) {
  if (!group.equivalent(m.sequence, compose(m, data.rho))) return 0;
  if (data.odd_vertex_count % 2 != 0) {
    throw ConsistencyError(ConsistencyErrc::odd_parity,
                           std::to_string(data.odd_vertex_count) +
                               " odd-divergence floors among swapped points, r=" + std::to_string(data.r));
  }
  for (std::size_t i = 0; i < m.sequence.size(); ++i) {
    const int e = m.sequence[i];
    if (!is_edge(d, e) || d.weight(e) % 2 != 0) continue;
    if (!std::binary_search(data.im_indices.begin(), data.im_indices.end(), static_cast<int>(i) + 1)) {
      return 0;
    }
  }
  BigInt value = data.o_r % 2 == 0 ? 1 : -1;
  for (int e : data.A) value *= d.weight(e);
  return value;
}

struct EntryEvaluation {
  std::vector<Marking> markings;
  std::vector<std::vector<BigInt>> values;  // values[marking][r index]
};

EntryEvaluation evaluate_entry(const FloorDiagram& d, const std::vector<int>& rs,
                               const InvariantOptions& options) {
  const SymmetryGroup group(d);
  EntryEvaluation result;
  result.markings = enumerate_marking_representatives(d);
  const auto values_for = [&](const Marking& m) {
    std::vector<BigInt> values;
    for (int r : rs) {
      values.push_back(multiplicity_from(d, group, m, imaginary_index_set(d, m, r, options.adjacency)));
    }
    return values;
  };
  std::map<std::vector<int>, std::size_t> index_of;
  for (const Marking& m : result.markings) {
    index_of.emplace(m.sequence, result.values.size());
    result.values.push_back(values_for(m));
  }
  if (options.verify_representatives) {
    for_each_linear_extension(element_poset(d), [&](std::span<const int> sequence) {
      const Marking m{{sequence.begin(), sequence.end()}};
      const auto rep = index_of.find(group.orbit_minimal(sequence));
      if (rep == index_of.end() || values_for(m) != result.values[rep->second]) {
        throw ConsistencyError(ConsistencyErrc::representative_dependence,
                               "real multiplicity differs within a class of " + canonical_key(d));
      }
      return true;
    });
  }
  return result;
}

const char* const k_invariance_warning =
    "warning: the floor-diagram sum equals the Welschinger invariant only when the toric surface "
    "admits Welschinger invariants with its tautological real structure";

}  // namespace

bool adjacent(const FloorDiagram& d, int a, int b, AdjacencyRule rule) {
  if (a == b) return true;
  const bool a_edge = is_edge(d, a);
  const bool b_edge = is_edge(d, b);
  if (!a_edge && !b_edge) return false;
  if (a_edge && b_edge && rule == AdjacencyRule::incidence_only) return false;
  const auto ea = d.endpoints(a);
  const auto eb = d.endpoints(b);
  return std::ranges::any_of(ea, [&eb](int v) { return std::ranges::find(eb, v) != eb.end(); });
}

RealMarkingData imaginary_index_set(const FloorDiagram& d, const Marking& m, int r, AdjacencyRule rule) {
  const int s = static_cast<int>(m.sequence.size());
  if (r < 0 || 2 * r > s) {
    throw RangeError("need 0 <= 2r <= s, got r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
  RealMarkingData data;
  data.r = r;
  data.rho.resize(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) data.rho[static_cast<std::size_t>(i - 1)] = i;
  const auto marked = [&m](int position) { return m.sequence[static_cast<std::size_t>(position - 1)]; };
  for (int k = 1; k <= r; ++k) {
    const int i = s - 2 * k + 1;
    data.pairs.emplace_back(i, i + 1);
    if (!adjacent(d, marked(i), marked(i + 1), rule)) {
      data.im_indices.push_back(i);
      data.im_indices.push_back(i + 1);
      data.rho[static_cast<std::size_t>(i - 1)] = i + 1;
      data.rho[static_cast<std::size_t>(i)] = i;
    }
  }
  std::sort(data.im_indices.begin(), data.im_indices.end());
  for (int i : data.im_indices) {
    const int x = marked(i);
    if (!is_edge(d, x) && divergence(d, x) % 2 != 0) ++data.odd_vertex_count;
  }
  data.o_r = data.odd_vertex_count / 2;
  for (int i = s - 2 * r + 1; i <= s; ++i) {
    if (is_edge(d, marked(i))) data.A.push_back(marked(i));
  }
  return data;
}

bool is_r_real(const FloorDiagram& d, const SymmetryGroup& group, const Marking& m, int r,
               AdjacencyRule rule) {
  const RealMarkingData data = imaginary_index_set(d, m, r, rule);
  return group.equivalent(m.sequence, compose(m, data.rho));
}

bool is_r_real(const MarkedFloorDiagram& m, int r, AdjacencyRule rule) {
  return is_r_real(m.diagram, SymmetryGroup(m.diagram), m.marking, r, rule);
}

BigInt real_multiplicity(const FloorDiagram& d, const SymmetryGroup& group, const Marking& m, int r,
                         AdjacencyRule rule) {
  check_real_preconditions(d, m, r);
  return multiplicity_from(d, group, m, imaginary_index_set(d, m, r, rule));
}

BigInt real_multiplicity(const MarkedFloorDiagram& m, int r, AdjacencyRule rule) {
  return real_multiplicity(m.diagram, SymmetryGroup(m.diagram), m.marking, r, rule);
}

BigInt gw_invariant(const DiagramInventory& inventory) {
  BigInt total = 0;
  for (const auto& entry : inventory.entries) total += entry.complex_multiplicity * entry.markings;
  return total;
}

BigInt gw_invariant(const HTransversePolygon& p, int genus, const InvariantOptions& options) {
  return gw_invariant(enumerate_diagrams(p, genus, {.jobs = options.jobs}));
}

std::vector<MarkedMultiplicities> real_multiplicity_table(const DiagramInventory& genus0, int max_r,
                                                          const InvariantOptions& options) {
  if (genus0.genus != 0) throw RangeError("real multiplicities are defined for genus 0 only");
  const int s = configuration_size(genus0.polygon, 0);
  if (max_r < 0 || 2 * max_r > s) {
    throw RangeError("need 0 <= 2r <= s, got r=" + std::to_string(max_r) + " s=" + std::to_string(s));
  }
  std::vector<int> rs;
  for (int r = 0; r <= max_r; ++r) rs.push_back(r);

  std::vector<EntryEvaluation> evaluations(genus0.entries.size());
  detail::parallel_for(genus0.entries.size(), options.jobs, [&](std::size_t i) {
    evaluations[i] = evaluate_entry(genus0.entries[i].diagram, rs, options);
  });
  std::vector<MarkedMultiplicities> table;
  for (std::size_t i = 0; i < evaluations.size(); ++i) {
    for (std::size_t j = 0; j < evaluations[i].markings.size(); ++j) {
      table.push_back({i, std::move(evaluations[i].markings[j]), genus0.entries[i].complex_multiplicity,
                       std::move(evaluations[i].values[j])});
    }
  }
  return table;
}

BigInt welschinger_invariant(const HTransversePolygon& p, int r, const InvariantOptions& options) {
  const int s = configuration_size(p, 0);
  if (r < 0 || 2 * r > s) {
    throw RangeError("need 0 <= 2r <= s, got r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
  if (options.warn) options.warn(k_invariance_warning);
  const DiagramInventory inventory = enumerate_diagrams(p, 0, {.jobs = options.jobs});
  std::vector<EntryEvaluation> evaluations(inventory.entries.size());
  detail::parallel_for(inventory.entries.size(), options.jobs, [&](std::size_t i) {
    evaluations[i] = evaluate_entry(inventory.entries[i].diagram, {r}, options);
  });
  BigInt total = 0;
  for (const auto& evaluation : evaluations) {
    for (const auto& values : evaluation.values) total += values.front();
  }
  return total;
}

}  // namespace floorcount
