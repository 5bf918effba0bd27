#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/diagram.hpp"
#include "floorcount/enumeration.hpp"
#include "floorcount/lattice.hpp"
#include "floorcount/symmetry.hpp"

namespace floorcount {

/// When two marked elements count as adjacent for the conjugate-pair rule.
enum class AdjacencyRule {
  /// Only a floor and an edge at it.
  incidence_only,
  /// A floor and an edge at it, or two edges sharing a floor.
  closures_intersect,
};

bool adjacent(const FloorDiagram& d, int a, int b, AdjacencyRule rule);

/// Bookkeeping for a marking with r pairs of complex conjugate points,
/// placed at the last 2r positions. Positions are 1-based.
struct RealMarkingData {
  int r = 0;
  /// {s-2k+1, s-2k+2} for k = 1..r.
  std::vector<std::pair<int, int>> pairs;
  /// Union of the pairs whose two marked elements are not adjacent; sorted.
  std::vector<int> im_indices;
  /// rho[i-1] is the image of position i: swaps each pair in im_indices.
  std::vector<int> rho;
  /// Floors with odd divergence among the elements marked in im_indices.
  int odd_vertex_count = 0;
  int o_r = 0;
  /// Edges marked at one of the last 2r positions.
  std::vector<int> A;
};

/// Throws RangeError if 2r > s or r < 0.
RealMarkingData imaginary_index_set(const FloorDiagram& d, const Marking& m, int r,
                                    AdjacencyRule rule = AdjacencyRule::incidence_only);

bool is_r_real(const FloorDiagram& d, const SymmetryGroup& group, const Marking& m, int r,
               AdjacencyRule rule = AdjacencyRule::incidence_only);
bool is_r_real(const MarkedFloorDiagram& m, int r,
               AdjacencyRule rule = AdjacencyRule::incidence_only);

/// Signed multiplicity of a genus-0 marked diagram with r conjugate pairs.
/// Throws RangeError for positive genus or 2r > s, and
/// ConsistencyError(odd_parity) if an r-real marking has an odd number of
/// odd-divergence floors among its swapped points.
BigInt real_multiplicity(const FloorDiagram& d, const SymmetryGroup& group, const Marking& m, int r,
                         AdjacencyRule rule = AdjacencyRule::incidence_only);
BigInt real_multiplicity(const MarkedFloorDiagram& m, int r,
                         AdjacencyRule rule = AdjacencyRule::incidence_only);

struct InvariantOptions {
  int jobs = 1;
  AdjacencyRule adjacency = AdjacencyRule::incidence_only;
  /// Evaluates every marking of every class, not just the representative,
  /// and throws ConsistencyError(representative_dependence) on disagreement.
  bool verify_representatives = false;
  /// Receives non-fatal warnings.
  std::function<void(const std::string&)> warn;
};

BigInt gw_invariant(const DiagramInventory& inventory);
BigInt gw_invariant(const HTransversePolygon& p, int genus, const InvariantOptions& options = {});

BigInt welschinger_invariant(const HTransversePolygon& p, int r, const InvariantOptions& options = {});

/// One row per marked genus-0 diagram class, with real multiplicities for
/// r = 0..max_r.
struct MarkedMultiplicities {
  std::size_t entry = 0;  // index into the inventory
  Marking marking;
  BigInt complex_multiplicity;
  std::vector<BigInt> real;
};

std::vector<MarkedMultiplicities> real_multiplicity_table(const DiagramInventory& genus0, int max_r,
                                                          const InvariantOptions& options = {});

}  // namespace floorcount
