#pragma once

#include <cstdint>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/diagram.hpp"
#include "floorcount/lattice.hpp"
#include "floorcount/symmetry.hpp"

namespace floorcount {

struct InventoryEntry {
  FloorDiagram diagram;  // canonical labeling
  CanonicalKey key;
  BigInt automorphisms;
  BigInt markings;
  BigInt complex_multiplicity;
};

/// All floor diagrams of a given genus and polygon, one per isomorphism
/// class, sorted by canonical key.
struct DiagramInventory {
  HTransversePolygon polygon;
  int genus = 0;
  std::vector<InventoryEntry> entries;
};

struct EnumerationOptions {
  int jobs = 1;
  /// Walks every choice list backwards; the output must not change.
  bool reverse_choice_order = false;
};

DiagramInventory enumerate_diagrams(const HTransversePolygon& p, int genus,
                                    const EnumerationOptions& options = {});

/// Number of enumerate_diagrams calls made by this process.
std::uint64_t enumeration_runs() noexcept;

/// Linear extensions of the element poset divided by the automorphism count.
/// Throws ConsistencyError(non_integral_orbit_count) if the division is inexact.
BigInt count_markings(const FloorDiagram& d);

/// One marking per equivalence class: the lexicographically smallest
/// linear extension in its automorphism orbit. Sorted.
std::vector<Marking> enumerate_marking_representatives(const FloorDiagram& d);

}  // namespace floorcount
