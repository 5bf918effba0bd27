#pragma once

#include <array>
#include <string>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/lattice.hpp"

namespace floorcount {

struct Floor {
  std::string id;
  int theta = 0;
};

/// A bounded edge, oriented src -> dst.
struct Elevator {
  std::string id;
  int src = 0;
  int dst = 0;
  int weight = 1;
};

/// An unbounded edge of weight 1 attached to a single floor.
struct LeafEdge {
  std::string id;
  int vertex = 0;
};

enum class ElementKind { floor, elevator, bottom, top };

/// A weighted acyclic oriented multigraph with integer labels on its vertices.
///
/// Elements (vertices and edges) are numbered consecutively: floors first,
/// then elevators, bottom edges and top edges, each in storage order. Markings
/// and posets refer to elements by this number.
struct FloorDiagram {
  std::vector<Floor> floors;
  std::vector<Elevator> elevators;
  std::vector<LeafEdge> bottoms;
  std::vector<LeafEdge> tops;

  int vertex_count() const noexcept { return static_cast<int>(floors.size()); }
  int edge_count() const noexcept {
    return static_cast<int>(elevators.size() + bottoms.size() + tops.size());
  }
  int element_count() const noexcept { return vertex_count() + edge_count(); }

  int elevator_element(int i) const noexcept { return vertex_count() + i; }
  int bottom_element(int i) const noexcept {
    return vertex_count() + static_cast<int>(elevators.size()) + i;
  }
  int top_element(int i) const noexcept {
    return vertex_count() + static_cast<int>(elevators.size() + bottoms.size()) + i;
  }

  ElementKind kind(int element) const;
  /// Position of the element within the array of its kind.
  int local_index(int element) const;
  const std::string& element_id(int element) const;
  /// Returns -1 when no element carries the id.
  int find_element(const std::string& id) const;
  /// Weight of an edge; 0 for floors.
  int weight(int element) const;
  /// The floors an element touches: itself for a floor, its end floors for an edge.
  std::vector<int> endpoints(int element) const;

  int first_betti() const noexcept {
    return static_cast<int>(elevators.size()) - vertex_count() + 1;
  }
  bool is_acyclic() const;
  bool is_connected() const;

  /// Throws ValidationError on dangling vertex references, non-positive
  /// weights, self-loops or duplicate ids.
  void check_structure() const;

  /// Renames elements to v1.., e1.., b1.., t1.. in storage order.
  void assign_default_ids();
};

/// Builds a diagram with default ids. Elevators are (src, dst, weight).
FloorDiagram make_diagram(const std::vector<int>& thetas,
                          const std::vector<std::array<int, 3>>& elevators,
                          const std::vector<int>& bottom_floors, const std::vector<int>& top_floors);

/// Incoming minus outgoing weight, unbounded edges counted with weight 1.
int divergence(const FloorDiagram& d, int vertex);

/// Product of squared edge weights.
BigInt complex_multiplicity(const FloorDiagram& d);

/// Position i (0-based) holds the element marked by the point i+1.
struct Marking {
  std::vector<int> sequence;

  bool operator==(const Marking&) const = default;
  auto operator<=>(const Marking&) const = default;
};

struct MarkedFloorDiagram {
  FloorDiagram diagram;
  Marking marking;
};

enum class ViolationKind {
  cyclic,
  disconnected,
  genus_mismatch,
  bottom_count,
  top_count,
  theta_multiset,
  right_multiset,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Checks each floor-diagram condition against polygon and genus and
/// reports every failing one. An empty result means the diagram is valid.
std::vector<Violation> validate_diagram(const FloorDiagram& d, const HTransversePolygon& p,
                                        int genus);

/// Empty when the marking lists every element once and increases along
/// the orientation; otherwise one message per problem.
std::vector<std::string> validate_marking(const FloorDiagram& d, const Marking& m);

}  // namespace floorcount
