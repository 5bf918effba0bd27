#include "floorcount/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "floorcount/errors.hpp"

namespace floorcount {

namespace {

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << "}";
  return out.str();
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

ElementKind FloorDiagram::kind(int element) const {
  const int n = vertex_count();
  const int m = static_cast<int>(elevators.size());
  const int b = static_cast<int>(bottoms.size());
  if (element < 0 || element >= element_count()) {
    throw std::out_of_range("element index " + std::to_string(element));
  }
  if (element < n) return ElementKind::floor;
  if (element < n + m) return ElementKind::elevator;
  if (element < n + m + b) return ElementKind::bottom;
  return ElementKind::top;
}

int FloorDiagram::local_index(int element) const {
  switch (kind(element)) {
    case ElementKind::floor: return element;
    case ElementKind::elevator: return element - vertex_count();
    case ElementKind::bottom: return element - bottom_element(0);
    case ElementKind::top: return element - top_element(0);
  }
  return -1;
}

const std::string& FloorDiagram::element_id(int element) const {
  const auto i = static_cast<std::size_t>(local_index(element));
  switch (kind(element)) {
    case ElementKind::floor: return floors[i].id;
    case ElementKind::elevator: return elevators[i].id;
    case ElementKind::bottom: return bottoms[i].id;
    case ElementKind::top: break;
  }
  return tops[i].id;
}

int FloorDiagram::find_element(const std::string& id) const {
  for (int e = 0; e < element_count(); ++e) {
    if (element_id(e) == id) return e;
  }
  return -1;
}

int FloorDiagram::weight(int element) const {
  switch (kind(element)) {
    case ElementKind::floor: return 0;
    case ElementKind::elevator: return elevators[static_cast<std::size_t>(local_index(element))].weight;
    default: return 1;
  }
}

std::vector<int> FloorDiagram::endpoints(int element) const {
  const auto i = static_cast<std::size_t>(local_index(element));
  switch (kind(element)) {
    case ElementKind::floor: return {element};
    case ElementKind::elevator: return {elevators[i].src, elevators[i].dst};
    case ElementKind::bottom: return {bottoms[i].vertex};
    case ElementKind::top: break;
  }
  return {tops[i].vertex};
}

bool FloorDiagram::is_acyclic() const {
  const auto n = static_cast<std::size_t>(vertex_count());
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& e : elevators) {
    out[static_cast<std::size_t>(e.src)].push_back(e.dst);
    ++indegree[static_cast<std::size_t>(e.dst)];
  }
  std::vector<int> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

bool FloorDiagram::is_connected() const {
  if (floors.empty()) return false;
  std::vector<int> parent(floors.size());
  std::iota(parent.begin(), parent.end(), 0);
  int components = vertex_count();
  for (const auto& e : elevators) {
    const int a = find_root(parent, e.src);
    const int b = find_root(parent, e.dst);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

void FloorDiagram::check_structure() const {
  const int n = vertex_count();
  const auto check_vertex = [n](int v, const std::string& owner) {
    if (v < 0 || v >= n) throw ValidationError("edge " + owner + " refers to a missing floor");
  };
  for (const auto& e : elevators) {
    check_vertex(e.src, e.id);
    check_vertex(e.dst, e.id);
    if (e.src == e.dst) throw ValidationError("edge " + e.id + " is a self-loop");
    if (e.weight < 1) throw ValidationError("edge " + e.id + " has non-positive weight");
  }
  for (const auto& e : bottoms) check_vertex(e.vertex, e.id);
  for (const auto& e : tops) check_vertex(e.vertex, e.id);
  std::set<std::string> ids;
  for (int element = 0; element < element_count(); ++element) {
    if (!ids.insert(element_id(element)).second) {
      throw ValidationError("duplicate id " + element_id(element));
    }
  }
}

void FloorDiagram::assign_default_ids() {
  for (std::size_t i = 0; i < floors.size(); ++i) floors[i].id = "v" + std::to_string(i + 1);
  for (std::size_t i = 0; i < elevators.size(); ++i) elevators[i].id = "e" + std::to_string(i + 1);
  for (std::size_t i = 0; i < bottoms.size(); ++i) bottoms[i].id = "b" + std::to_string(i + 1);
  for (std::size_t i = 0; i < tops.size(); ++i) tops[i].id = "t" + std::to_string(i + 1);
}

FloorDiagram make_diagram(const std::vector<int>& thetas,
                          const std::vector<std::array<int, 3>>& elevators,
                          const std::vector<int>& bottom_floors, const std::vector<int>& top_floors) {
  FloorDiagram d;
  for (int theta : thetas) d.floors.push_back({"", theta});
  for (const auto& [src, dst, w] : elevators) d.elevators.push_back({"", src, dst, w});
  for (int v : bottom_floors) d.bottoms.push_back({"", v});
  for (int v : top_floors) d.tops.push_back({"", v});
  d.assign_default_ids();
  d.check_structure();
  return d;
}

int divergence(const FloorDiagram& d, int vertex) {
  int div = 0;
  for (const auto& e : d.elevators) {
    if (e.dst == vertex) div += e.weight;
    if (e.src == vertex) div -= e.weight;
  }
  for (const auto& e : d.bottoms) div += e.vertex == vertex ? 1 : 0;
  for (const auto& e : d.tops) div -= e.vertex == vertex ? 1 : 0;
  return div;
}

BigInt complex_multiplicity(const FloorDiagram& d) {
  BigInt product = 1;
  for (const auto& e : d.elevators) product *= e.weight * e.weight;
  return product;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::cyclic: return "cyclic";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::genus_mismatch: return "genus_mismatch";
    case ViolationKind::bottom_count: return "bottom_count";
    case ViolationKind::top_count: return "top_count";
    case ViolationKind::theta_multiset: return "theta_multiset";
    case ViolationKind::right_multiset: return "right_multiset";
  }
  return "violation";
}

std::vector<Violation> validate_diagram(const FloorDiagram& d, const HTransversePolygon& p,
                                        int genus) {
  std::vector<Violation> violations;
  if (!d.is_acyclic()) violations.push_back({ViolationKind::cyclic, "oriented graph has a cycle"});
  if (!d.is_connected()) violations.push_back({ViolationKind::disconnected, "graph is not connected"});
  if (d.first_betti() != genus) {
    violations.push_back({ViolationKind::genus_mismatch, "first Betti number " +
                                                             std::to_string(d.first_betti()) +
                                                             " != genus " + std::to_string(genus)});
  }
  if (static_cast<int>(d.bottoms.size()) != p.d_minus()) {
    violations.push_back({ViolationKind::bottom_count,
                          std::to_string(d.bottoms.size()) + " bottom edges, expected " +
                              std::to_string(p.d_minus())});
  }
  if (static_cast<int>(d.tops.size()) != p.d_plus()) {
    violations.push_back({ViolationKind::top_count, std::to_string(d.tops.size()) +
                                                        " top edges, expected " +
                                                        std::to_string(p.d_plus())});
  }
  std::vector<int> thetas;
  std::vector<int> rights;
  for (int v = 0; v < d.vertex_count(); ++v) {
    thetas.push_back(d.floors[static_cast<std::size_t>(v)].theta);
    rights.push_back(d.floors[static_cast<std::size_t>(v)].theta + divergence(d, v));
  }
  std::sort(thetas.begin(), thetas.end(), std::greater<>());
  std::sort(rights.begin(), rights.end());
  if (thetas != p.left_directions()) {
    violations.push_back({ViolationKind::theta_multiset,
                          "theta labels " + join(thetas) + " != " + join(p.left_directions())});
  }
  if (rights != p.right_directions()) {
    violations.push_back({ViolationKind::right_multiset, "theta+div " + join(rights) + " != " +
                                                             join(p.right_directions())});
  }
  return violations;
}

std::vector<std::string> validate_marking(const FloorDiagram& d, const Marking& m) {
  std::vector<std::string> problems;
  const int total = d.element_count();
  if (static_cast<int>(m.sequence.size()) != total) {
    problems.push_back("marking has length " + std::to_string(m.sequence.size()) + ", expected " +
                       std::to_string(total));
  }
  std::vector<int> position(static_cast<std::size_t>(total), -1);
  for (std::size_t i = 0; i < m.sequence.size(); ++i) {
    const int e = m.sequence[i];
    if (e < 0 || e >= total) {
      problems.push_back("unknown element at position " + std::to_string(i + 1));
      continue;
    }
    if (position[static_cast<std::size_t>(e)] >= 0) {
      problems.push_back("element " + d.element_id(e) + " marked twice");
    }
    position[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  if (!problems.empty()) return problems;

  const auto before = [&](int lo, int hi) {
    if (position[static_cast<std::size_t>(lo)] >= position[static_cast<std::size_t>(hi)]) {
      problems.push_back(d.element_id(lo) + " must be marked before " + d.element_id(hi));
    }
  };
  for (std::size_t i = 0; i < d.elevators.size(); ++i) {
    const int e = d.elevator_element(static_cast<int>(i));
    before(d.elevators[i].src, e);
    before(e, d.elevators[i].dst);
  }
  for (std::size_t i = 0; i < d.bottoms.size(); ++i) {
    before(d.bottom_element(static_cast<int>(i)), d.bottoms[i].vertex);
  }
  for (std::size_t i = 0; i < d.tops.size(); ++i) {
    before(d.tops[i].vertex, d.top_element(static_cast<int>(i)));
  }
  return problems;
}

}  // namespace floorcount
