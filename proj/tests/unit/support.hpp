#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "floorcount/diagram.hpp"
#include "floorcount/lattice.hpp"
#include "floorcount/poset.hpp"

namespace fixtures {

using floorcount::FloorDiagram;
using floorcount::HTransversePolygon;
using floorcount::make_diagram;

// Delta_3, genus 1: three bottoms on the lowest floor, a double elevator, then a single one.
inline FloorDiagram cubic_genus_one() { return make_diagram({0, 0, 0}, {{0, 1, 1}, {0, 1, 1}, {1, 2, 1}}, {0, 0, 0}, {}); }
inline FloorDiagram cubic_double() { return make_diagram({0, 0, 0}, {{0, 1, 2}, {1, 2, 1}}, {0, 0, 0}, {}); }
inline FloorDiagram cubic_chain() { return make_diagram({0, 0, 0}, {{0, 1, 1}, {1, 2, 1}}, {0, 0, 1}, {}); }
inline FloorDiagram cubic_fork() { return make_diagram({0, 0, 0}, {{0, 1, 1}, {0, 2, 1}}, {0, 0, 0}, {}); }

inline HTransversePolygon trapezoid() { return HTransversePolygon::from_quadruple({0, 0}, {2, 2}, 5, 1); }
inline HTransversePolygon narrow_trapezoid() { return HTransversePolygon::from_quadruple({0, 0}, {1, 1}, 3, 1); }

// Four bottoms and the top on the lower floor, one bottom above.
inline FloorDiagram trapezoid_chain() { return make_diagram({0, 0}, {{0, 1, 1}}, {0, 0, 0, 0, 1}, {0}); }

inline FloorDiagram delta1() { return make_diagram({0}, {}, {0}, {}); }

// Storage order and ids shuffled; same abstract diagram.
inline FloorDiagram relabel(const FloorDiagram& d, std::mt19937& rng) {
  std::vector<int> perm(d.floors.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  FloorDiagram out;
  out.floors.resize(d.floors.size());
  for (std::size_t v = 0; v < perm.size(); ++v) out.floors[static_cast<std::size_t>(perm[v])] = d.floors[v];
  const auto map = [&](int v) { return perm[static_cast<std::size_t>(v)]; };
  for (auto e : d.elevators) {
    e.src = map(e.src);
    e.dst = map(e.dst);
    out.elevators.push_back(e);
  }
  for (auto e : d.bottoms) {
    e.vertex = map(e.vertex);
    out.bottoms.push_back(e);
  }
  for (auto e : d.tops) {
    e.vertex = map(e.vertex);
    out.tops.push_back(e);
  }
  std::shuffle(out.elevators.begin(), out.elevators.end(), rng);
  std::shuffle(out.bottoms.begin(), out.bottoms.end(), rng);
  std::shuffle(out.tops.begin(), out.tops.end(), rng);
  for (std::size_t i = 0; i < out.floors.size(); ++i) out.floors[i].id = "f" + std::to_string(rng() % 1000) + "_" + std::to_string(i);
  for (std::size_t i = 0; i < out.elevators.size(); ++i) out.elevators[i].id = "x" + std::to_string(i);
  for (std::size_t i = 0; i < out.bottoms.size(); ++i) out.bottoms[i].id = "lo" + std::to_string(i);
  for (std::size_t i = 0; i < out.tops.size(); ++i) out.tops[i].id = "hi" + std::to_string(i);
  return out;
}

// Element permutations that preserve kind, theta, weight and incidence, by
// trying every permutation of the floors and then of each edge kind.
inline std::vector<std::vector<int>> brute_automorphisms(const FloorDiagram& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<int>> result;
  std::vector<int> fv(static_cast<std::size_t>(n));
  std::iota(fv.begin(), fv.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = d.floors[static_cast<std::size_t>(v)].theta == d.floors[static_cast<std::size_t>(fv[static_cast<std::size_t>(v)])].theta;
    if (!ok) continue;
    std::vector<int> ev(d.elevators.size());
    std::iota(ev.begin(), ev.end(), 0);
    do {
      bool match = true;
      for (std::size_t i = 0; i < ev.size() && match; ++i) {
        const auto& a = d.elevators[i];
        const auto& b = d.elevators[static_cast<std::size_t>(ev[i])];
        match = b.src == fv[static_cast<std::size_t>(a.src)] && b.dst == fv[static_cast<std::size_t>(a.dst)] && a.weight == b.weight;
      }
      if (!match) continue;
      std::vector<int> bv(d.bottoms.size());
      std::iota(bv.begin(), bv.end(), 0);
      do {
        bool bm = true;
        for (std::size_t i = 0; i < bv.size() && bm; ++i) bm = d.bottoms[static_cast<std::size_t>(bv[i])].vertex == fv[static_cast<std::size_t>(d.bottoms[i].vertex)];
        if (!bm) continue;
        std::vector<int> tv(d.tops.size());
        std::iota(tv.begin(), tv.end(), 0);
        do {
          bool tm = true;
          for (std::size_t i = 0; i < tv.size() && tm; ++i) tm = d.tops[static_cast<std::size_t>(tv[i])].vertex == fv[static_cast<std::size_t>(d.tops[i].vertex)];
          if (!tm) continue;
          std::vector<int> image(static_cast<std::size_t>(d.element_count()));
          for (int v = 0; v < n; ++v) image[static_cast<std::size_t>(v)] = fv[static_cast<std::size_t>(v)];
          for (std::size_t i = 0; i < ev.size(); ++i) image[static_cast<std::size_t>(d.elevator_element(static_cast<int>(i)))] = d.elevator_element(ev[i]);
          for (std::size_t i = 0; i < bv.size(); ++i) image[static_cast<std::size_t>(d.bottom_element(static_cast<int>(i)))] = d.bottom_element(bv[i]);
          for (std::size_t i = 0; i < tv.size(); ++i) image[static_cast<std::size_t>(d.top_element(static_cast<int>(i)))] = d.top_element(tv[i]);
          result.push_back(std::move(image));
        } while (std::next_permutation(tv.begin(), tv.end()));
      } while (std::next_permutation(bv.begin(), bv.end()));
    } while (std::next_permutation(ev.begin(), ev.end()));
  } while (std::next_permutation(fv.begin(), fv.end()));
  return result;
}

// Every permutation of the elements tested against the cover relations.
inline std::vector<std::vector<int>> brute_linear_extensions(const floorcount::ElementPoset& p) {
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> result;
  std::vector<int> pos(order.size());
  do {
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    bool ok = true;
    for (const auto& [lo, hi] : p.covers()) {
      if (pos[static_cast<std::size_t>(lo)] > pos[static_cast<std::size_t>(hi)]) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

// Marking classes counted by applying every brute-force automorphism.
inline std::size_t brute_marking_classes(const FloorDiagram& d) {
  const auto autos = brute_automorphisms(d);
  auto exts = brute_linear_extensions(floorcount::element_poset(d));
  std::vector<std::vector<int>> minimal;
  for (const auto& m : exts) {
    auto best = m;
    for (const auto& a : autos) {
      std::vector<int> img(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) img[i] = a[static_cast<std::size_t>(m[i])];
      best = std::min(best, img);
    }
    minimal.push_back(best);
  }
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return minimal.size();
}

}  // namespace fixtures
