#include <doctest.h>

#include <algorithm>
#include <set>

#include "floorcount/enumeration.hpp"
#include "floorcount/errors.hpp"
#include "floorcount/invariants.hpp"
#include "floorcount/symmetry.hpp"
#include "support.hpp"

using namespace floorcount;

namespace {

using Column = std::vector<long>;

// Columns of the cubic table: mu^C followed by mu^R_0 .. mu^R_4.
const std::multiset<Column> cubic_columns = {
    {4, 0, 0, 0, 0, 0},  {1, 1, 1, 1, 1, 1},    {1, 1, 1, 1, 0, 0},    {1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 0},  {1, 1, 0, -1, -1, -1}, {1, 1, 0, -1, -1, -1}, {1, 1, 1, 1, 1, 1},
};

const std::vector<std::vector<long>> cubic_rows = {
    {0, 1, 1, 1, 1, 1, 1, 1, 1},   {0, 1, 1, 1, 1, 1, 0, 0, 1},   {0, 1, 1, 1, 1, 1, -1, -1, 1},
    {0, 1, 0, 0, 1, 1, -1, -1, 1}, {0, 1, 0, 0, 0, 0, -1, -1, 1},
};

std::multiset<Column> columns(AdjacencyRule rule) {
  InvariantOptions opts;
  opts.adjacency = rule;
  std::multiset<Column> out;
  for (const auto& row : real_multiplicity_table(enumerate_diagrams(delta_d(3), 0), 4, opts)) {
    Column c{row.complex_multiplicity.get_si()};
    for (const auto& v : row.real) c.push_back(v.get_si());
    out.insert(c);
  }
  return out;
}

std::multiset<long> row(const std::multiset<Column>& cols, std::size_t r) {
  std::multiset<long> out;
  for (const auto& c : cols) out.insert(c[r + 1]);
  return out;
}

bool reproduces_all_rows(const std::multiset<Column>& cols) {
  for (std::size_t r = 0; r < cubic_rows.size(); ++r) {
    if (row(cols, r) != std::multiset<long>(cubic_rows[r].begin(), cubic_rows[r].end())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("complex invariants") {
  CHECK(gw_invariant(delta_d(3), 0) == 12);
  CHECK(gw_invariant(delta_d(3), 1) == 1);
  CHECK(gw_invariant(delta_d(4), 0) == 620);
  CHECK(gw_invariant(delta_d(3), 5) == 0);
  CHECK(gw_invariant(fixtures::trapezoid(), 0) == 93);
}

TEST_CASE("cubic table") {
  const auto cols = columns(AdjacencyRule::incidence_only);
  CHECK(cols == cubic_columns);
  for (std::size_t r = 0; r < cubic_rows.size(); ++r) {
    CAPTURE(r);
    CHECK(row(cols, r) == std::multiset<long>(cubic_rows[r].begin(), cubic_rows[r].end()));
  }
}

TEST_CASE("adjacency rule calibration") {
  const bool incidence = reproduces_all_rows(columns(AdjacencyRule::incidence_only));
  const bool closures = reproduces_all_rows(columns(AdjacencyRule::closures_intersect));
  CHECK(incidence);
  CHECK_FALSE(closures);
  CHECK(InvariantOptions{}.adjacency == AdjacencyRule::incidence_only);
}

TEST_CASE("Welschinger invariants of small degrees") {
  for (int r = 0; r <= 4; ++r) CHECK(welschinger_invariant(delta_d(3), r) == 8 - 2 * r);
  CHECK(welschinger_invariant(delta_d(1), 0) == 1);
  CHECK(welschinger_invariant(delta_d(2), 0) == 1);
  CHECK(welschinger_invariant(delta_d(4), 0) == 240);
  CHECK_THROWS_AS(welschinger_invariant(delta_d(3), 5), RangeError);
  CHECK_THROWS_AS(welschinger_invariant(delta_d(3), -1), RangeError);
  std::vector<std::string> warnings;
  InvariantOptions opts;
  opts.warn = [&](const std::string& w) { warnings.push_back(w); };
  welschinger_invariant(delta_d(2), 0, opts);
  CHECK(warnings.size() == 1);
}

TEST_CASE("real multiplicity is independent of the representative") {
  InvariantOptions opts;
  opts.verify_representatives = true;
  for (int r = 0; r <= 4; ++r) CHECK(welschinger_invariant(delta_d(3), r, opts) == 8 - 2 * r);
  for (int r = 0; r <= 3; ++r) {
    CHECK(welschinger_invariant(delta_d(4), r, opts) == welschinger_invariant(delta_d(4), r));
  }
  CHECK(welschinger_invariant(fixtures::trapezoid(), 2, opts) == welschinger_invariant(fixtures::trapezoid(), 2));
}

TEST_CASE("r = 0 multiplicity is mu^C mod 2") {
  for (int d = 1; d <= 4; ++d) {
    const auto inv = enumerate_diagrams(delta_d(d), 0);
    BigInt n = 0;
    for (const auto& e : inv.entries) n += e.complex_multiplicity * e.markings;
    for (const auto& r : real_multiplicity_table(inv, 0)) {
      const long mu0 = r.real[0].get_si();
      CHECK((mu0 == 0 || mu0 == 1));
      CHECK(mu0 == mpz_class(r.complex_multiplicity % 2).get_si());
    }
    CHECK(mpz_class((welschinger_invariant(delta_d(d), 0) - n) % 2) == 0);
  }
}

TEST_CASE("imaginary index set") {
  const auto c = fixtures::cubic_chain();
  // last pair is (e2, v3): incident, so nothing is swapped
  const Marking m{{5, 6, 0, 3, 7, 1, 4, 2}};
  CHECK(imaginary_index_set(c, m, 0).im_indices.empty());
  const auto one = imaginary_index_set(c, m, 1);
  CHECK(one.pairs == std::vector<std::pair<int, int>>{{7, 8}});
  CHECK(one.im_indices.empty());
  for (int i = 0; i < 8; ++i) CHECK(one.rho[static_cast<std::size_t>(i)] == i + 1);
  CHECK(one.A == std::vector<int>{4});

  // pair (3, 4) holds v1 and b3, which are not adjacent under either rule;
  // pair (1, 2) holds two bottoms of v1, adjacent only under the closures rule
  const Marking p{{5, 6, 0, 7, 3, 1, 4, 2}};
  const auto three = imaginary_index_set(c, p, 3);
  CHECK(three.im_indices == std::vector<int>{3, 4});
  CHECK(three.rho[2] == 4);
  CHECK(three.rho[3] == 3);
  CHECK_THROWS_AS(imaginary_index_set(c, m, 5), RangeError);
  CHECK(imaginary_index_set(c, p, 4, AdjacencyRule::closures_intersect).im_indices == std::vector<int>{3, 4});
  CHECK(imaginary_index_set(c, p, 4, AdjacencyRule::incidence_only).im_indices == std::vector<int>{1, 2, 3, 4});
  CHECK(adjacent(c, 3, 7, AdjacencyRule::closures_intersect));
  CHECK_FALSE(adjacent(c, 3, 7, AdjacencyRule::incidence_only));
  CHECK(adjacent(c, 0, 3, AdjacencyRule::incidence_only));
  CHECK_FALSE(adjacent(c, 0, 1, AdjacencyRule::closures_intersect));
}

TEST_CASE("r-real markings") {
  // floors 0, 1; parallel elevators 2, 3; bottoms 4..6; top 7
  const auto d = make_diagram({0, 0}, {{0, 1, 1}, {0, 1, 1}}, {0, 0, 0}, {1});
  const SymmetryGroup g2(d);
  const Marking m{{4, 5, 6, 0, 2, 3, 1, 7}};
  CHECK(is_r_real(d, g2, m, 0));
  CHECK(imaginary_index_set(d, m, 2, AdjacencyRule::incidence_only).im_indices == std::vector<int>{5, 6});
  CHECK(is_r_real(d, g2, m, 2, AdjacencyRule::incidence_only));
  CHECK(is_r_real(MarkedFloorDiagram{d, m}, 2, AdjacencyRule::incidence_only));

  // floors 0..2, elevators 3 (w=2), 4, bottoms 5..7 on floor 0, 8 on floor 2;
  // the third pair swaps floor 0 with a bottom end it does not touch
  const auto w = make_diagram({0, 0, 0}, {{0, 1, 2}, {1, 2, 1}}, {0, 0, 0, 2}, {});
  const SymmetryGroup gw(w);
  const Marking n{{5, 6, 7, 0, 8, 3, 1, 4, 2}};
  CHECK(imaginary_index_set(w, n, 3).im_indices == std::vector<int>{4, 5});
  CHECK_FALSE(is_r_real(w, gw, n, 3));
  CHECK(real_multiplicity(w, gw, n, 3) == 0);
  CHECK(real_multiplicity(w, gw, n, 0) == 0);
}

TEST_CASE("real multiplicity needs genus 0") {
  const auto a = fixtures::cubic_genus_one();
  const SymmetryGroup group(a);
  CHECK_THROWS_AS(real_multiplicity(a, group, {{6, 7, 8, 0, 3, 4, 1, 5, 2}}, 0), RangeError);
}

TEST_CASE("Welschinger invariants grow with the degree") {
  BigInt previous = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto w = welschinger_invariant(delta_d(d), 0);
    CHECK(w > 0);
    if (d >= 3) CHECK(w > previous);
    if (d == 2) CHECK(w >= previous);
    previous = w;
  }
}

TEST_CASE("invariants do not depend on the worker count") {
  for (int jobs : {1, 2, 8}) {
    InvariantOptions opts;
    opts.jobs = jobs;
    CHECK(gw_invariant(delta_d(5), 1, opts) == gw_invariant(delta_d(5), 1));
    CHECK(welschinger_invariant(delta_d(4), 2, opts) == welschinger_invariant(delta_d(4), 2));
  }
}
