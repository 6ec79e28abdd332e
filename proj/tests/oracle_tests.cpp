#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqtile/contfrac.hpp"
#include "sqtile/kenyon.hpp"
#include "sqtile/network.hpp"
#include "sqtile/oracle.hpp"

#include <numeric>

using namespace sqtile;

TEST_CASE("optimal counts on small rectangles") {
  for (int n = 1; n <= 8; ++n) {
    OracleResult r = optimal_tile_count(1, n);
    CHECK(r.exact);
    CHECK(r.best == n);
  }
  OracleResult r23 = optimal_tile_count(2, 3);
  CHECK(r23.exact);
  CHECK(r23.best == 3);

  OracleResult r56 = optimal_tile_count(5, 6);
  CHECK(r56.exact);
  CHECK(r56.best == 5);
  CHECK(validate_tiling(r56.witness).valid);
  CHECK(r56.witness.complete());
  std::multiset<Rational> sides;
  for (const auto& s : r56.witness.squares) sides.insert(s.side);
  CHECK(sides == std::multiset<Rational>{Rational(3), Rational(3), Rational(2), Rational(2), Rational(2)});

  OracleResult r34 = optimal_tile_count(3, 4);
  CHECK(r34.best == 4);
}

TEST_CASE("witnesses validate and match the reported count") {
  for (int q = 2; q <= 9; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      OracleResult r = optimal_tile_count(p, q);
      REQUIRE(r.exact);
      CHECK(static_cast<int>(r.witness.squares.size()) == r.best);
      CHECK(validate_tiling(r.witness).valid);
      CHECK(r.witness.complete());
    }
}

TEST_CASE("budget exhaustion reports an inexact interval") {
  OracleResult r = optimal_tile_count(11, 13, 50);
  CHECK_FALSE(r.exact);
  CHECK(r.lower <= r.best);
  CHECK(r.best >= 6);
}

TEST_CASE("optimal_table rows and cross-module consistency") {
  auto rows = optimal_table(8);
  bool saw23 = false, saw12 = false, saw34 = false;
  for (const auto& row : rows) {
    REQUIRE(row.exact);
    if (row.p == 2 && row.q == 3) {
      saw23 = true;
      CHECK(row.min_count == 3);
    }
    if (row.p == 1 && row.q == 2) {
      saw12 = true;
      CHECK(row.min_count == 2);
    }
    if (row.p == 3 && row.q == 4) {
      saw34 = true;
      CHECK(row.min_count == 4);
    }
    // greedy never beats the optimum; the optimum respects the exact lower bounds
    CHECK(greedy_cost(row.p, row.q) >= row.min_count);
    CHECK(lower_bound_check(row.p, row.q, row.min_count).pass);
    // the construction never beats the optimum either
    KenyonResult kr = kenyon_tile(row.p, row.q);
    CHECK(Int(kr.tiling.squares.size()) >= row.min_count);
  }
  CHECK(saw23);
  CHECK(saw12);
  CHECK(saw34);
}

TEST_CASE("enumerate_spanning_trees on tiny graphs") {
  ResistorNetwork tri;
  tri.vertex_count = 3;
  tri.edges = {{0, 1}, {0, 2}, {2, 1}};
  tri.pole_a = 0;
  tri.pole_b = 1;
  CHECK(enumerate_spanning_trees(tri) == 3);

  ResistorNetwork single;
  single.vertex_count = 2;
  single.edges = {{0, 1}};
  single.pole_a = 0;
  single.pole_b = 1;
  CHECK(enumerate_spanning_trees(single) == 1);

  ResistorNetwork par = single;
  par.edges.push_back({0, 1});
  CHECK(enumerate_spanning_trees(par) == 2);

  ResistorNetwork big;
  big.vertex_count = 2;
  for (int i = 0; i < 21; ++i) big.edges.push_back({0, 1});
  CHECK_THROWS_AS(enumerate_spanning_trees(big), std::invalid_argument);
}
