#pragma once

#include "sqtile/rational.hpp"
#include "sqtile/tiling.hpp"

#include <utility>
#include <vector>

namespace sqtile {

/// Unit-resistance multigraph with two distinguished poles. Edges are directed; for
/// networks built from tilings they point from the upper horizontal segment to the
/// lower one. The optional rotation system lists, per vertex, its incident edge indices
/// in clockwise order starting from west: edges to lower potential left-to-right, then
/// edges to higher potential right-to-left.
struct ResistorNetwork {
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  int pole_a = 0;
  int pole_b = 0;
  std::vector<std::vector<int>> rotation;

  bool has_rotation() const { return !rotation.empty(); }
  bool connected() const;
};

struct HarmonicSolution {
  std::vector<Rational> potential;
  std::vector<Rational> current;  // per edge, positive along the edge direction
  Rational net_current;
};

/// BSST correspondence: one vertex per maximal horizontal segment (tile tops/bottoms
/// plus the rectangle's top and bottom), one edge per tile. Requires a complete tiling.
ResistorNetwork tiling_to_network(const Tiling& t);

/// Exact potentials/currents with Dirichlet values at the poles.
HarmonicSolution solve_kirchhoff(const ResistorNetwork& g, const Rational& pa, const Rational& pb);

/// (pa - pb) / net current; asserted independent of the boundary values.
Rational effective_resistance(const ResistorNetwork& g);

/// Spanning tree count via the matrix-tree theorem; with glue_poles the poles are
/// identified first and self-loops dropped.
Int spanning_tree_count(const ResistorNetwork& g, bool glue_poles);

struct LowerBoundCheck {
  bool pass = false;
  bool area_ok = false;  // count >= q/p
  bool log_ok = false;   // 2^count >= q
};

LowerBoundCheck lower_bound_check(const Int& p, const Int& q, const Int& count);

/// Inverse BSST construction: edge currents become square sides, potentials vertical
/// positions, horizontal offsets from the rotation system. Requires a rotation system
/// and nonzero currents on all edges.
Tiling network_to_tiling(const ResistorNetwork& g);

}  // namespace sqtile
