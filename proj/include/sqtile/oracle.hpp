#pragma once

#include "sqtile/network.hpp"
#include "sqtile/tiling.hpp"

#include <cstdint>
#include <vector>

namespace sqtile {

struct OracleResult {
  int lower = 0;      // proven lower bound
  int best = 0;       // best count found
  bool exact = false; // lower == best and the search completed
  Tiling witness;
  std::uint64_t states = 0;
};

/// Exact minimal number of integer squares tiling p x q, by corner-filling search over
/// canonical skyline profiles with memoization. Intended for max(p, q) <= 13. When the
/// state budget runs out, the result is the interval [lower, best] flagged inexact.
OracleResult optimal_tile_count(int p, int q, std::uint64_t state_budget = 40000000);

struct OracleRow {
  int p, q;
  int min_count;
  bool exact;
  Tiling witness;
};

/// All coprime pairs p < q <= max_q.
std::vector<OracleRow> optimal_table(int max_q, std::uint64_t budget_per_instance = 40000000);

/// Spanning trees by explicit enumeration of edge subsets; edge count capped at 20.
Int enumerate_spanning_trees(const ResistorNetwork& g);

}  // namespace sqtile
