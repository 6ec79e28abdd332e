#pragma once

#include "sqtile/aloof.hpp"
#include "sqtile/ell.hpp"
#include "sqtile/tiling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sqtile {

enum class KenyonStrategy { Refined, Baseline };

struct TraceEvent {
  int stage = 0;
  char kind = 'R';  // 'R' rectangle, 'E' ell
  std::string action;
  std::size_t squares = 0;
  bool clean = true;  // followed the regular pattern (rect -> ell, ell -> ell + rect)
};

struct StageCount {
  int stage = 0;
  std::size_t ells = 0;
  std::size_t rects = 0;
  bool clean = true;  // every task at this stage followed the regular pattern
};

struct ConstructionTrace {
  std::vector<TraceEvent> events;
  std::vector<StageCount> stage_counts() const;
};

struct KenyonConfig {
  int hall_n = 4;          // aloofness bound for the two-panel split
  int split_n = 25;        // aloofness bound for the three-rectangle ell split
  long base_threshold = 64;
  int sqrt_factor = 3;     // greedy phases stop near sqrt_factor * sqrt(scale)
  int scale_match = 4;     // paired residuals matched in scale within this factor
  std::uint64_t hall_budget = 400000;
};

struct KenyonResult {
  Tiling tiling;
  ConstructionTrace trace;
};

/// Tiles a p x q integer rectangle (output width q >= height p) with a square count
/// around q/p + O(log p): greedy stripping, a split of the aspect into two aloof
/// summands, greedy panels down to roughly sqrt scale, then recursion on the ell formed
/// by the adjacent residuals. The baseline strategy re-splits both panels instead of
/// using the ell machinery.
KenyonResult kenyon_tile(const Int& p, const Int& q, KenyonStrategy strategy = KenyonStrategy::Refined,
                         const KenyonConfig& cfg = {});

}  // namespace sqtile
