#pragma once

#include "sqtile/tiling.hpp"

#include <vector>

namespace sqtile {

/// Corner of the working rectangle the untiled residual stays attached to.
enum class Corner { LowLeft, LowRight, UpLeft, UpRight };

struct GreedyCheckpoint {
  Rect residual;
  std::size_t square_count;  // squares placed so far
};

struct GreedyRun {
  std::vector<PlacedSquare> squares;
  std::vector<GreedyCheckpoint> checkpoints;  // checkpoints[0] is the initial rectangle
  bool complete = false;
};

/// Repeatedly removes the largest square that fits, always from the side away from the
/// kept corner. Stops when the rectangle is exhausted or its larger dimension drops to
/// `floor_dim` or below (pass 0 to run to completion). Checkpoints record the residual
/// after every square.
GreedyRun greedy_run(const Rect& r, Corner keep, const Rational& floor_dim);

/// Complete greedy tiling of a w x h rectangle; the square count equals greedy_cost.
Tiling greedy_tile(const Int& w, const Int& h);

/// Corner of `r` equal to point (px, py); throws if none matches.
Corner corner_of_point(const Rect& r, const Rational& px, const Rational& py);

}  // namespace sqtile
