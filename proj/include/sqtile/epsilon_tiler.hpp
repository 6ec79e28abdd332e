#pragma once

#include "sqtile/quadratic.hpp"
#include "sqtile/tiling.hpp"

namespace sqtile {

/// delta = (sqrt(2)-1)/2, the aspect threshold below which a half-square pair is used.
inline Quad2 epsilon_delta() { return {Rational(-1, 2), Rational(1, 2)}; }
/// lambda = 1 - delta, the guaranteed per-square area decay rate after stripping.
inline Quad2 epsilon_lambda() { return {Rational(3, 2), Rational(-1, 2)}; }

struct EpsilonResult {
  Tiling tiling;  // x wide, 1 tall; residual (if any) is attached to the top-right corner
  bool trivial = false;
  std::size_t strip_squares = 0;  // squares used to bring the aspect below 2
};

/// Tiles an x-by-1 rectangle except for a piece inside the closed eps-ball around the
/// top-right corner. Aspects at least 1+delta get one greedy square; below that a pair
/// of half-side squares is used so the aspect returns to (1, 2].
EpsilonResult epsilon_tile(const Rational& x, const Rational& eps);

}  // namespace sqtile
