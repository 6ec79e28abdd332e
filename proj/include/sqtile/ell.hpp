#pragma once

#include "sqtile/tiling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqtile {

/// Orientation-preserving-or-reversing isometry with axis-aligned image:
/// (u, v) -> (tx + m00 u + m01 v, ty + m10 u + m11 v), matrix a signed permutation.
struct Placement {
  int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Rational tx = 0, ty = 0;

  static Placement identity() { return {}; }
  static Placement translation(const Rational& x, const Rational& y) {
    Placement p;
    p.tx = x;
    p.ty = y;
    return p;
  }

  std::pair<Rational, Rational> apply(const Rational& u, const Rational& v) const {
    return {tx + m00 * u + m01 * v, ty + m10 * u + m11 * v};
  }
  PlacedSquare map_square(const PlacedSquare& s) const;
  Rect map_rect(const Rect& r) const;
  /// Composition applying `inner` first.
  Placement compose(const Placement& inner) const;
};

/// Six-sided region: an a x b rectangle stacked left-aligned on an (a+c) x d rectangle.
/// In standard coordinates the region is [0,a+c]x[0,d] union [0,a]x[d,d+b]; `place`
/// maps standard coordinates to absolute ones.
struct Ell {
  Rational a, b, c, d;
  Placement place;

  Rational area() const { return a * b + (a + c) * d; }
  Rational min_edge() const;
  Rational max_edge() const;
  Rational bound_w() const { return a + c; }
  Rational bound_h() const { return b + d; }
};

struct EllMoveResult {
  std::vector<PlacedSquare> squares;  // absolute coordinates
  std::optional<Ell> ell;
  std::optional<Rect> rect;  // degenerate collapse
};

/// Shaves b/a >= 2 and c/d >= 2 down with squares of side a resp. d.
EllMoveResult ell_normalize(Ell e);

struct EllReduceStep {
  Rational a, b, c, d;  // quadruple before the step
  std::string tag;
  std::size_t squares_emitted;
  Rational area_before, area_after;
  Rational min_edge_before, min_edge_after;
};

struct EllReduceResult {
  std::vector<PlacedSquare> squares;
  std::optional<Ell> ell;   // edge ratios within [1/8, 8]
  std::optional<Rect> rect; // degenerate collapse
  std::vector<EllReduceStep> steps;
};

/// Emits squares until the remaining ell has all edge ratios in [1/8, 8] (or collapses
/// to a rectangle). Every square side is at least the current shortest edge.
EllReduceResult ell_reduce(Ell e, int max_iter = 100000);

}  // namespace sqtile
