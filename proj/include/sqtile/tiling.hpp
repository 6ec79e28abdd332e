#pragma once

#include "sqtile/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqtile {

struct PlacedSquare {
  Rational x;
  Rational y;
  Rational side;
};

struct Rect {
  Rational x, y, w, h;

  Rational area() const { return w * h; }
  bool empty() const { return w <= 0 || h <= 0; }
  Rational max_dim() const { return w >= h ? w : h; }
  Rational min_dim() const { return w >= h ? h : w; }
  /// Aspect ratio >= 1.
  Rational aspect() const { return w >= h ? Rational(w / h) : Rational(h / w); }
};

/// Axis-aligned square tiling of a width x height rectangle anchored at the origin.
/// A residual rectangle, when present, is the untiled part (partial tilings).
struct Tiling {
  Rational width, height;
  std::vector<PlacedSquare> squares;
  std::optional<Rect> residual;
  bool residual_trivial = false;

  bool complete() const { return !residual.has_value(); }
  Rational tiled_area() const;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    valid = false;
    violations.push_back(std::move(msg));
  }
};

/// Checks square bounds, pairwise interior-disjointness (exact arithmetic), overlap with
/// the residual, and the exact area identity. Reports every violation found.
ValidationReport validate_tiling(const Tiling& t);

}  // namespace sqtile
