#include "sqtile/tiling.hpp"

#include <sstream>

namespace sqtile {

Rational Tiling::tiled_area() const {
  Rational a = 0;
  for (const auto& s : squares) a += s.side * s.side;
  return a;
}

namespace {

std::string square_str(const PlacedSquare& s) {
  std::ostringstream os;
  os << "(" << fraction_str(s.x) << "," << fraction_str(s.y) << ")+" << fraction_str(s.side);
  return os.str();
}

bool interiors_overlap(const PlacedSquare& a, const PlacedSquare& b) {
  return a.x < b.x + b.side && b.x < a.x + a.side && a.y < b.y + b.side && b.y < a.y + a.side;
}

bool overlaps_rect(const PlacedSquare& a, const Rect& r) {
  return a.x < r.x + r.w && r.x < a.x + a.side && a.y < r.y + r.h && r.y < a.y + a.side;
}

}  // namespace

ValidationReport validate_tiling(const Tiling& t) {
  ValidationReport rep;
  if (t.width <= 0 || t.height <= 0) {
    rep.fail("nonpositive rectangle dimensions");
    return rep;
  }
  for (std::size_t i = 0; i < t.squares.size(); ++i) {
    const auto& s = t.squares[i];
    if (s.side <= 0) rep.fail("square " + std::to_string(i) + " has nonpositive side");
    if (s.x < 0 || s.y < 0 || s.x + s.side > t.width || s.y + s.side > t.height)
      rep.fail("square " + std::to_string(i) + " out of bounds " + square_str(s));
  }
  for (std::size_t i = 0; i < t.squares.size() && rep.violations.size() < 16; ++i) {
    for (std::size_t j = i + 1; j < t.squares.size(); ++j) {
      if (interiors_overlap(t.squares[i], t.squares[j])) {
        rep.fail("squares " + std::to_string(i) + " and " + std::to_string(j) + " overlap at " +
                 square_str(t.squares[i]) + " / " + square_str(t.squares[j]));
        break;
      }
    }
  }
  Rational residual_area = 0;
  if (t.residual) {
    const Rect& r = *t.residual;
    if (r.w < 0 || r.h < 0) rep.fail("negative residual dimensions");
    if (r.x < 0 || r.y < 0 || r.x + r.w > t.width || r.y + r.h > t.height)
      rep.fail("residual out of bounds");
    residual_area = r.area();
    for (std::size_t i = 0; i < t.squares.size(); ++i)
      if (overlaps_rect(t.squares[i], r)) {
        rep.fail("square " + std::to_string(i) + " overlaps the residual");
        break;
      }
  }
  if (t.tiled_area() + residual_area != t.width * t.height)
    rep.fail("area identity violated: tiled " + fraction_str(t.tiled_area()) + " + residual " +
             fraction_str(residual_area) + " != " + fraction_str(t.width * t.height));
  return rep;
}

}  // namespace sqtile
