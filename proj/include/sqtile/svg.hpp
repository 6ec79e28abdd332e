#pragma once

#include "sqtile/tiling.hpp"

#include <string>

namespace sqtile {

/// Deterministic SVG rendering: one rect per square, color keyed by index, y flipped so
/// the origin is at the lower-left. The viewBox is the rectangle scaled by px_per_unit.
std::string svg_render(const Tiling& t, int px_per_unit = 32);

}  // namespace sqtile
