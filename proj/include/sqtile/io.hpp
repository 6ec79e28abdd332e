#pragma once

#include "sqtile/network.hpp"
#include "sqtile/tiling.hpp"

#include <string>

namespace sqtile {

/// {"width":"num/den","height":...,"squares":[{"x":..,"y":..,"side":..}],"residual":...}
/// All numbers are exact fraction strings; residual is null or a rectangle object.
std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);  // throws std::runtime_error on bad input

/// {"vertices":[...],"edges":[[u,v],...],"a":..,"b":..,"rotation":{"v":[edge,...]}}
std::string network_to_json(const ResistorNetwork& g);
ResistorNetwork network_from_json(const std::string& text);

/// Writes via a temp file in the same directory, then renames.
void atomic_write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace sqtile
