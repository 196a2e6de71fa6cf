#pragma once

#include <string>
#include <string_view>

#include "gtwist/points.hpp"
#include "gtwist/radial.hpp"

namespace gtwist {

// Drawing parameter file: first non-comment line "n <count>", then n lines
// "<v> <theta> <rho>" with rationals written as "num/den" or plain integers
// and theta in turns.  Point file: "n <count>" then "<v> <x> <y>".
std::string serialize_radial(const RadialDrawing& d);
RadialDrawing parse_radial(std::string_view text);

std::string serialize_points(const PointSet& ps);
PointSet parse_points(std::string_view text);

}  // namespace gtwist
