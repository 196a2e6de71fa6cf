#pragma once

#include <string>

#include "gtwist/points.hpp"
#include "gtwist/radial.hpp"

namespace gtwist {

// SVG 1.1 documents; deterministic byte output for identical input.  Radial
// edges are sampled as polylines along their angular domain; the origin O
// and the reference ray r are drawn.  Straight-line drawings use segments.
std::string render_svg(const RadialDrawing& d);
std::string render_svg(const PointSet& ps);

}  // namespace gtwist
