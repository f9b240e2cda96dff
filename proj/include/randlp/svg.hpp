#pragma once

#include <array>
#include <string>
#include <vector>

#include "randlp/model.hpp"

namespace randlp {

using Point2 = std::array<double, 2>;

/// Intersection of the halfplanes of all constraints, as a counter-clockwise
/// polygon. Requires n == 2. Empty when the region is empty.
std::vector<Point2> feasible_polygon(const LPInstance& inst);

/// SVG 1.1 drawing of a two-dimensional instance: one <line> per constraint
/// (class "support" or "random"), one objective <line> (class "objective"),
/// the two dashed annulus circles (class "annulus") and the feasible region
/// (<polygon class="feasible">). Coordinates inside the plot group are in
/// problem space. Throws UnsupportedDimension unless n == 2.
std::string render_svg(const LPInstance& inst);

}  // namespace randlp
