#ifndef SPR3_SVG_HPP
#define SPR3_SVG_HPP

#include <string>

#include "spr3/dynamics.hpp"
#include "spr3/kinematics.hpp"

namespace spr3 {

// Static two-panel figure: the shape-space stroke ellipse (in its own plane)
// and the planar path of the center with the ball outlines drawn at the
// quarter-period frames of the first loop.
std::string render_scenario_svg(const SwimmerGeometry& geom, const Trajectory& traj);

}  // namespace spr3

#endif
