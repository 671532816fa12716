#ifndef SPR3_STROKES_HPP
#define SPR3_STROKES_HPP

#include "spr3/control.hpp"
#include "spr3/kinematics.hpp"
#include "spr3/strokes_fwd.hpp"

namespace spr3 {

/// Prescribed net displacement per stroke: (dx, dy, dtheta).
using DisplacementTarget = Vec3;

// Scaled target whose norm is the minimal loop dissipation for the
// prescribed displacement:
// omega = diag(sqrt(g1 g2)/(sqrt(2) alpha), ., g1/(sqrt(3) gamma)) dp.
Vec3 omega_vector(const AsymptoticCoefficients& coeffs, const DisplacementTarget& target);

// Energy-minimizing elliptic stroke realizing the target. Deterministic
// construction; orientation chosen so the realized displacement is +dp.
// Throws config_error for a zero target and admissibility_error when the
// ellipse leaves the admissible shape set.
EllipticStroke optimal_stroke(const AsymptoticCoefficients& coeffs,
                              const DisplacementTarget& target, const SwimmerGeometry& geom);

// Net displacement of one loop by the closed-form holonomy of the
// first-order expansion: component k is 2*pi * (u . M_k v).
Vec3 realized_displacement(const AsymptoticCoefficients& coeffs, const EllipticStroke& stroke);

}  // namespace spr3

#endif
