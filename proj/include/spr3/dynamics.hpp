#ifndef SPR3_DYNAMICS_HPP
#define SPR3_DYNAMICS_HPP

#include <vector>

#include "spr3/control.hpp"
#include "spr3/energetics.hpp"
#include "spr3/kinematics.hpp"
#include "spr3/strokes_fwd.hpp"

namespace spr3 {

struct TrajectorySample {
    double t;      // stroke time
    Vec3 xi;       // shape offsets (prescribed by the stroke)
    Vec2 c;        // center position
    double theta;  // orientation
    double power;  // drag-normalized instantaneous power
};

/// Time-sampled trajectory over whole loops of a stroke, with the settings
/// that produced it.
struct Trajectory {
    std::vector<TrajectorySample> samples;
    EllipticStroke stroke;
    int steps_per_loop = 0;
    int loops = 0;
};

// Integrates the first-order dynamics: theta(t) = sigma t analytically, the
// center by a classical fixed-step 4th-order scheme applied to
// c_dot = R(sigma t) (F0 xi_dot + sum_j (A_j xi_dot . xi) e_j), j in {1,2}.
// Power is sampled as G0 xi_dot . xi_dot from the kappa/h form.
Trajectory integrate_leading_order(const AsymptoticCoefficients& coeffs,
                                   const ControlExpansion& expansion,
                                   const EllipticStroke& stroke, int steps_per_loop = 256,
                                   int loops = 1);

// Convenience overload building the correctors from the coefficient set.
Trajectory integrate_leading_order(const AsymptoticCoefficients& coeffs,
                                   const EllipticStroke& stroke, int steps_per_loop = 256,
                                   int loops = 1);

// Integrates the factorized system p_dot = R(theta) F(xi) xi_dot with theta
// as a state variable and F reassembled at every stage. Throws
// admissibility_error (with the offending time) if the prescribed shape
// leaves the admissible set.
Trajectory integrate_exact(const SwimmerGeometry& geom, const EllipticStroke& stroke,
                           int steps_per_loop = 256, int loops = 1);

// (c(T) - c(0), theta(T) - theta(0)) over the whole-loop trajectory.
Vec3 net_displacement(const Trajectory& traj);

// Trapezoid integral of the sampled power over the first loop.
double integrated_loop_energy(const Trajectory& traj);

}  // namespace spr3

#endif
