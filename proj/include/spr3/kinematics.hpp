#ifndef SPR3_KINEMATICS_HPP
#define SPR3_KINEMATICS_HPP

#include <array>

#include "spr3/linalg.hpp"

namespace spr3 {

/// Physical parameters of the three-sphere swimmer: ball radius, reference
/// arm length and fluid viscosity. Arms meet at the center under fixed
/// mutual angles of 2*pi/3; each arm i has instantaneous length
/// arm_length + xi[i].
struct SwimmerGeometry {
    double radius;      // ball radius a > 0
    double arm_length;  // reference arm length xi0 > 0
    double viscosity;   // dynamic viscosity mu > 0

    // Stokes drag of one isolated ball, 6*pi*mu*a.
    double drag_coefficient() const;

    // Shortest admissible arm length: below 2a/sqrt(3) the balls overlap.
    double min_arm_length() const;

    double ratio() const { return radius / arm_length; }

    // Throws config_error unless a, xi0, mu are positive and the zero-stroke
    // configuration is admissible.
    void validate() const;
};

/// Arm-length offsets xi, so arm i has length arm_length + xi[i].
using ShapeState = Vec3;

/// Planar position of the center plus orientation angle.
struct Pose {
    Vec2 c{};
    double theta = 0.0;
};

// Fixed arm directions z1, z2, z3 (unit vectors at mutual angles 2*pi/3,
// z2 = R(-2*pi/3) z1, z3 = R(2*pi/3) z1) and the orthogonal triple
// tau1 = (0,-1,1), tau2 = (-2,1,1)/sqrt(3), tau3 = (1,1,1) that
// diagonalizes both the displacement actions and the dissipation form.
const std::array<Vec2, 3>& arm_directions();
const std::array<Vec2, 3>& arm_normals();  // z_i^perp = R(pi/2) z_i
const std::array<Vec3, 3>& tau_basis();

Mat2 rotation2(double phi);
Mat3 rotation3(double phi);

// Rotation acting on a pose rate (c_dot, theta_dot): rotates the planar part,
// leaves the angular rate alone.
Mat3 pose_rotation(double phi);

// Margin used by admissibility checks to keep clear of the overlap boundary.
double admissibility_margin(const SwimmerGeometry& geom);

bool is_admissible(const SwimmerGeometry& geom, const ShapeState& xi);
void require_admissible(const SwimmerGeometry& geom, const ShapeState& xi);

// Ball centers b_i = c + (xi0 + xi_i) R(theta) z_i. Throws
// admissibility_error when the shape leaves the admissible set.
std::array<Vec2, 3> ball_centers(const SwimmerGeometry& geom, const ShapeState& xi,
                                 const Pose& pose);

// Shape matrix X(theta): stacked ball velocities from arm-length rates,
// block-diagonal with blocks R(theta) z_i.
Mat<6, 3> shape_matrix(double theta);

// Pose matrix Y(xi, theta): stacked ball velocities from pose rates,
// rows [I2 | (xi0 + xi_i) R(theta) z_i^perp].
Mat<6, 3> pose_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta);

// Balance matrix W: W f = 0 collects zero total force (top two rows) and
// zero total torque about the center (third row, built from b_perp = R(pi/2) b).
Mat<3, 6> balance_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta);

// Stacked ball velocities for given shape and pose rates, X xi_dot + Y p_dot.
Vec6 stacked_velocities(const SwimmerGeometry& geom, const ShapeState& xi, double theta,
                        const Vec3& xi_dot, const Vec3& pose_rate);

}  // namespace spr3

#endif
