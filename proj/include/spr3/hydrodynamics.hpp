#ifndef SPR3_HYDRODYNAMICS_HPP
#define SPR3_HYDRODYNAMICS_HPP

#include <array>

#include "spr3/kinematics.hpp"
#include "spr3/linalg.hpp"

namespace spr3 {

/// Stokeslet S(x) = (I/|x| + x (x) x / |x|^3) / (8 pi mu), the fundamental
/// solution of the Stokes equations. Throws numerical_error at x = 0.
Mat3 stokeslet(const Vec3& x, double viscosity);

/// Planar restriction of the stokeslet (forces and velocities stay in the
/// swimming plane).
Mat2 stokeslet_planar(const Vec2& x, double viscosity);

/// Mutual interaction matrix L: 2x2 planar stokeslet blocks S(b_i - b_j) off
/// the diagonal, zero diagonal blocks. Requires pairwise center distances
/// above 2a (no overlap).
Mat6 interaction_matrix(const std::array<Vec2, 3>& centers, double radius, double viscosity);

// Leading-order inversion of the mobility relation: f = (nu I - nu^2 L) u.
Vec6 forces_leading_order(const Vec6& velocities, const Mat6& interaction, double drag);

// Exact inversion of u = (I/nu + L) f by a direct dense solve.
Vec6 forces_exact(const Vec6& velocities, const Mat6& interaction, double drag);

// Rate of work of the forces on the balls, f . u.
double instantaneous_power(const Vec6& forces, const Vec6& velocities);

}  // namespace spr3

#endif
