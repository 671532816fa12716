#ifndef SPR3_ENERGETICS_HPP
#define SPR3_ENERGETICS_HPP

#include "spr3/control.hpp"
#include "spr3/kinematics.hpp"
#include "spr3/strokes_fwd.hpp"

namespace spr3 {

/// Dissipation quadratic form at the zero stroke, normalized by the drag
/// coefficient: equal diagonal kappa, equal off-diagonal h, eigenvalues
/// g1 = kappa - h (double, on the plane orthogonal to (1,1,1)) and
/// g2 = kappa + 2h (simple, along (1,1,1)).
struct DissipationForm {
    Mat3 G0;
    double kappa;
    double h;
    double g1;
    double g2;
    double fit_residual;  // relative misfit against the kappa/h structure
};

// Power quadratic form G(xi), normalized by drag: instantaneous dissipated
// power is drag * (G xi_dot . xi_dot). Assembled at theta (default 0; the
// result is theta-independent). If skew_residual is given, receives the
// relative skew part of the raw assembly before symmetrization.
Mat3 gram_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta = 0.0,
                 double* skew_residual = nullptr);

DissipationForm extract_G0(const SwimmerGeometry& geom);

// Builds the kappa/h form directly from coefficients.
DissipationForm dissipation_from_coefficients(const AsymptoticCoefficients& coeffs);

struct LoopDissipation {
    double quadrature;   // trapezoid over one period
    double closed_form;  // pi (G0 u.u + G0 v.v)
};

// Energy dissipated over one period of an elliptic stroke (drag-normalized).
LoopDissipation loop_dissipation(const DissipationForm& form, const EllipticStroke& stroke,
                                 int n_steps = 256);

// Full coefficient set extracted numerically (template fits of F0, the
// correctors and G0). fd_step as in extract_expansion.
AsymptoticCoefficients extracted_coefficients(const SwimmerGeometry& geom, double fd_step = 0.0);

}  // namespace spr3

#endif
