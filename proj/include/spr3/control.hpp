#ifndef SPR3_CONTROL_HPP
#define SPR3_CONTROL_HPP

#include "spr3/kinematics.hpp"
#include "spr3/linalg.hpp"

namespace spr3 {

/// First-order expansion of the control matrix about the zero stroke:
/// F(xi) xi_dot = F0 xi_dot + sum_k (A_k xi_dot . xi) e_k. The skew parts
/// M_k of the correctors carry the net displacement per closed stroke.
struct ControlExpansion {
    Mat3 F0;
    Mat3 A1, A2, A3;
    Mat3 M1, M2, M3;        // skew parts (A_k - A_k^T) / 2
    double fd_step = 0.0;   // base central-difference step
    double fd_error = 0.0;  // Richardson error estimate, relative to max |A_k|
    bool fd_warning = false;
};

/// Closed-form small-ratio series for the expansion coefficients, valid for
/// radius << arm length. kappa/h parametrize the dissipation form, g1/g2 its
/// eigenvalues (g1 double, g2 simple on the (1,1,1) axis).
struct AsymptoticCoefficients {
    double phi;     // F0 scale, -> 1/6
    double alpha;   // translation holonomy scale, ~ 1/length
    double beta;    // symmetric corrector scale, ~ 1/length
    double lambda;  // diagonal corrector scale, ~ 1/length
    double gamma;   // rotation holonomy scale, ~ 1/length^2
    double kappa;   // dissipation diagonal, -> 2/3
    double h;       // dissipation off-diagonal, -> 1/6
    double g1;      // kappa - h, -> 1/2
    double g2;      // kappa + 2h, -> 1
};

// Control matrix F(xi, theta) with p_dot = F xi_dot, obtained by eliminating
// the forces from the force/torque balance under the leading-order force law
// f = (nu I - nu^2 L) u. Throws numerical_error (with a condition number) if
// the 3x3 elimination system degenerates.
Mat3 control_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta);

// Validation variant using the exact mobility inverse f = (I/nu + L)^-1 u.
Mat3 control_matrix_full_inversion(const SwimmerGeometry& geom, const ShapeState& xi,
                                   double theta);

// F0 = F(0, 0).
Mat3 extract_F0(const SwimmerGeometry& geom);

// First-order correctors A_k[i][j] = dF[k][j]/dxi_i at xi = 0, by central
// differences with one Richardson extrapolation level (steps h and h/2).
// Default step 1e-4 * arm_length.
ControlExpansion extract_expansion(const SwimmerGeometry& geom, double fd_step = 0.0);

// Template fits against the structural patterns. `residual` is the relative
// misfit after the least-squares projection.
struct F0Fit {
    double phi;
    double residual;
};
struct CorrectorFit {
    double alpha, beta, lambda;
    double residual;
};
struct RotationFit {
    double gamma;
    double residual;
};

F0Fit fit_F0(const Mat3& f0);
CorrectorFit fit_correctors(const Mat3& a1, const Mat3& a2);
RotationFit fit_rotation_corrector(const Mat3& a3);

// Two-term series in a/xi0 for every coefficient.
AsymptoticCoefficients series_coefficients(const SwimmerGeometry& geom);

// Exact structural templates assembled from (alpha, beta, lambda, gamma).
struct CorrectorMatrices {
    Mat3 A1, A2, A3;
};
CorrectorMatrices build_correctors(const AsymptoticCoefficients& coeffs);

Mat3 build_F0(const AsymptoticCoefficients& coeffs);

// Action of the skew part M_k on a shape offset. M1 and M2 act as
// alpha * (xi x tau_k); the rotational part acts as gamma * (tau3 x xi).
Vec3 skew_action(int k, const AsymptoticCoefficients& coeffs, const Vec3& xi);

}  // namespace spr3

#endif
