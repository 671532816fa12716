#include "spr3/energetics.hpp"

#include <cmath>

#include "spr3/errors.hpp"
#include "spr3/hydrodynamics.hpp"
#include "spr3/strokes_fwd.hpp"

namespace spr3 {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Mat3 gram_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta,
                 double* skew_residual) {
    require_admissible(geom, xi);
    const auto centers = ball_centers(geom, xi, Pose{{0.0, 0.0}, theta});
    const Mat6 l = interaction_matrix(centers, geom.radius, geom.viscosity);
    Mat6 law = l * (-geom.drag_coefficient());
    for (int i = 0; i < 6; ++i) law(i, i) += 1.0;

    const Mat3 f = control_matrix(geom, xi, theta);
    const Mat<6, 3> motion = shape_matrix(theta) + pose_matrix(geom, xi, theta) * f;
    const Mat3 raw = transpose(motion) * (law * motion);
    const Mat3 skew = (raw - transpose(raw)) * 0.5;
    if (skew_residual) {
        const double scale = frobenius_norm(raw);
        *skew_residual = scale > 0.0 ? frobenius_norm(skew) / scale : 0.0;
    }
    return (raw + transpose(raw)) * 0.5;
}

DissipationForm extract_G0(const SwimmerGeometry& geom) {
    const Mat3 g0 = gram_matrix(geom, Vec3{}, 0.0);
    const double kappa = (g0(0, 0) + g0(1, 1) + g0(2, 2)) / 3.0;
    const double h =
        (g0(0, 1) + g0(0, 2) + g0(1, 2) + g0(1, 0) + g0(2, 0) + g0(2, 1)) / 6.0;
    Mat3 fit;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) fit(i, j) = i == j ? kappa : h;
    const double scale = frobenius_norm(g0);
    return {g0, kappa, h, kappa - h, kappa + 2.0 * h,
            scale > 0.0 ? frobenius_norm(g0 - fit) / scale : 0.0};
}

DissipationForm dissipation_from_coefficients(const AsymptoticCoefficients& coeffs) {
    Mat3 g0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g0(i, j) = i == j ? coeffs.kappa : coeffs.h;
    return {g0, coeffs.kappa, coeffs.h, coeffs.kappa - coeffs.h, coeffs.kappa + 2.0 * coeffs.h,
            0.0};
}

LoopDissipation loop_dissipation(const DissipationForm& form, const EllipticStroke& stroke,
                                 int n_steps) {
    if (n_steps < 16) throw config_error("loop dissipation needs at least 16 quadrature nodes");
    // trapezoid on the periodic integrand; nodes t_k = 2 pi k / n
    double acc = 0.0;
    const double dt = 2.0 * kPi / n_steps;
    for (int k = 0; k < n_steps; ++k) {
        const Vec3 rate = stroke.shape_rate_at(k * dt);
        acc += dot(form.G0 * rate, rate);
    }
    const double closed =
        kPi * (dot(form.G0 * stroke.u, stroke.u) + dot(form.G0 * stroke.v, stroke.v));
    return {acc * dt, closed};
}

AsymptoticCoefficients extracted_coefficients(const SwimmerGeometry& geom, double fd_step) {
    const ControlExpansion exp = extract_expansion(geom, fd_step);
    const F0Fit f0 = fit_F0(exp.F0);
    const CorrectorFit cor = fit_correctors(exp.A1, exp.A2);
    const RotationFit rot = fit_rotation_corrector(exp.A3);
    const DissipationForm diss = extract_G0(geom);
    AsymptoticCoefficients c{};
    c.phi = f0.phi;
    c.alpha = cor.alpha;
    c.beta = cor.beta;
    c.lambda = cor.lambda;
    c.gamma = rot.gamma;
    c.kappa = diss.kappa;
    c.h = diss.h;
    c.g1 = diss.g1;
    c.g2 = diss.g2;
    return c;
}

}  // namespace spr3
