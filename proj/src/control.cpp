#include "spr3/control.hpp"

#include <cmath>
#include <string>

#include "spr3/errors.hpp"
#include "spr3/hydrodynamics.hpp"

namespace spr3 {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Eliminates the forces from W f = 0 given the 6x6 map `force_law` with
// f proportional to force_law * u: solve (W B Y) p_dot = -(W B X) xi_dot.
Mat3 eliminate_forces(const SwimmerGeometry& geom, const ShapeState& xi, double theta,
                      const Mat6& force_law) {
    const Mat<3, 6> wb = balance_matrix(geom, xi, theta) * force_law;
    const Mat3 lhs = wb * pose_matrix(geom, xi, theta);
    const Mat3 rhs = wb * shape_matrix(theta);
    Mat3 f;
    try {
        f = solve(lhs, rhs) * -1.0;
    } catch (const numerical_error&) {
        throw numerical_error("degenerate control elimination, condition number ~ " +
                              std::to_string(condition_number(lhs)));
    }
    const Mat3 residual = lhs * f + rhs;
    if (frobenius_norm(residual) > 1e-12 * frobenius_norm(rhs))
        throw numerical_error("control elimination residual too large, condition number ~ " +
                              std::to_string(condition_number(lhs)));
    return f;
}

Mat6 leading_order_force_law(const SwimmerGeometry& geom, const ShapeState& xi, double theta) {
    const auto centers = ball_centers(geom, xi, Pose{{0.0, 0.0}, theta});
    const Mat6 l = interaction_matrix(centers, geom.radius, geom.viscosity);
    // (I - nu L); the drag prefactor nu cancels in the elimination
    Mat6 law = l * (-geom.drag_coefficient());
    for (int i = 0; i < 6; ++i) law(i, i) += 1.0;
    return law;
}

Mat6 exact_force_law(const SwimmerGeometry& geom, const ShapeState& xi, double theta) {
    const auto centers = ball_centers(geom, xi, Pose{{0.0, 0.0}, theta});
    Mat6 mobility = interaction_matrix(centers, geom.radius, geom.viscosity);
    for (int i = 0; i < 6; ++i) mobility(i, i) += 1.0 / geom.drag_coefficient();
    return solve(mobility, Mat6::identity());
}

}  // namespace

Mat3 control_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta) {
    require_admissible(geom, xi);
    return eliminate_forces(geom, xi, theta, leading_order_force_law(geom, xi, theta));
}

Mat3 control_matrix_full_inversion(const SwimmerGeometry& geom, const ShapeState& xi,
                                   double theta) {
    require_admissible(geom, xi);
    return eliminate_forces(geom, xi, theta, exact_force_law(geom, xi, theta));
}

Mat3 extract_F0(const SwimmerGeometry& geom) { return control_matrix(geom, Vec3{}, 0.0); }

ControlExpansion extract_expansion(const SwimmerGeometry& geom, double fd_step) {
    geom.validate();
    const double h = fd_step > 0.0 ? fd_step : 1e-4 * geom.arm_length;
    if (!(geom.arm_length - h > geom.min_arm_length()))
        throw config_error("finite-difference step leaves the admissible set");

    // derivative[i](k, j) = dF[k][j] / dxi_i at xi = 0
    Mat3 derivative[3];
    double richardson = 0.0;
    for (int i = 0; i < 3; ++i) {
        auto central = [&](double step) {
            Vec3 xi;
            xi[i] = step;
            const Mat3 fp = control_matrix(geom, xi, 0.0);
            xi[i] = -step;
            const Mat3 fm = control_matrix(geom, xi, 0.0);
            return (fp - fm) * (0.5 / step);
        };
        const Mat3 coarse = central(h);
        const Mat3 fine = central(0.5 * h);
        derivative[i] = fine + (fine - coarse) * (1.0 / 3.0);
        richardson = std::fmax(richardson, frobenius_norm(fine - coarse) / 3.0);
    }

    ControlExpansion exp;
    exp.F0 = extract_F0(geom);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            exp.A1(i, j) = derivative[i](0, j);
            exp.A2(i, j) = derivative[i](1, j);
            exp.A3(i, j) = derivative[i](2, j);
        }
    exp.M1 = (exp.A1 - transpose(exp.A1)) * 0.5;
    exp.M2 = (exp.A2 - transpose(exp.A2)) * 0.5;
    exp.M3 = (exp.A3 - transpose(exp.A3)) * 0.5;
    exp.fd_step = h;
    const double scale = std::fmax(frobenius_norm(exp.A1),
                                   std::fmax(frobenius_norm(exp.A2), frobenius_norm(exp.A3)));
    exp.fd_error = scale > 0.0 ? richardson / scale : richardson;
    exp.fd_warning = exp.fd_error > 1e-6;
    return exp;
}

F0Fit fit_F0(const Mat3& f0) {
    Mat3 t;
    t(0, 0) = -2.0;
    t(0, 1) = 1.0;
    t(0, 2) = 1.0;
    t(1, 1) = kSqrt3;
    t(1, 2) = -kSqrt3;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            num += f0(i, j) * t(i, j);
            den += t(i, j) * t(i, j);
        }
    const double phi = num / den;
    const double misfit = frobenius_norm(f0 - t * phi);
    const double scale = frobenius_norm(f0);
    return {phi, scale > 0.0 ? misfit / scale : misfit};
}

namespace {

Mat3 corrector_template_1(double alpha, double beta, double lambda) {
    Mat3 a;
    a(0, 0) = -lambda;
    a(0, 1) = alpha + beta / 3.0;
    a(0, 2) = alpha + beta / 3.0;
    a(1, 0) = -alpha + beta / 3.0;
    a(1, 1) = 0.5 * lambda;
    a(1, 2) = -2.0 * beta / 3.0;
    a(2, 0) = -alpha + beta / 3.0;
    a(2, 1) = -2.0 * beta / 3.0;
    a(2, 2) = 0.5 * lambda;
    return a;
}

Mat3 corrector_template_2(double alpha, double beta, double lambda) {
    Mat3 a;
    a(0, 1) = (alpha - beta) / 3.0;
    a(0, 2) = (beta - alpha) / 3.0;
    a(1, 0) = (-beta - alpha) / 3.0;
    a(1, 1) = 0.5 * lambda;
    a(1, 2) = -2.0 * alpha / 3.0;
    a(2, 0) = (alpha + beta) / 3.0;
    a(2, 1) = 2.0 * alpha / 3.0;
    a(2, 2) = -0.5 * lambda;
    return a * kSqrt3;
}

Mat3 corrector_template_3(double gamma) {
    Mat3 a;
    a(0, 1) = -gamma;
    a(0, 2) = gamma;
    a(1, 0) = gamma;
    a(1, 2) = -gamma;
    a(2, 0) = -gamma;
    a(2, 1) = gamma;
    return a;
}

}  // namespace

CorrectorFit fit_correctors(const Mat3& a1, const Mat3& a2) {
    // least squares over the 18 stacked entries against the three patterns
    const Mat3 pa1 = corrector_template_1(1.0, 0.0, 0.0);
    const Mat3 pb1 = corrector_template_1(0.0, 1.0, 0.0);
    const Mat3 pl1 = corrector_template_1(0.0, 0.0, 1.0);
    const Mat3 pa2 = corrector_template_2(1.0, 0.0, 0.0);
    const Mat3 pb2 = corrector_template_2(0.0, 1.0, 0.0);
    const Mat3 pl2 = corrector_template_2(0.0, 0.0, 1.0);

    auto stack = [](const Mat3& m1, const Mat3& m2, int k) {
        return k < 9 ? m1.d[static_cast<std::size_t>(k)] : m2.d[static_cast<std::size_t>(k - 9)];
    };
    Mat3 gram;
    Vec3 rhs;
    const Mat3* pat1[3] = {&pa1, &pb1, &pl1};
    const Mat3* pat2[3] = {&pa2, &pb2, &pl2};
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            double s = 0.0;
            for (int k = 0; k < 18; ++k)
                s += stack(*pat1[p], *pat2[p], k) * stack(*pat1[q], *pat2[q], k);
            gram(p, q) = s;
        }
        double s = 0.0;
        for (int k = 0; k < 18; ++k) s += stack(*pat1[p], *pat2[p], k) * stack(a1, a2, k);
        rhs[p] = s;
    }
    const Vec3 sol = solve(gram, rhs);
    const Mat3 fit1 = corrector_template_1(sol[0], sol[1], sol[2]);
    const Mat3 fit2 = corrector_template_2(sol[0], sol[1], sol[2]);
    const double misfit = std::sqrt(frobenius_norm(a1 - fit1) * frobenius_norm(a1 - fit1) +
                                    frobenius_norm(a2 - fit2) * frobenius_norm(a2 - fit2));
    const double scale = std::sqrt(frobenius_norm(a1) * frobenius_norm(a1) +
                                   frobenius_norm(a2) * frobenius_norm(a2));
    return {sol[0], sol[1], sol[2], scale > 0.0 ? misfit / scale : misfit};
}

RotationFit fit_rotation_corrector(const Mat3& a3) {
    const Mat3 t = corrector_template_3(1.0);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            num += a3(i, j) * t(i, j);
            den += t(i, j) * t(i, j);
        }
    const double gamma = num / den;
    const double misfit = frobenius_norm(a3 - t * gamma);
    const double scale = frobenius_norm(a3);
    return {gamma, scale > 0.0 ? misfit / scale : misfit};
}

AsymptoticCoefficients series_coefficients(const SwimmerGeometry& geom) {
    geom.validate();
    const double r = geom.ratio();
    const double xi0 = geom.arm_length;
    AsymptoticCoefficients c{};
    c.phi = 1.0 / 6.0 - r / (16.0 * kSqrt3);
    c.alpha = r / (32.0 * kSqrt3 * xi0);
    c.beta = r / (16.0 * kSqrt3 * xi0);
    c.lambda = 5.0 * r / (48.0 * kSqrt3 * xi0);
    c.gamma = 1.0 / (6.0 * kSqrt3 * xi0 * xi0);
    c.kappa = 2.0 / 3.0 + r / kSqrt3;
    c.h = 1.0 / 6.0 + 7.0 * r / (16.0 * kSqrt3);
    c.g1 = c.kappa - c.h;
    c.g2 = c.kappa + 2.0 * c.h;
    return c;
}

CorrectorMatrices build_correctors(const AsymptoticCoefficients& coeffs) {
    return {corrector_template_1(coeffs.alpha, coeffs.beta, coeffs.lambda),
            corrector_template_2(coeffs.alpha, coeffs.beta, coeffs.lambda),
            corrector_template_3(coeffs.gamma)};
}

Mat3 build_F0(const AsymptoticCoefficients& coeffs) {
    Mat3 t;
    t(0, 0) = -2.0;
    t(0, 1) = 1.0;
    t(0, 2) = 1.0;
    t(1, 1) = kSqrt3;
    t(1, 2) = -kSqrt3;
    return t * coeffs.phi;
}

Vec3 skew_action(int k, const AsymptoticCoefficients& coeffs, const Vec3& xi) {
    const auto& tau = tau_basis();
    switch (k) {
        case 1:
            return coeffs.alpha * cross(xi, tau[0]);
        case 2:
            return coeffs.alpha * cross(xi, tau[1]);
        case 3:
            return coeffs.gamma * cross(tau[2], xi);
        default:
            throw config_error("skew_action index must be 1, 2 or 3");
    }
}

}  // namespace spr3
