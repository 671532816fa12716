#include "spr3/strokes.hpp"

#include <cmath>
#include <string>

#include "spr3/errors.hpp"

namespace spr3 {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt3 = std::sqrt(3.0);

void require_positive_coefficients(const AsymptoticCoefficients& c) {
    if (!(c.alpha > 0.0) || !(c.gamma > 0.0) || !(c.g1 > 0.0) || !(c.g2 > 0.0))
        throw config_error("stroke construction needs positive alpha, gamma, g1, g2");
}

Vec3 scale_to_omega(const AsymptoticCoefficients& c, const Vec3& dp) {
    const double d12 = std::sqrt(c.g1 * c.g2) / (std::sqrt(2.0) * c.alpha);
    const double d3 = c.g1 / (kSqrt3 * c.gamma);
    return {d12 * dp[0], d12 * dp[1], d3 * dp[2]};
}

}  // namespace

Vec3 omega_vector(const AsymptoticCoefficients& coeffs, const DisplacementTarget& target) {
    require_positive_coefficients(coeffs);
    return scale_to_omega(coeffs, target);
}

Vec3 realized_displacement(const AsymptoticCoefficients& coeffs, const EllipticStroke& stroke) {
    const Vec3 area = cross(stroke.u, stroke.v);  // oriented ellipse area over pi
    const auto& tau = tau_basis();
    // Skew actions: translations couple through alpha (xi x tau_j), the
    // rotation through gamma (tau3 x xi), so its holonomy carries the
    // opposite orientation sign.
    return {2.0 * kPi * coeffs.alpha * dot(area, tau[0]),
            2.0 * kPi * coeffs.alpha * dot(area, tau[1]),
            -2.0 * kPi * coeffs.gamma * dot(area, tau[2])};
}

EllipticStroke optimal_stroke(const AsymptoticCoefficients& coeffs,
                              const DisplacementTarget& target, const SwimmerGeometry& geom) {
    require_positive_coefficients(coeffs);
    if (norm(target) == 0.0) throw config_error("degenerate zero displacement target");

    // Plane normal for the auxiliary pair. The rotation component enters
    // with reversed sign so that mixed targets keep consistent orientation
    // between translation and rotation holonomies.
    const Vec3 omega = scale_to_omega(coeffs, Vec3{target[0], target[1], -target[2]});
    const double omega_norm = norm(omega);
    const Vec3 omega_hat = omega / omega_norm;

    // First standard basis vector not parallel to omega, projected and scaled.
    Vec3 w{};
    for (int i = 0; i < 3; ++i) {
        Vec3 e{};
        e[i] = 1.0;
        if (std::fabs(dot(e, omega_hat)) < 1.0 - 1e-12) {
            w = e;
            break;
        }
    }
    Vec3 s1 = w - dot(w, omega_hat) * omega_hat;
    s1 = s1 * (std::sqrt(omega_norm) / norm(s1));
    Vec3 s2 = cross(omega_hat, s1);
    s2 = s2 * (std::sqrt(omega_norm) / norm(s2));

    // u = U Lambda^{-1/2} s1 / sqrt(2 pi), columns of U the normalized taus.
    const auto& tau = tau_basis();
    const Vec3 that1 = tau[0] / norm(tau[0]);
    const Vec3 that2 = tau[1] / norm(tau[1]);
    const Vec3 that3 = tau[2] / norm(tau[2]);
    auto assemble = [&](const Vec3& s) {
        const double pref = 1.0 / std::sqrt(2.0 * kPi);
        return pref * (s[0] / std::sqrt(coeffs.g1) * that1 + s[1] / std::sqrt(coeffs.g1) * that2 +
                       s[2] / std::sqrt(coeffs.g2) * that3);
    };

    EllipticStroke stroke;
    stroke.u = assemble(s1);
    stroke.v = assemble(s2);

    // The auxiliary pair fixes the ellipse up to traversal direction; pick
    // the direction that realizes +dp rather than -dp.
    if (dot(realized_displacement(coeffs, stroke), target) < 0.0)
        std::swap(stroke.u, stroke.v);
    const double rotation = realized_displacement(coeffs, stroke)[2];
    stroke.sigma = rotation == 0.0 ? 0.0 : rotation / (2.0 * kPi);

    // The ellipse must stay inside the admissible shape set:
    // min_t of arm i is arm_length - hypot(u_i, v_i).
    const double bound = geom.min_arm_length() + admissibility_margin(geom);
    for (int i = 0; i < 3; ++i) {
        const double reach = std::hypot(stroke.u[i], stroke.v[i]);
        if (!(geom.arm_length - reach > bound))
            throw admissibility_error(
                "optimal stroke amplitude " + std::to_string(reach) + " on arm " +
                std::to_string(i + 1) +
                " leaves the admissible set; reduce the displacement target or "
                "increase the arm length");
    }
    return stroke;
}

}  // namespace spr3
