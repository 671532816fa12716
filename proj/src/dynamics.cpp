#include "spr3/dynamics.hpp"

#include <cmath>
#include <string>

#include "spr3/errors.hpp"

namespace spr3 {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_integrator_settings(int steps_per_loop, int loops) {
    if (steps_per_loop < 64) throw config_error("integrator needs at least 64 steps per loop");
    if (loops < 1) throw config_error("integrator needs at least one loop");
}

// One classical 4th-order step of y' = f(t, y).
template <int N, typename Rhs>
Vec<N> rk4_step(const Rhs& f, double t, const Vec<N>& y, double dt) {
    const Vec<N> k1 = f(t, y);
    const Vec<N> k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1);
    const Vec<N> k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2);
    const Vec<N> k4 = f(t + dt, y + dt * k3);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Trajectory integrate_leading_order(const AsymptoticCoefficients& coeffs,
                                   const ControlExpansion& expansion,
                                   const EllipticStroke& stroke, int steps_per_loop,
                                   int loops) {
    check_integrator_settings(steps_per_loop, loops);
    const DissipationForm diss = dissipation_from_coefficients(coeffs);
    const double sigma = stroke.sigma;

    auto rhs = [&](double t, const Vec2&) -> Vec2 {
        const Vec3 xi = stroke.shape_at(t);
        const Vec3 rate = stroke.shape_rate_at(t);
        const Vec3 f0_rate = expansion.F0 * rate;
        const Vec2 body{f0_rate[0] + dot(expansion.A1 * rate, xi),
                        f0_rate[1] + dot(expansion.A2 * rate, xi)};
        return rotation2(sigma * t) * body;
    };

    Trajectory traj;
    traj.stroke = stroke;
    traj.steps_per_loop = steps_per_loop;
    traj.loops = loops;
    const int n = steps_per_loop * loops;
    const double dt = 2.0 * kPi / steps_per_loop;
    traj.samples.reserve(static_cast<std::size_t>(n) + 1);

    Vec2 c{};
    for (int k = 0; k <= n; ++k) {
        const double t = k * dt;
        const Vec3 rate = stroke.shape_rate_at(t);
        traj.samples.push_back(
            {t, stroke.shape_at(t), c, sigma * t, dot(diss.G0 * rate, rate)});
        if (k < n) c = rk4_step(rhs, t, c, dt);
    }
    return traj;
}

Trajectory integrate_leading_order(const AsymptoticCoefficients& coeffs,
                                   const EllipticStroke& stroke, int steps_per_loop,
                                   int loops) {
    const CorrectorMatrices correctors = build_correctors(coeffs);
    ControlExpansion expansion;
    expansion.F0 = build_F0(coeffs);
    expansion.A1 = correctors.A1;
    expansion.A2 = correctors.A2;
    expansion.A3 = correctors.A3;
    return integrate_leading_order(coeffs, expansion, stroke, steps_per_loop, loops);
}

Trajectory integrate_exact(const SwimmerGeometry& geom, const EllipticStroke& stroke,
                           int steps_per_loop, int loops) {
    check_integrator_settings(steps_per_loop, loops);

    // state y = (cx, cy, theta); shape is prescribed, F evaluated at theta = 0
    // and rotated, exploiting the factorization F(xi, theta) = R(theta) F(xi).
    auto rhs = [&](double t, const Vec3& y) -> Vec3 {
        const Vec3 xi = stroke.shape_at(t);
        if (!is_admissible(geom, xi))
            throw admissibility_error("shape leaves the admissible set at t = " +
                                      std::to_string(t));
        const Vec3 body = control_matrix(geom, xi, 0.0) * stroke.shape_rate_at(t);
        return rotation3(y[2]) * body;
    };

    Trajectory traj;
    traj.stroke = stroke;
    traj.steps_per_loop = steps_per_loop;
    traj.loops = loops;
    const int n = steps_per_loop * loops;
    const double dt = 2.0 * kPi / steps_per_loop;
    traj.samples.reserve(static_cast<std::size_t>(n) + 1);

    Vec3 y{};
    for (int k = 0; k <= n; ++k) {
        const double t = k * dt;
        const Vec3 xi = stroke.shape_at(t);
        const Vec3 rate = stroke.shape_rate_at(t);
        const Mat3 g = gram_matrix(geom, xi);
        traj.samples.push_back({t, xi, Vec2{y[0], y[1]}, y[2], dot(g * rate, rate)});
        if (k < n) y = rk4_step(rhs, t, y, dt);
    }
    return traj;
}

Vec3 net_displacement(const Trajectory& traj) {
    if (traj.samples.size() < 2) throw config_error("trajectory has no samples");
    const TrajectorySample& first = traj.samples.front();
    const TrajectorySample& last = traj.samples.back();
    const double expected = 2.0 * kPi * traj.loops;
    if (std::fabs(last.t - first.t - expected) > 1e-9 * expected)
        throw config_error("trajectory does not cover whole loops");
    return {last.c[0] - first.c[0], last.c[1] - first.c[1], last.theta - first.theta};
}

double integrated_loop_energy(const Trajectory& traj) {
    if (traj.steps_per_loop <= 0 ||
        traj.samples.size() < static_cast<std::size_t>(traj.steps_per_loop) + 1)
        throw config_error("trajectory does not cover one loop");
    double acc = 0.0;
    for (int k = 0; k < traj.steps_per_loop; ++k) {
        const auto& a = traj.samples[static_cast<std::size_t>(k)];
        const auto& b = traj.samples[static_cast<std::size_t>(k) + 1];
        acc += 0.5 * (a.power + b.power) * (b.t - a.t);
    }
    return acc;
}

}  // namespace spr3
