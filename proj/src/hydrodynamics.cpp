#include "spr3/hydrodynamics.hpp"

#include <cmath>
#include <string>

#include "spr3/errors.hpp"

namespace spr3 {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Mat3 stokeslet(const Vec3& x, double viscosity) {
    const double r = norm(x);
    if (r == 0.0) throw numerical_error("stokeslet is singular at zero displacement");
    const double pref = 1.0 / (8.0 * kPi * viscosity);
    const double inv_r = 1.0 / r;
    const double inv_r3 = inv_r * inv_r * inv_r;
    Mat3 s;
    for (int i = 0; i < 3; ++i) {
        s(i, i) = pref * inv_r;
        for (int j = 0; j < 3; ++j) s(i, j) += pref * x[i] * x[j] * inv_r3;
    }
    return s;
}

Mat2 stokeslet_planar(const Vec2& x, double viscosity) {
    const double r = norm(x);
    if (r == 0.0) throw numerical_error("stokeslet is singular at zero displacement");
    const double pref = 1.0 / (8.0 * kPi * viscosity);
    const double inv_r = 1.0 / r;
    const double inv_r3 = inv_r * inv_r * inv_r;
    Mat2 s;
    for (int i = 0; i < 2; ++i) {
        s(i, i) = pref * inv_r;
        for (int j = 0; j < 2; ++j) s(i, j) += pref * x[i] * x[j] * inv_r3;
    }
    return s;
}

Mat6 interaction_matrix(const std::array<Vec2, 3>& centers, double radius, double viscosity) {
    Mat6 l;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Vec2 bij = centers[i] - centers[j];
            if (!(norm(bij) > 2.0 * radius))
                throw admissibility_error("balls " + std::to_string(i + 1) + " and " +
                                          std::to_string(j + 1) + " overlap: center distance " +
                                          std::to_string(norm(bij)) + " <= 2a");
            const Mat2 s = stokeslet_planar(bij, viscosity);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    l(2 * i + r, 2 * j + c) = s(r, c);
                    l(2 * j + r, 2 * i + c) = s(r, c);
                }
        }
    return l;
}

Vec6 forces_leading_order(const Vec6& velocities, const Mat6& interaction, double drag) {
    return drag * velocities - (drag * drag) * (interaction * velocities);
}

Vec6 forces_exact(const Vec6& velocities, const Mat6& interaction, double drag) {
    Mat6 mobility = interaction;
    for (int i = 0; i < 6; ++i) mobility(i, i) += 1.0 / drag;
    Vec6 f;
    try {
        f = solve(mobility, velocities);
    } catch (const numerical_error&) {
        throw numerical_error("mobility system is singular, condition number ~ " +
                              std::to_string(condition_number(mobility)));
    }
    const Vec6 residual = mobility * f - velocities;
    if (norm(residual) > 1e-12 * norm(velocities))
        throw numerical_error("mobility solve residual " + std::to_string(norm(residual)) +
                              " too large, condition number ~ " +
                              std::to_string(condition_number(mobility)));
    return f;
}

double instantaneous_power(const Vec6& forces, const Vec6& velocities) {
    return dot(forces, velocities);
}

}  // namespace spr3
