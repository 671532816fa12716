#include "spr3/kinematics.hpp"

#include <cmath>
#include <string>

#include "spr3/errors.hpp"

namespace spr3 {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

double SwimmerGeometry::drag_coefficient() const { return 6.0 * kPi * viscosity * radius; }

double SwimmerGeometry::min_arm_length() const { return 2.0 * radius / kSqrt3; }

void SwimmerGeometry::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw config_error("ball radius must be positive");
    if (!(arm_length > 0.0) || !std::isfinite(arm_length))
        throw config_error("arm length must be positive");
    if (!(viscosity > 0.0) || !std::isfinite(viscosity))
        throw config_error("viscosity must be positive");
    if (!(arm_length > min_arm_length()))
        throw config_error("reference arm length " + std::to_string(arm_length) +
                           " does not exceed the overlap bound 2a/sqrt(3) = " +
                           std::to_string(min_arm_length()));
}

const std::array<Vec2, 3>& arm_directions() {
    static const std::array<Vec2, 3> z = {
        Vec2{1.0, 0.0},
        Vec2{-0.5, -0.5 * kSqrt3},  // R(-2*pi/3) z1
        Vec2{-0.5, 0.5 * kSqrt3},   // R(+2*pi/3) z1
    };
    return z;
}

const std::array<Vec2, 3>& arm_normals() {
    static const std::array<Vec2, 3> zp = {
        Vec2{0.0, 1.0},
        Vec2{0.5 * kSqrt3, -0.5},
        Vec2{-0.5 * kSqrt3, -0.5},
    };
    return zp;
}

const std::array<Vec3, 3>& tau_basis() {
    static const std::array<Vec3, 3> tau = {
        Vec3{0.0, -1.0, 1.0},
        Vec3{-2.0 / kSqrt3, 1.0 / kSqrt3, 1.0 / kSqrt3},
        Vec3{1.0, 1.0, 1.0},
    };
    return tau;
}

Mat2 rotation2(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    Mat2 r;
    r(0, 0) = c;
    r(0, 1) = -s;
    r(1, 0) = s;
    r(1, 1) = c;
    return r;
}

Mat3 rotation3(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    Mat3 r;
    r(0, 0) = c;
    r(0, 1) = -s;
    r(1, 0) = s;
    r(1, 1) = c;
    r(2, 2) = 1.0;
    return r;
}

Mat3 pose_rotation(double phi) { return rotation3(phi); }

double admissibility_margin(const SwimmerGeometry& geom) { return 1e-12 * geom.arm_length; }

bool is_admissible(const SwimmerGeometry& geom, const ShapeState& xi) {
    const double bound = geom.min_arm_length() + admissibility_margin(geom);
    for (int i = 0; i < 3; ++i)
        if (!(geom.arm_length + xi[i] > bound)) return false;
    return true;
}

void require_admissible(const SwimmerGeometry& geom, const ShapeState& xi) {
    if (!is_admissible(geom, xi))
        throw admissibility_error(
            "shape (" + std::to_string(xi[0]) + ", " + std::to_string(xi[1]) + ", " +
            std::to_string(xi[2]) + ") leaves the admissible set: arm length must exceed " +
            std::to_string(geom.min_arm_length()));
}

std::array<Vec2, 3> ball_centers(const SwimmerGeometry& geom, const ShapeState& xi,
                                 const Pose& pose) {
    require_admissible(geom, xi);
    const Mat2 r = rotation2(pose.theta);
    std::array<Vec2, 3> b;
    for (int i = 0; i < 3; ++i)
        b[i] = pose.c + (geom.arm_length + xi[i]) * (r * arm_directions()[i]);
    return b;
}

Mat<6, 3> shape_matrix(double theta) {
    const Mat2 r = rotation2(theta);
    Mat<6, 3> x;
    for (int i = 0; i < 3; ++i) {
        const Vec2 zi = r * arm_directions()[i];
        x(2 * i, i) = zi[0];
        x(2 * i + 1, i) = zi[1];
    }
    return x;
}

Mat<6, 3> pose_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta) {
    const Mat2 r = rotation2(theta);
    Mat<6, 3> y;
    for (int i = 0; i < 3; ++i) {
        const Vec2 zp = r * arm_normals()[i];
        const double zeta = geom.arm_length + xi[i];
        y(2 * i, 0) = 1.0;
        y(2 * i + 1, 1) = 1.0;
        y(2 * i, 2) = zeta * zp[0];
        y(2 * i + 1, 2) = zeta * zp[1];
    }
    return y;
}

Mat<3, 6> balance_matrix(const SwimmerGeometry& geom, const ShapeState& xi, double theta) {
    const Mat2 r = rotation2(theta);
    Mat<3, 6> w;
    for (int i = 0; i < 3; ++i) {
        w(0, 2 * i) = 1.0;
        w(1, 2 * i + 1) = 1.0;
        // b_perp = R(pi/2) b for the ball center relative to c
        const Vec2 b = (geom.arm_length + xi[i]) * (r * arm_directions()[i]);
        w(2, 2 * i) = -b[1];
        w(2, 2 * i + 1) = b[0];
    }
    return w;
}

Vec6 stacked_velocities(const SwimmerGeometry& geom, const ShapeState& xi, double theta,
                        const Vec3& xi_dot, const Vec3& pose_rate) {
    return shape_matrix(theta) * xi_dot + pose_matrix(geom, xi, theta) * pose_rate;
}

}  // namespace spr3
