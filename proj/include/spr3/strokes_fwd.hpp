#ifndef SPR3_STROKES_FWD_HPP
#define SPR3_STROKES_FWD_HPP

#include <cmath>

#include "spr3/linalg.hpp"

namespace spr3 {

/// Origin-centered ellipse in shape space, xi(t) = cos(t) u + sin(t) v,
/// traversed once per period 2*pi of stroke time, plus the induced constant
/// rotation rate sigma.
struct EllipticStroke {
    Vec3 u{};
    Vec3 v{};
    double sigma = 0.0;

    Vec3 shape_at(double t) const { return std::cos(t) * u + std::sin(t) * v; }
    Vec3 shape_rate_at(double t) const { return -std::sin(t) * u + std::cos(t) * v; }
};

}  // namespace spr3

#endif
