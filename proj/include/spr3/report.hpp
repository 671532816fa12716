#ifndef SPR3_REPORT_HPP
#define SPR3_REPORT_HPP

#include <string>
#include <vector>

#include "spr3/kinematics.hpp"
#include "spr3/sweep.hpp"

namespace spr3 {

// Coefficient comparison table over a ratio sweep, serialized as JSON:
// one row per ratio with numeric/series values and absolute deviations,
// plus the fitted log-log convergence slope per coefficient ("exact" when
// the deviation sits at rounding level throughout the sweep).
std::string coefficients_report(const SwimmerGeometry& base, const std::vector<double>& ratios,
                                ExecutionPolicy policy = ExecutionPolicy::parallel,
                                double fd_step = 0.0);

}  // namespace spr3

#endif
