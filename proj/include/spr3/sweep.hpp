#ifndef SPR3_SWEEP_HPP
#define SPR3_SWEEP_HPP

#include <vector>

#include "spr3/control.hpp"
#include "spr3/kinematics.hpp"

namespace spr3 {

// Independent work items (one geometry ratio, one scenario) fan out across
// threads; the serial path is kept as the reference and produces bitwise
// identical results.
enum class ExecutionPolicy { serial, parallel };

struct CoefficientRow {
    double ratio;  // a / xi0
    AsymptoticCoefficients numeric;
    AsymptoticCoefficients series;
};

// Numeric extraction plus series evaluation at each ratio, holding arm
// length and viscosity fixed from `base`.
std::vector<CoefficientRow> coefficient_table(const SwimmerGeometry& base,
                                              const std::vector<double>& ratios,
                                              ExecutionPolicy policy = ExecutionPolicy::parallel,
                                              double fd_step = 0.0);

// Least-squares slope of log(y) against log(x); y entries must be positive.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

// Number of threads the parallel policy would use.
int parallel_width();

}  // namespace spr3

#endif
