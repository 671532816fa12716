#include "spr3/sweep.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spr3/energetics.hpp"
#include "spr3/errors.hpp"

namespace spr3 {

std::vector<CoefficientRow> coefficient_table(const SwimmerGeometry& base,
                                              const std::vector<double>& ratios,
                                              ExecutionPolicy policy, double fd_step) {
    if (ratios.empty()) throw config_error("coefficient sweep needs at least one ratio");
    for (double r : ratios)
        SwimmerGeometry{r * base.arm_length, base.arm_length, base.viscosity}.validate();

    std::vector<CoefficientRow> rows(ratios.size());
    const bool par = policy == ExecutionPolicy::parallel;
    const int n = static_cast<int>(ratios.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (int i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const SwimmerGeometry geom{ratios[k] * base.arm_length, base.arm_length,
                                   base.viscosity};
        rows[k] = {ratios[k], extracted_coefficients(geom, fd_step),
                   series_coefficients(geom)};
    }
#ifndef _OPENMP
    (void)par;
#endif
    return rows;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw config_error("slope fit needs at least two points");
    const int n = static_cast<int>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!(x[static_cast<std::size_t>(i)] > 0.0) || !(y[static_cast<std::size_t>(i)] > 0.0))
            throw numerical_error("slope fit needs positive data");
        const double lx = std::log(x[static_cast<std::size_t>(i)]);
        const double ly = std::log(y[static_cast<std::size_t>(i)]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int parallel_width() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace spr3
