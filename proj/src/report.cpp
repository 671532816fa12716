#include "spr3/report.hpp"

#include <cmath>

#include <json.hpp>

#include "spr3/errors.hpp"

namespace spr3 {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kCoefficientNames[9] = {"phi", "alpha",  "beta", "lambda", "gamma",
                                    "kappa", "h", "g1", "g2"};

double pick(const AsymptoticCoefficients& c, int k) {
    switch (k) {
        case 0: return c.phi;
        case 1: return c.alpha;
        case 2: return c.beta;
        case 3: return c.lambda;
        case 4: return c.gamma;
        case 5: return c.kappa;
        case 6: return c.h;
        case 7: return c.g1;
        default: return c.g2;
    }
}

ordered_json coefficients_json(const AsymptoticCoefficients& c) {
    ordered_json j;
    for (int k = 0; k < 9; ++k) j[kCoefficientNames[k]] = pick(c, k);
    return j;
}

}  // namespace

std::string coefficients_report(const SwimmerGeometry& base, const std::vector<double>& ratios,
                                ExecutionPolicy policy, double fd_step) {
    if (ratios.empty()) throw config_error("coefficient report needs a non-empty ratio sweep");
    const auto rows = coefficient_table(base, ratios, policy, fd_step);

    ordered_json out;
    out["arm_length"] = base.arm_length;
    out["viscosity"] = base.viscosity;
    out["ratios"] = ratios;
    out["rows"] = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["ratio"] = row.ratio;
        r["numeric"] = coefficients_json(row.numeric);
        r["series"] = coefficients_json(row.series);
        ordered_json dev;
        for (int k = 0; k < 9; ++k)
            dev[kCoefficientNames[k]] = std::fabs(pick(row.numeric, k) - pick(row.series, k));
        r["deviation"] = dev;
        out["rows"].push_back(std::move(r));
    }

    // Fitted convergence slope of the deviation per coefficient. Deviations at
    // rounding level throughout the sweep admit no slope; those are marked
    // "exact" instead.
    ordered_json slopes;
    for (int k = 0; k < 9; ++k) {
        if (rows.size() < 2) {
            slopes[kCoefficientNames[k]] = nullptr;
            continue;
        }
        std::vector<double> xs, devs;
        bool measurable = true;
        for (const auto& row : rows) {
            const double d = std::fabs(pick(row.numeric, k) - pick(row.series, k));
            const double scale = std::fmax(std::fabs(pick(row.series, k)), 1e-30);
            if (d <= 1e-13 * scale) measurable = false;
            xs.push_back(row.ratio);
            devs.push_back(d);
        }
        if (measurable)
            slopes[kCoefficientNames[k]] = log_log_slope(xs, devs);
        else
            slopes[kCoefficientNames[k]] = "exact";
    }
    out["slopes"] = slopes;
    return out.dump(2) + "\n";
}

}  // namespace spr3
