#include "spr3/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

#include <json.hpp>

#include "spr3/dynamics.hpp"
#include "spr3/energetics.hpp"
#include "spr3/errors.hpp"
#include "spr3/svg.hpp"

namespace spr3 {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
    return buf;
}

ScenarioConfig config_from_object(const ordered_json& j) {
    static const std::set<std::string> known = {
        "geometry", "scenario", "magnitude", "dp",      "variant", "steps_per_loop",
        "loops",    "coefficients", "fd_step", "out",   "plot"};
    ScenarioConfig c;
    if (!j.is_object()) throw config_error("scenario config must be a JSON object");
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw config_error("unknown config key \"" + item.key() + "\"");
    try {
        if (j.contains("geometry")) {
            const auto& g = j.at("geometry");
            if (g.contains("radius")) c.geometry.radius = g.at("radius").get<double>();
            if (g.contains("arm_length")) c.geometry.arm_length = g.at("arm_length").get<double>();
            if (g.contains("viscosity")) c.geometry.viscosity = g.at("viscosity").get<double>();
        }
        if (j.contains("scenario")) c.scenario = j.at("scenario").get<std::string>();
        if (j.contains("magnitude")) c.magnitude = j.at("magnitude").get<double>();
        if (j.contains("dp")) {
            const auto& dp = j.at("dp");
            if (!dp.is_array() || dp.size() != 3)
                throw config_error("dp must be an array of three numbers");
            for (int i = 0; i < 3; ++i) c.dp[i] = dp[static_cast<std::size_t>(i)].get<double>();
        }
        if (j.contains("variant")) c.variant = j.at("variant").get<std::string>();
        if (j.contains("steps_per_loop")) c.steps_per_loop = j.at("steps_per_loop").get<int>();
        if (j.contains("loops")) c.loops = j.at("loops").get<int>();
        if (j.contains("coefficients")) c.coefficients = j.at("coefficients").get<std::string>();
        if (j.contains("fd_step")) c.fd_step = j.at("fd_step").get<double>();
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("plot")) c.plot = j.at("plot").get<bool>();
    } catch (const ordered_json::exception& e) {
        throw config_error(std::string("malformed scenario config: ") + e.what());
    }
    return c;
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw config_error(std::string("invalid JSON: ") + e.what());
    }
}

void validate(const ScenarioConfig& c) {
    c.geometry.validate();
    if (c.scenario != "pure-x" && c.scenario != "pure-y" && c.scenario != "pure-theta" &&
        c.scenario != "custom")
        throw config_error("scenario must be pure-x, pure-y, pure-theta or custom");
    if (c.variant != "leading-order" && c.variant != "exact")
        throw config_error("variant must be leading-order or exact");
    if (c.coefficients != "series" && c.coefficients != "extracted")
        throw config_error("coefficients must be series or extracted");
    if (c.steps_per_loop < 64) throw config_error("steps_per_loop must be at least 64");
    if (c.loops < 1) throw config_error("loops must be at least 1");
    if (c.scenario != "custom" && !(c.magnitude > 0.0))
        throw config_error("magnitude must be positive");
}

std::filesystem::path output_base(const ScenarioConfig& c) {
    if (!c.out.empty()) return c.out;
    const char* dir = std::getenv("SPR3_OUT_DIR");
    return std::filesystem::path(dir ? dir : ".") / c.scenario;
}

ordered_json coefficients_json(const AsymptoticCoefficients& c) {
    ordered_json j;
    j["phi"] = c.phi;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["lambda"] = c.lambda;
    j["gamma"] = c.gamma;
    j["kappa"] = c.kappa;
    j["h"] = c.h;
    j["g1"] = c.g1;
    j["g2"] = c.g2;
    return j;
}

ordered_json vec3_json(const Vec3& v) { return ordered_json::array({v[0], v[1], v[2]}); }

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open output file " + path.string());
    out << content;
    if (!out) throw config_error("failed writing output file " + path.string());
}

}  // namespace

ScenarioConfig scenario_config_from_json(const std::string& json_text) {
    return config_from_object(parse_json(json_text));
}

std::vector<ScenarioConfig> scenario_list_from_json(const std::string& json_text) {
    const ordered_json j = parse_json(json_text);
    const ordered_json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("scenarios") && j.at("scenarios").is_array())
        arr = &j.at("scenarios");
    else
        throw config_error("sweep config must be an array or {\"scenarios\": [...]}");
    std::vector<ScenarioConfig> configs;
    for (const auto& item : *arr) configs.push_back(config_from_object(item));
    if (configs.empty()) throw config_error("sweep config lists no scenarios");
    return configs;
}

Vec3 scenario_target(const ScenarioConfig& config) {
    if (config.scenario == "pure-x") return {config.magnitude, 0.0, 0.0};
    if (config.scenario == "pure-y") return {0.0, config.magnitude, 0.0};
    if (config.scenario == "pure-theta") return {0.0, 0.0, config.magnitude};
    return config.dp;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    validate(config);
    const SwimmerGeometry& geom = config.geometry;
    const Vec3 target = scenario_target(config);

    std::vector<std::string> warnings;
    if (geom.ratio() >= 0.2)
        warnings.push_back("radius/arm_length = " + std::to_string(geom.ratio()) +
                           " is outside the long-arm regime; series coefficients degrade");

    const AsymptoticCoefficients series = series_coefficients(geom);
    AsymptoticCoefficients active = series;
    double fd_error = 0.0;
    {
        const ControlExpansion exp = extract_expansion(geom, config.fd_step);
        fd_error = exp.fd_error;
        if (exp.fd_warning)
            warnings.push_back("finite-difference error estimate " +
                               std::to_string(exp.fd_error) + " exceeds 1e-6");
    }
    const AsymptoticCoefficients numeric = extracted_coefficients(geom, config.fd_step);
    if (config.coefficients == "extracted") active = numeric;

    const EllipticStroke stroke = optimal_stroke(active, target, geom);
    const Vec3 omega = omega_vector(active, target);
    const Vec3 formula_dp = realized_displacement(active, stroke);

    const Trajectory traj =
        config.variant == "exact"
            ? integrate_exact(geom, stroke, config.steps_per_loop, config.loops)
            : integrate_leading_order(active, stroke, config.steps_per_loop, config.loops);
    const Vec3 integrated_dp = net_displacement(traj);

    const DissipationForm diss = dissipation_from_coefficients(active);
    const LoopDissipation energy = loop_dissipation(diss, stroke);
    const double drag = geom.drag_coefficient();

    // CSV: fixed schema, 17 significant digits, physical power (x drag).
    std::string csv = "t,xi1,xi2,xi3,cx,cy,theta,power\n";
    for (const auto& s : traj.samples) {
        csv += fmt17(s.t);
        for (int i = 0; i < 3; ++i) csv += "," + fmt17(s.xi[i]);
        csv += "," + fmt17(s.c[0]) + "," + fmt17(s.c[1]) + "," + fmt17(s.theta) + "," +
               fmt17(drag * s.power) + "\n";
    }

    ordered_json summary;
    summary["geometry"] = {{"radius", geom.radius},
                           {"arm_length", geom.arm_length},
                           {"viscosity", geom.viscosity},
                           {"drag_coefficient", drag},
                           {"ratio", geom.ratio()}};
    summary["target"] = {{"scenario", config.scenario},
                         {"dp", vec3_json(target)},
                         {"magnitude", config.scenario == "custom" ? norm(target)
                                                                   : config.magnitude}};
    summary["omega_norm"] = norm(omega);
    summary["realized_displacement"] = {{"formula", vec3_json(formula_dp)},
                                        {"integrated", vec3_json(integrated_dp)},
                                        {"per_loop_target", vec3_json(target)}};
    summary["loop_energy"] = {{"quadrature", energy.quadrature},
                              {"closed_form", energy.closed_form},
                              {"physical", drag * energy.quadrature}};
    summary["coefficients"] = {{"numeric", coefficients_json(numeric)},
                               {"series", coefficients_json(series)}};

    ordered_json diagnostics;
    diagnostics["variant"] = config.variant;
    diagnostics["coefficient_source"] = config.coefficients;
    diagnostics["steps_per_loop"] = config.steps_per_loop;
    diagnostics["loops"] = config.loops;
    diagnostics["sigma"] = stroke.sigma;
    diagnostics["stroke"] = {{"u", vec3_json(stroke.u)}, {"v", vec3_json(stroke.v)}};
    {
        // distance of the stroke from the overlap bound, per arm
        ordered_json margins = ordered_json::array();
        for (int i = 0; i < 3; ++i)
            margins.push_back(geom.arm_length - std::hypot(stroke.u[i], stroke.v[i]) -
                              geom.min_arm_length());
        diagnostics["admissibility_margin"] = margins;
    }
    {
        const auto& tau = tau_basis();
        ordered_json planes;
        for (int i = 0; i < 3; ++i) {
            const std::string key = "tau" + std::to_string(i + 1);
            planes[key] = ordered_json::array({dot(stroke.u, tau[static_cast<std::size_t>(i)]),
                                               dot(stroke.v, tau[static_cast<std::size_t>(i)])});
        }
        diagnostics["stroke_plane_inner_products"] = planes;
    }
    diagnostics["fd_error_estimate"] = fd_error;
    diagnostics["warnings"] = warnings;
    summary["diagnostics"] = diagnostics;

    ScenarioResult result;
    result.summary_json = summary.dump(2) + "\n";
    result.csv = csv;

    const std::filesystem::path base = output_base(config);
    result.csv_path = base;
    result.csv_path += ".csv";
    result.json_path = base;
    result.json_path += ".json";
    write_file(result.csv_path, result.csv);
    write_file(result.json_path, result.summary_json);
    if (config.plot) {
        result.svg = render_scenario_svg(geom, traj);
        result.svg_path = base;
        result.svg_path += ".svg";
        write_file(result.svg_path, result.svg);
    }
    return result;
}

std::vector<ScenarioResult> run_scenarios(const std::vector<ScenarioConfig>& configs,
                                          ExecutionPolicy policy) {
    if (configs.empty()) throw config_error("no scenarios to run");
    // distinct output files keep the fan-out race free
    std::set<std::string> bases;
    for (const auto& c : configs) {
        validate(c);
        if (!bases.insert(output_base(c).string()).second)
            throw config_error("scenarios share the output base " + output_base(c).string());
    }
    std::vector<ScenarioResult> results(configs.size());
    std::exception_ptr failure;
    const bool par = policy == ExecutionPolicy::parallel;
    const int n = static_cast<int>(configs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (int i = 0; i < n; ++i) {
        try {
            results[static_cast<std::size_t>(i)] =
                run_scenario(configs[static_cast<std::size_t>(i)]);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
#ifndef _OPENMP
    (void)par;
#endif
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace spr3
