// Command-line front end: scenario runs, coefficient reports and scenario
// sweeps. Exit codes: 0 success, 2 config error, 3 admissibility error,
// 4 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spr3/errors.hpp"
#include "spr3/report.hpp"
#include "spr3/scenario.hpp"
#include "spr3/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spr3::config_error("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunFlags {
    std::string config_path;
    double radius = -1.0, arm_length = -1.0, viscosity = -1.0;
    std::string scenario, variant, coeffs, out;
    std::vector<double> dp;
    double magnitude = -1.0;
    int steps = -1, loops = -1;
    double fd_step = -1.0;
    bool plot = false;
};

spr3::ScenarioConfig assemble_config(const RunFlags& f) {
    spr3::ScenarioConfig c;
    if (!f.config_path.empty()) c = spr3::scenario_config_from_json(read_file(f.config_path));
    if (f.radius > 0.0) c.geometry.radius = f.radius;
    if (f.arm_length > 0.0) c.geometry.arm_length = f.arm_length;
    if (f.viscosity > 0.0) c.geometry.viscosity = f.viscosity;
    if (!f.scenario.empty()) c.scenario = f.scenario;
    if (f.magnitude > 0.0) c.magnitude = f.magnitude;
    if (!f.dp.empty()) {
        if (f.dp.size() != 3) throw spr3::config_error("--dp needs exactly three values");
        c.scenario = "custom";
        for (int i = 0; i < 3; ++i) c.dp[i] = f.dp[static_cast<std::size_t>(i)];
    }
    if (!f.variant.empty()) c.variant = f.variant;
    if (!f.coeffs.empty()) c.coefficients = f.coeffs;
    if (f.steps > 0) c.steps_per_loop = f.steps;
    if (f.loops > 0) c.loops = f.loops;
    if (f.fd_step > 0.0) c.fd_step = f.fd_step;
    if (!f.out.empty()) c.out = f.out;
    if (f.plot) c.plot = true;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sPr3 three-sphere low-Reynolds-number swimmer"};
    app.require_subcommand(1);

    RunFlags rf;
    CLI::App* run = app.add_subcommand("run", "run one scenario and write CSV/JSON (and SVG)");
    run->add_option("--config", rf.config_path, "JSON config file; flags override its values");
    run->add_option("--radius", rf.radius, "ball radius a");
    run->add_option("--arm-length", rf.arm_length, "reference arm length xi0");
    run->add_option("--viscosity", rf.viscosity, "fluid viscosity mu");
    run->add_option("--scenario", rf.scenario, "pure-x | pure-y | pure-theta | custom");
    run->add_option("--dp", rf.dp, "custom displacement target: dx dy dtheta")->expected(3);
    run->add_option("--magnitude", rf.magnitude, "displacement magnitude d for named scenarios");
    run->add_option("--steps", rf.steps, "integrator steps per loop (>= 64)");
    run->add_option("--loops", rf.loops, "number of stroke loops");
    run->add_option("--variant", rf.variant, "leading-order | exact");
    run->add_option("--coeffs", rf.coeffs, "coefficient source: series | extracted");
    run->add_option("--fd-step", rf.fd_step, "finite-difference step for extraction");
    run->add_option("--out", rf.out, "output base path (default $SPR3_OUT_DIR/<scenario>)");
    run->add_flag("--plot", rf.plot, "also write a static SVG figure");

    std::vector<double> ratios;
    double cr_arm = 1.0, cr_visc = 1.0, cr_fd = -1.0;
    std::string cr_out;
    bool cr_serial = false;
    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "extracted-vs-series coefficient table over a ratio sweep");
    coeffs->add_option("--ratios", ratios, "radius/arm-length ratios to sweep")
        ->required()
        ->expected(-1);
    coeffs->add_option("--arm-length", cr_arm, "reference arm length xi0");
    coeffs->add_option("--viscosity", cr_visc, "fluid viscosity mu");
    coeffs->add_option("--fd-step", cr_fd, "finite-difference step for extraction");
    coeffs->add_option("--out", cr_out, "output JSON file (default stdout)");
    coeffs->add_flag("--serial", cr_serial, "use the serial reference path");

    std::string sweep_config;
    bool sweep_serial = false;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "fan independent scenarios out concurrently, one output set each");
    sweep->add_option("--config", sweep_config, "JSON file: array or {\"scenarios\": [...]}")
        ->required();
    sweep->add_flag("--serial", sweep_serial, "use the serial reference path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : spr3::config_error::exit_code;
    }

    try {
        if (run->parsed()) {
            const spr3::ScenarioConfig config = assemble_config(rf);
            const spr3::ScenarioResult result = spr3::run_scenario(config);
            std::printf("wrote %s\n", result.csv_path.string().c_str());
            std::printf("wrote %s\n", result.json_path.string().c_str());
            if (!result.svg_path.empty())
                std::printf("wrote %s\n", result.svg_path.string().c_str());
        } else if (coeffs->parsed()) {
            const spr3::SwimmerGeometry base{0.01 * cr_arm, cr_arm, cr_visc};
            const std::string report = spr3::coefficients_report(
                base, ratios,
                cr_serial ? spr3::ExecutionPolicy::serial : spr3::ExecutionPolicy::parallel,
                cr_fd > 0.0 ? cr_fd : 0.0);
            if (cr_out.empty()) {
                std::fputs(report.c_str(), stdout);
            } else {
                std::ofstream out(cr_out, std::ios::binary);
                if (!out) throw spr3::config_error("cannot open output file " + cr_out);
                out << report;
                std::printf("wrote %s\n", cr_out.c_str());
            }
        } else if (sweep->parsed()) {
            const auto configs = spr3::scenario_list_from_json(read_file(sweep_config));
            const auto results = spr3::run_scenarios(
                configs,
                sweep_serial ? spr3::ExecutionPolicy::serial : spr3::ExecutionPolicy::parallel);
            for (const auto& r : results)
                std::printf("wrote %s and %s\n", r.csv_path.string().c_str(),
                            r.json_path.string().c_str());
        }
    } catch (const spr3::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return spr3::config_error::exit_code;
    } catch (const spr3::admissibility_error& e) {
        std::fprintf(stderr, "admissibility error: %s\n", e.what());
        return spr3::admissibility_error::exit_code;
    } catch (const spr3::numerical_error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return spr3::numerical_error::exit_code;
    }
    return 0;
}
