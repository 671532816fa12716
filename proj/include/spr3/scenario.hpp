#ifndef SPR3_SCENARIO_HPP
#define SPR3_SCENARIO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "spr3/kinematics.hpp"
#include "spr3/strokes.hpp"
#include "spr3/sweep.hpp"

namespace spr3 {

/// One simulation run: geometry, displacement target, integration variant and
/// output destinations. Named scenarios map to a displacement of `magnitude`
/// along one axis; "custom" takes `dp` directly.
struct ScenarioConfig {
    SwimmerGeometry geometry{0.15, 1.0, 1.0};
    std::string scenario = "pure-x";  // pure-x | pure-y | pure-theta | custom
    double magnitude = 0.01;
    Vec3 dp{};
    std::string variant = "leading-order";  // leading-order | exact
    int steps_per_loop = 256;
    int loops = 1;
    std::string coefficients = "series";  // series | extracted
    double fd_step = 0.0;
    std::string out;  // output base path; default <SPR3_OUT_DIR|.>/<scenario>
    bool plot = false;
};

// Parses a config object; unknown keys are rejected. Throws config_error.
ScenarioConfig scenario_config_from_json(const std::string& json_text);

// Serializes a list config ({"scenarios": [...]}, or a plain array).
std::vector<ScenarioConfig> scenario_list_from_json(const std::string& json_text);

Vec3 scenario_target(const ScenarioConfig& config);

struct ScenarioResult {
    std::string summary_json;  // pretty-printed summary (also written to disk)
    std::string csv;
    std::string svg;  // empty unless plot was requested
    std::filesystem::path csv_path;
    std::filesystem::path json_path;
    std::filesystem::path svg_path;  // empty unless plot was requested
};

// Runs the full pipeline (coefficients, optimal stroke, integration, output
// files). Identical configs produce byte-identical CSV and JSON.
ScenarioResult run_scenario(const ScenarioConfig& config);

// Fans independent scenarios out across threads (each writes its own files).
std::vector<ScenarioResult> run_scenarios(const std::vector<ScenarioConfig>& configs,
                                          ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace spr3

#endif
