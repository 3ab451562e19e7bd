#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthospeed/sweep.hpp"

namespace orthospeed {

struct OutputPaths {
    std::string trace_path = "trace.csv";
    std::string events_path = "events.csv";
    std::optional<std::string> plot_path;
};

struct SweepSpec {
    Axis axis = Axis::g;
    std::vector<double> values;
};

// Fully materialized run configuration; every field carries its effective
// value so the echo round-trips bit-exactly.
struct RunConfig {
    ModelParams model;
    FieldSpec field;
    double theta = 0.0;  // qubit init (cos theta, e^{i phi} sin theta)
    double phi = 0.0;
    Window window;
    DetectorSettings detector;
    OutputPaths output;
    Engine engine = Engine::closed_form;
    std::optional<SweepSpec> sweep;

    QubitVec qubit() const { return qubit_state(theta, phi); }
    SweepConfig to_sweep_config() const;
};

Engine engine_from_string(const std::string& s);
std::string engine_to_string(Engine e);

// Parse + validate a config document. Unknown keys anywhere are rejected.
// Sweep sections are required/forbidden according to expect_sweep; duplicate
// sweep values are removed with a warning on stderr.
RunConfig parse_run_config(const nlohmann::json& doc, bool expect_sweep);

RunConfig load_run_config(const std::string& path, bool expect_sweep,
                          const std::vector<std::string>& overrides);

// "a.b.c=value"; the value is parsed as JSON when possible, else as a string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

// Canonical JSON echo (alphabetical keys, effective values) for CSV headers.
nlohmann::json config_echo(const RunConfig& cfg);

}  // namespace orthospeed
