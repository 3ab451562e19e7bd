#include "orthospeed/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>

namespace orthospeed {

using nlohmann::json;

namespace {

// Every consumed key is crossed off; leftovers are configuration mistakes.
class KeyChecker {
  public:
    KeyChecker(const json& obj, std::string where)
        : obj_(obj), where_(std::move(where)) {
        if (!obj.is_object())
            throw domain_error("config section '" + where_ +
                               "' must be a JSON object");
    }

    const json* get(const char* key) {
        seen_.insert(key);
        auto it = obj_.find(key);
        return it == obj_.end() ? nullptr : &*it;
    }

    const json& require(const char* key) {
        const json* v = get(key);
        if (!v)
            throw domain_error("config key '" + where_ + "." + key +
                               "' is required");
        return *v;
    }

    ~KeyChecker() noexcept(false) {
        if (std::uncaught_exceptions()) return;
        for (auto it = obj_.begin(); it != obj_.end(); ++it)
            if (!seen_.count(it.key()))
                throw domain_error("unknown config key '" + where_ + "." +
                                   it.key() + "'");
    }

  private:
    const json& obj_;
    std::string where_;
    std::set<std::string> seen_;
};

double as_number(const json& v, const std::string& what) {
    if (!v.is_number())
        throw domain_error("config value '" + what + "' must be a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& what) {
    if (!v.is_number_integer())
        throw domain_error("config value '" + what + "' must be an integer");
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& what) {
    if (!v.is_string())
        throw domain_error("config value '" + what + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

Engine engine_from_string(const std::string& s) {
    if (s == "closed_form") return Engine::closed_form;
    if (s == "oracle") return Engine::oracle;
    if (s == "both") return Engine::both;
    throw domain_error("unknown engine '" + s +
                       "' (expected closed_form, oracle or both)");
}

std::string engine_to_string(Engine e) {
    switch (e) {
        case Engine::closed_form: return "closed_form";
        case Engine::oracle: return "oracle";
        case Engine::both: return "both";
    }
    return "?";
}

RunConfig parse_run_config(const json& doc, bool expect_sweep) {
    RunConfig cfg;
    KeyChecker root(doc, "config");

    {
        KeyChecker model(root.require("model"), "model");
        cfg.model.g = as_number(model.require("g"), "model.g");
        cfg.model.delta = as_number(model.require("delta"), "model.delta");
        cfg.model.validate();
    }

    {
        KeyChecker field(root.require("field"), "field");
        const std::string kind = as_string(field.require("kind"), "field.kind");
        if (kind == "fock") {
            cfg.field.kind = FieldKind::fock;
            cfg.field.n = as_int(field.require("n"), "field.n");
        } else if (kind == "binomial") {
            cfg.field.kind = FieldKind::binomial;
            if (const json* mu = field.get("mu"))
                cfg.field.mu = as_int(*mu, "field.mu");
            cfg.field.eta = as_number(field.require("eta"), "field.eta");
        } else if (kind == "coherent_approx") {
            cfg.field.kind = FieldKind::coherent_approx;
            cfg.field.nbar = as_number(field.require("nbar"), "field.nbar");
            if (const json* tt = field.get("tail_tol"))
                cfg.field.tail_tol = as_number(*tt, "field.tail_tol");
        } else {
            throw domain_error("unknown field kind '" + kind +
                               "' (expected fock, binomial or coherent_approx)");
        }
        cfg.field.materialize();  // constructor-level validation
    }

    cfg.theta = std::atan(1.0);  // pi/4: equal superposition
    cfg.phi = 0.0;
    if (const json* qubit_obj = root.get("qubit")) {
        KeyChecker qubit(*qubit_obj, "qubit");
        if (const json* th = qubit.get("theta"))
            cfg.theta = as_number(*th, "qubit.theta");
        if (const json* ph = qubit.get("phi"))
            cfg.phi = as_number(*ph, "qubit.phi");
        if (!std::isfinite(cfg.theta) || !std::isfinite(cfg.phi))
            throw domain_error("qubit angles must be finite");
    }

    if (const json* time_obj = root.get("time")) {
        KeyChecker time(*time_obj, "time");
        if (const json* v = time.get("t0")) cfg.window.t0 = as_number(*v, "time.t0");
        if (const json* v = time.get("t1")) cfg.window.t1 = as_number(*v, "time.t1");
        if (const json* v = time.get("dt")) cfg.window.dt = as_number(*v, "time.dt");
    }
    cfg.window.validate();

    if (const json* det_obj = root.get("detector")) {
        KeyChecker det(*det_obj, "detector");
        if (const json* v = det.get("epsilon_orth"))
            cfg.detector.epsilon_orth = as_number(*v, "detector.epsilon_orth");
        if (const json* v = det.get("refine_tol"))
            cfg.detector.refine_tol = as_number(*v, "detector.refine_tol");
    }
    if (!(cfg.detector.epsilon_orth > 0.0 && cfg.detector.epsilon_orth <= 0.1))
        throw domain_error("detector.epsilon_orth must lie in (0, 0.1]");
    if (!(cfg.detector.refine_tol > 0.0))
        throw domain_error("detector.refine_tol must be > 0");

    // Sweeps emit a single summary table, so the primary path gets a
    // distinct default unless the config names one explicitly.
    if (expect_sweep) cfg.output.trace_path = "sweep.csv";
    if (const json* out_obj = root.get("output")) {
        KeyChecker out(*out_obj, "output");
        if (const json* v = out.get("trace_path"))
            cfg.output.trace_path = as_string(*v, "output.trace_path");
        if (const json* v = out.get("events_path"))
            cfg.output.events_path = as_string(*v, "output.events_path");
        if (const json* v = out.get("plot_path"))
            cfg.output.plot_path = as_string(*v, "output.plot_path");
    }

    if (const json* eng = root.get("engine"))
        cfg.engine = engine_from_string(as_string(*eng, "engine"));

    const json* sweep_obj = root.get("sweep");
    if (expect_sweep && !sweep_obj)
        throw domain_error("sweep command requires a 'sweep' config section");
    if (!expect_sweep && sweep_obj)
        throw domain_error("'sweep' section is only valid for the sweep command");
    if (sweep_obj) {
        KeyChecker sweep(*sweep_obj, "sweep");
        SweepSpec spec;
        spec.axis =
            axis_from_string(as_string(sweep.require("axis"), "sweep.axis"));
        const json& vals = sweep.require("values");
        if (!vals.is_array() || vals.empty())
            throw domain_error("sweep.values must be a nonempty array");
        for (const json& v : vals)
            spec.values.push_back(as_number(v, "sweep.values[]"));

        std::vector<double> unique;
        for (double v : spec.values)
            if (std::find(unique.begin(), unique.end(), v) == unique.end())
                unique.push_back(v);
        if (unique.size() != spec.values.size()) {
            std::cerr << "warning: duplicate sweep values removed\n";
            spec.values = std::move(unique);
        }
        if (!std::is_sorted(spec.values.begin(), spec.values.end()))
            throw domain_error("sweep.values must be sorted ascending");
        cfg.sweep = std::move(spec);
    }

    return cfg;
}

SweepConfig RunConfig::to_sweep_config() const {
    if (!sweep) throw domain_error("config has no sweep section");
    SweepConfig sc;
    sc.base = model;
    sc.field = field;
    sc.qubit = qubit();
    sc.axis = sweep->axis;
    sc.values = sweep->values;
    sc.window = window;
    sc.detector = detector;
    sc.engine = engine;
    sc.validate();
    return sc;
}

void apply_override(json& doc, const std::string& assignment) {
    const size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw domain_error("--set expects key.path=value, got '" + assignment +
                           "'");
    std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    std::string pointer;
    size_t start = 0;
    while (true) {
        const size_t dot = path.find('.', start);
        const std::string part = path.substr(
            start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty())
            throw domain_error("--set key path has an empty segment: '" + path +
                               "'");
        pointer += "/" + part;
        if (dot == std::string::npos) break;
        start = dot + 1;
    }

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw;  // bare strings need no quotes
    }
    doc[json::json_pointer(pointer)] = value;
}

RunConfig load_run_config(const std::string& path, bool expect_sweep,
                          const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw domain_error("config file '" + path + "' is not valid JSON: " +
                           e.what());
    }
    for (const std::string& ov : overrides) apply_override(doc, ov);
    return parse_run_config(doc, expect_sweep);
}

json config_echo(const RunConfig& cfg) {
    json j;
    j["model"]["g"] = cfg.model.g;
    j["model"]["delta"] = cfg.model.delta;
    switch (cfg.field.kind) {
        case FieldKind::fock:
            j["field"]["kind"] = "fock";
            j["field"]["n"] = cfg.field.n;
            break;
        case FieldKind::binomial:
            j["field"]["kind"] = "binomial";
            j["field"]["mu"] = cfg.field.mu;
            j["field"]["eta"] = cfg.field.eta;
            break;
        case FieldKind::coherent_approx:
            j["field"]["kind"] = "coherent_approx";
            j["field"]["nbar"] = cfg.field.nbar;
            j["field"]["tail_tol"] = cfg.field.tail_tol;
            break;
    }
    j["qubit"]["theta"] = cfg.theta;
    j["qubit"]["phi"] = cfg.phi;
    j["time"]["t0"] = cfg.window.t0;
    j["time"]["t1"] = cfg.window.t1;
    j["time"]["dt"] = cfg.window.dt;
    j["detector"]["epsilon_orth"] = cfg.detector.epsilon_orth;
    j["detector"]["refine_tol"] = cfg.detector.refine_tol;
    j["output"]["trace_path"] = cfg.output.trace_path;
    j["output"]["events_path"] = cfg.output.events_path;
    if (cfg.output.plot_path) j["output"]["plot_path"] = *cfg.output.plot_path;
    j["engine"] = engine_to_string(cfg.engine);
    if (cfg.sweep) {
        j["sweep"]["axis"] = axis_to_string(cfg.sweep->axis);
        j["sweep"]["values"] = cfg.sweep->values;
    }
    return j;
}

}  // namespace orthospeed
