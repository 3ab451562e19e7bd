#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orthospeed/csv_io.hpp"
#include "orthospeed/device.hpp"
#include "orthospeed/run_config.hpp"
#include "orthospeed/svg.hpp"
#include "orthospeed/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace orthospeed;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

std::string joined(const std::string& out_dir, const std::string& rel) {
    return (fs::path(out_dir) / rel).string();
}

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string engine;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON run configuration")
        ->required();
    cmd->add_option("--set", args.sets,
                    "dotted-path override, e.g. --set model.g=0.25");
    cmd->add_option("--engine", args.engine,
                    "closed_form | oracle | both (overrides the config)");
    cmd->add_option("--out", args.out_dir, "output directory");
}

RunConfig load_common(const CommonArgs& args, bool expect_sweep) {
    RunConfig cfg = load_run_config(args.config_path, expect_sweep, args.sets);
    if (!args.engine.empty()) cfg.engine = engine_from_string(args.engine);
    fs::create_directories(args.out_dir);
    return cfg;
}

int cmd_simulate(const CommonArgs& args) {
    const RunConfig cfg = load_common(args, false);
    const CellResult cell = run_cell(cfg.model, cfg.field, cfg.qubit(),
                                     cfg.window, cfg.detector, cfg.engine);
    const nlohmann::json echo = config_echo(cfg);
    write_file(joined(args.out_dir, cfg.output.trace_path),
               render_trace_csv(echo, cell.trace, cfg.engine == Engine::both));
    write_file(joined(args.out_dir, cfg.output.events_path),
               render_events_csv(echo, cell.events));
    if (cfg.output.plot_path)
        emit_svg(cell.trace, cell.events,
                 joined(args.out_dir, *cfg.output.plot_path));

    const SpeedReport& rep = cell.report;
    std::printf("events %d  speed %s", rep.total_events,
                fmt17(rep.speed).c_str());
    if (rep.first_orthogonality_time)
        std::printf("  first_orthogonality %s",
                    fmt17(*rep.first_orthogonality_time).c_str());
    std::printf("\n");
    return kExitOk;
}

int cmd_sweep(const CommonArgs& args) {
    const RunConfig cfg = load_common(args, true);
    const SweepConfig sc = cfg.to_sweep_config();
    const std::vector<SweepRow> rows = run_sweep(sc);
    const nlohmann::json echo = config_echo(cfg);
    write_file(joined(args.out_dir, cfg.output.trace_path),
               render_sweep_csv(echo, axis_to_string(sc.axis), rows));
    for (const SweepRow& r : rows)
        std::printf("%s=%s  events %d  speed %s\n",
                    axis_to_string(sc.axis).c_str(), fmt17(r.value).c_str(),
                    r.report.total_events, fmt17(r.report.speed).c_str());
    return kExitOk;
}

int cmd_verify(const std::string& inject, double dt) {
    VerifyOptions opt;
    opt.grid_dt = dt;
    if (inject == "rabi-squared") {
        opt.inject_rabi_square = true;
    } else if (!inject.empty()) {
        throw domain_error("unknown injection mode '" + inject +
                           "' (supported: rabi-squared)");
    }
    const std::vector<CheckResult> results = run_verify(opt);
    for (const CheckResult& r : results) {
        const char* status = r.hard ? (r.pass ? "PASS" : "FAIL") : "NOTE";
        std::printf("%s  %-52s %s\n", status, r.name.c_str(), r.detail.c_str());
    }
    if (!verify_ok(results)) {
        std::fprintf(stderr, "verification failed\n");
        return kExitNumeric;
    }
    return kExitOk;
}

int cmd_device(const DeviceParams& dev) {
    const double ec = charging_energy(dev);
    const double g9 = coupling_g(dev);
    const double g8 = coupling_g_alt(dev);
    const double delta = detuning_delta(dev);
    std::printf("E_c            %s J\n", fmt17(ec).c_str());
    std::printf("g (capacitance form)  %s rad/s\n", fmt17(g9).c_str());
    std::printf("g (E_c form)          %s rad/s\n", fmt17(g8).c_str());
    std::printf("g form ratio (E_c/capacitance)  %s\n", fmt17(g8 / g9).c_str());
    std::printf("delta          %s rad/s\n", fmt17(delta).c_str());
    std::printf("g/omega        %s\n", fmt17(g9 / dev.omega).c_str());
    std::printf("delta/omega    %s\n", fmt17(delta / dev.omega).c_str());
    if (auto warn = regime_warning(dev))
        std::printf("warning: %s\n", warn->c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"charge-qubit/cavity evolution and orthogonality-speed analysis"};
    app.require_subcommand(1);

    CommonArgs sim_args;
    CLI::App* sim = app.add_subcommand(
        "simulate", "evolve one configuration; write trace and events CSV");
    add_common(sim, sim_args);

    CommonArgs sweep_args;
    CLI::App* swp = app.add_subcommand(
        "sweep", "run a parameter sweep; write one summary row per value");
    add_common(swp, sweep_args);

    std::string inject;
    double verify_dt = 0.005;
    CLI::App* ver = app.add_subcommand(
        "verify", "run the built-in verification battery");
    ver->add_option("--inject", inject,
                    "fault injection mode (rabi-squared: square the manifold "
                    "frequency to demonstrate the unitarity check)");
    ver->add_option("--dt", verify_dt, "detector scan grid spacing");

    DeviceParams dev;
    CLI::App* dvc = app.add_subcommand(
        "device", "map circuit parameters to model parameters");
    dvc->add_option("--cg", dev.C_g, "gate capacitance (F)")->required();
    dvc->add_option("--cj", dev.C_J, "junction capacitance (F)")->required();
    dvc->add_option("--cf", dev.C_F, "field-mode capacitance (F)")->required();
    dvc->add_option("--ej", dev.E_J, "Josephson energy (J)")->required();
    dvc->add_option("--omega", dev.omega, "field angular frequency (rad/s)")
        ->required();
    dvc->add_option("--electron-charge", dev.e, "elementary charge (C)");
    dvc->add_option("--hbar", dev.hbar, "reduced Planck constant (J s)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_args);
        if (swp->parsed()) return cmd_sweep(sweep_args);
        if (ver->parsed()) return cmd_verify(inject, verify_dt);
        if (dvc->parsed()) return cmd_device(dev);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
