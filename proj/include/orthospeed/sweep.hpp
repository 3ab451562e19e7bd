#pragma once

#include <string>
#include <vector>

#include "orthospeed/field_state.hpp"
#include "orthospeed/model.hpp"
#include "orthospeed/orthodetect.hpp"
#include "orthospeed/propagator.hpp"
#include "orthospeed/spectral.hpp"

namespace orthospeed {

enum class Engine { closed_form, oracle, both };

// Field construction recipe; materialized per sweep cell because the axis
// may change the field itself (n, mu, eta).
struct FieldSpec {
    FieldKind kind = FieldKind::fock;
    int n = 0;
    int mu = 10;
    double eta = 0.0;
    double nbar = 0.0;
    double tail_tol = 1e-12;

    FieldState materialize() const;
};

struct Window {
    double t0 = 0.0;
    double t1 = 40.0;
    double dt = 0.005;

    void validate() const;
    size_t npts() const;  // floor((t1-t0)/dt) + 1
};

struct TracePoint {
    double t = 0.0;
    QubitDensity rho;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Mat2 sp{};
    bool degenerate = false;
    double rho_dev = 0.0;  // engine both: max elementwise |closed - oracle|
};

struct CellResult {
    std::vector<TracePoint> trace;
    std::vector<OrthogonalityEvent> events;
    SpeedReport report;
};

CellResult run_cell(const ModelParams& params, const FieldSpec& field,
                    const QubitVec& qubit, const Window& window,
                    const DetectorSettings& det,
                    Engine engine = Engine::closed_form);

enum class Axis { g, delta, n, mu, eta };

Axis axis_from_string(const std::string& s);
std::string axis_to_string(Axis a);

struct SweepConfig {
    ModelParams base;
    FieldSpec field;
    QubitVec qubit = default_qubit();
    Axis axis = Axis::g;
    std::vector<double> values;  // nonempty, ascending
    Window window;
    DetectorSettings detector;
    Engine engine = Engine::closed_form;

    void validate() const;
};

struct SweepRow {
    double value = 0.0;
    SpeedReport report;
};

// Cells run on a worker pool (capped by ORTHOSPEED_THREADS); rows come back
// in input order and are bit-identical for any worker count. A cell failure
// is rethrown tagged with its axis value. workers_override = 0 means use the
// environment policy.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg,
                                unsigned workers_override = 0);

// Worker-count policy shared by sweep and callers that report it.
unsigned resolve_thread_count();

}  // namespace orthospeed
