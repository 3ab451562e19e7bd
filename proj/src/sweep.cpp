#include "orthospeed/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "orthospeed/oracle.hpp"

namespace orthospeed {

FieldState FieldSpec::materialize() const {
    switch (kind) {
        case FieldKind::fock:
            return make_fock(n);
        case FieldKind::binomial:
            return make_binomial(mu, eta);
        case FieldKind::coherent_approx:
            return make_coherent_approx(nbar, tail_tol);
    }
    throw domain_error("unknown field kind");
}

void Window::validate() const {
    if (!std::isfinite(t0) || !std::isfinite(t1) || !std::isfinite(dt))
        throw domain_error("time window values must be finite");
    if (!(t1 > t0)) throw domain_error("time window requires t1 > t0");
    if (!(dt > 0.0)) throw domain_error("time step must be > 0");
    if (dt > t1 - t0) throw domain_error("time step exceeds the window");
}

size_t Window::npts() const {
    return static_cast<size_t>(std::floor((t1 - t0) / dt)) + 1;
}

namespace {

double max_elem_dev(const QubitDensity& a, const QubitDensity& b) {
    return std::max({std::abs(a.rho11 - b.rho11), std::abs(a.rho22 - b.rho22),
                     std::abs(a.rho12 - b.rho12)});
}

}  // namespace

CellResult run_cell(const ModelParams& params, const FieldSpec& spec,
                    const QubitVec& qubit, const Window& window,
                    const DetectorSettings& det, Engine engine) {
    params.validate();
    window.validate();
    const FieldState field = spec.materialize();

    auto eval_closed = [&](double t) -> OverlapSample {
        const QubitDensity rho =
            reduced_qubit(evolve_joint(params, field, qubit, t));
        const SpectralPair pair = eig2(rho);
        return {t, overlaps(pair), pair.degenerate};
    };

    std::optional<OracleEvolver> evo;
    if (engine != Engine::closed_form) evo.emplace(params, field, qubit);
    auto eval_oracle = [&](double t) -> OverlapSample {
        const SpectralPair pair = eig2(evo->rho(t));
        return {t, overlaps(pair), pair.degenerate};
    };

    CellResult out;
    const size_t npts = window.npts();
    out.trace.reserve(npts);
    std::vector<OverlapSample> samples;
    samples.reserve(npts);

    for (size_t k = 0; k < npts; ++k) {
        const double t = window.t0 + window.dt * static_cast<double>(k);
        TracePoint tp;
        tp.t = t;
        tp.rho = engine == Engine::oracle
                     ? evo->rho(t)
                     : reduced_qubit(evolve_joint(params, field, qubit, t));
        const SpectralPair pair = eig2(tp.rho);
        tp.lambda1 = pair.lambda1;
        tp.lambda2 = pair.lambda2;
        tp.sp = overlaps(pair);
        tp.degenerate = pair.degenerate;
        if (engine == Engine::both) tp.rho_dev = max_elem_dev(tp.rho, evo->rho(t));
        samples.push_back({t, tp.sp, tp.degenerate});
        out.trace.push_back(std::move(tp));
    }

    const SampleEvaluator evaluator =
        engine == Engine::oracle ? SampleEvaluator(eval_oracle)
                                 : SampleEvaluator(eval_closed);
    out.events =
        scan_events(samples, det.epsilon_orth, det.refine_tol, evaluator);
    out.report = speed_report(out.events, window.t0, window.t1);
    return out;
}

Axis axis_from_string(const std::string& s) {
    if (s == "g") return Axis::g;
    if (s == "delta") return Axis::delta;
    if (s == "n") return Axis::n;
    if (s == "mu") return Axis::mu;
    if (s == "eta") return Axis::eta;
    throw domain_error("unknown sweep axis '" + s +
                       "' (expected g, delta, n, mu or eta)");
}

std::string axis_to_string(Axis a) {
    switch (a) {
        case Axis::g: return "g";
        case Axis::delta: return "delta";
        case Axis::n: return "n";
        case Axis::mu: return "mu";
        case Axis::eta: return "eta";
    }
    return "?";
}

namespace {

int as_integer(double v, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9 || r < 0.0)
        throw domain_error(std::string(what) +
                           " axis values must be non-negative integers");
    return static_cast<int>(r);
}

// One sweep cell with the axis value substituted in.
CellResult run_cell_at(const SweepConfig& cfg, double value) {
    ModelParams params = cfg.base;
    FieldSpec field = cfg.field;
    switch (cfg.axis) {
        case Axis::g: params.g = value; break;
        case Axis::delta: params.delta = value; break;
        case Axis::n: field.n = as_integer(value, "n"); break;
        case Axis::mu: field.mu = as_integer(value, "mu"); break;
        case Axis::eta: field.eta = value; break;
    }
    return run_cell(params, field, cfg.qubit, cfg.window, cfg.detector,
                    cfg.engine);
}

}  // namespace

void SweepConfig::validate() const {
    base.validate();
    window.validate();
    if (values.empty()) throw domain_error("sweep values must be nonempty");
    if (!std::is_sorted(values.begin(), values.end()))
        throw domain_error("sweep values must be sorted ascending");
    if (axis == Axis::n && field.kind != FieldKind::fock)
        throw domain_error("axis n requires a fock field");
    if ((axis == Axis::mu || axis == Axis::eta) &&
        field.kind != FieldKind::binomial)
        throw domain_error("axis mu/eta requires a binomial field");
}

unsigned resolve_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("ORTHOSPEED_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw domain_error("ORTHOSPEED_THREADS must be a positive integer");
        n = std::min<long>(v, 1024);
    }
    return n;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg,
                                unsigned workers_override) {
    cfg.validate();
    const size_t ncells = cfg.values.size();
    std::vector<SweepRow> rows(ncells);
    std::vector<std::exception_ptr> errors(ncells);

    const unsigned nworkers = std::min<size_t>(
        workers_override > 0 ? workers_override : resolve_thread_count(),
        ncells);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= ncells) return;
            try {
                rows[idx].value = cfg.values[idx];
                rows[idx].report = run_cell_at(cfg, cfg.values[idx]).report;
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };

    if (nworkers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    for (size_t idx = 0; idx < ncells; ++idx) {
        if (!errors[idx]) continue;
        const std::string tag = axis_to_string(cfg.axis) + " = " +
                                std::to_string(cfg.values[idx]);
        try {
            std::rethrow_exception(errors[idx]);
        } catch (const domain_error& e) {
            throw domain_error("sweep cell (" + tag + "): " + e.what());
        } catch (const std::exception& e) {
            throw numeric_error("sweep cell (" + tag + "): " + e.what());
        }
    }
    return rows;
}

}  // namespace orthospeed
