// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Run a single criterion with --criterion N; --dump-counts prints
// the measured sweep counts in the golden-file format.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthospeed/oracle.hpp"
#include "orthospeed/sweep.hpp"
#include "orthospeed/verify.hpp"

using namespace orthospeed;
using nlohmann::json;

namespace {

constexpr double pi = 3.14159265358979323846;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double rho_dist(const QubitDensity& a, const QubitDensity& b) {
    return std::max({std::abs(a.rho11 - b.rho11), std::abs(a.rho22 - b.rho22),
                     std::abs(a.rho12 - b.rho12)});
}

std::string fmtg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

json load_golden() {
    const std::string path = std::string(ORTHOSPEED_GOLDEN_DIR) + "/counts.json";
    std::ifstream in(path);
    if (!in) throw domain_error("golden file missing: " + path);
    json doc;
    in >> doc;
    return doc;
}

std::vector<int> sweep_counts(const SweepConfig& cfg) {
    std::vector<int> counts;
    for (const SweepRow& row : run_sweep(cfg))
        counts.push_back(row.report.total_events);
    return counts;
}

SweepConfig fock_sweep(double g, double delta, int n, Axis axis,
                       std::vector<double> values) {
    SweepConfig cfg;
    cfg.base = {g, delta};
    cfg.field.kind = FieldKind::fock;
    cfg.field.n = n;
    cfg.axis = axis;
    cfg.values = std::move(values);
    cfg.window = {0.0, 40.0, 0.005};
    return cfg;
}

SweepConfig eta_sweep() {
    SweepConfig cfg;
    cfg.base = {0.01, 0.3};
    cfg.field.kind = FieldKind::binomial;
    cfg.field.mu = 10;
    cfg.field.eta = 0.001;
    cfg.axis = Axis::eta;
    cfg.values = {0.001, 0.8};
    cfg.window = {0.0, 100.0, 0.01};
    return cfg;
}

SweepConfig coupling_sweep() {
    return fock_sweep(0.1, 1.0, 1, Axis::g, {0.1, 0.25, 0.35, 0.5});
}
SweepConfig detuning_sweep() {
    return fock_sweep(0.1, 0.3, 1, Axis::delta, {0.3, 0.5, 1.0, 2.0});
}
SweepConfig photon_sweep() {
    return fock_sweep(0.1, 0.3, 1, Axis::n, {1.0, 3.0, 5.0, 10.0, 20.0});
}

std::string ints_csv(const std::vector<int>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s;
}

bool match_golden(const std::vector<int>& got, const json& golden,
                  const char* key, std::string& note) {
    const std::vector<int> want = golden.at(key).get<std::vector<int>>();
    if (got == want) return true;
    note += " golden mismatch (" + std::string(key) + ": got " + ints_csv(got) +
            ", frozen " + ints_csv(want) + ")";
    return false;
}

std::vector<double> pair11_times(const std::vector<OrthogonalityEvent>& events) {
    std::vector<double> out;
    for (const OrthogonalityEvent& e : events)
        if (e.i == 1 && e.j == 1) out.push_back(e.t_event);
    return out;
}

std::vector<OrthogonalityEvent> cell_events(const ModelParams& p,
                                            const FieldSpec& field,
                                            const Window& w) {
    return run_cell(p, field, default_qubit(), w, DetectorSettings{}).events;
}

bool times_match(const std::vector<double>& got,
                 const std::vector<double>& want, double tol,
                 std::string& note) {
    if (got.size() != want.size()) {
        note += " expected " + std::to_string(want.size()) + " events, got " +
                std::to_string(got.size());
        return false;
    }
    double worst = 0.0;
    for (size_t k = 0; k < got.size(); ++k)
        worst = std::max(worst, std::abs(got[k] - want[k]));
    note += " max |t - t*| = " + fmtg(worst);
    return worst < tol;
}

// --- criteria ---------------------------------------------------------------

Outcome criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ug(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 2.0);
    std::uniform_real_distribution<double> ut(0.0, 50.0);
    std::uniform_real_distribution<double> ue(0.0, 0.9);
    std::uniform_int_distribution<int> un(0, 20);
    std::uniform_int_distribution<int> umu(1, 20);

    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ModelParams p{ug(rng), ud(rng)};
        const FieldState field = (k % 2 == 0)
                                     ? make_fock(un(rng))
                                     : make_binomial(umu(rng), ue(rng));
        const double t = ut(rng);
        const QubitDensity closed =
            reduced_qubit(evolve_joint(p, field, default_qubit(), t));
        worst = std::max(worst, rho_dist(closed, oracle_rho(p, field, t)));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool pass = worst < 1e-9 && secs < 10.0;
    return {pass, "200 draws, max deviation " + fmtg(worst) + ", " +
                      fmtg(secs) + " s"};
}

Outcome criterion_fock_direct() {
    double worst = 0.0;
    for (double delta : {0.0, 0.3, 1.0, 2.0})
        for (double g : {0.1, 0.5})
            for (int n : {0, 1, 5}) {
                const ModelParams p{g, delta};
                for (int k = 0; k < 100; ++k) {
                    const double t = 25.0 * k / 99.0;
                    const QubitDensity direct = fock_rho_direct(p, n, t);
                    const QubitDensity manifold = reduced_qubit(
                        evolve_joint(p, make_fock(n), default_qubit(), t));
                    worst = std::max(worst, rho_dist(direct, manifold));
                }
            }
    return {worst < 1e-12,
            "24 parameter combos x 100 times, max deviation " + fmtg(worst)};
}

Outcome criterion_series_diagnostic() {
    const ModelParams p{0.01, 1.0};
    const FieldState field = make_binomial(10, 0.1);
    double worst = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double t = 50.0 * k / 100.0;
        const SeriesEval s = binomial_rho_series(p, 10, 0.1, t);
        const QubitDensity oracle = oracle_rho(p, field, t);
        const double dev = std::max(
            {std::abs(s.rho11 - oracle.rho11), std::abs(s.rho22 - oracle.rho22),
             std::abs(s.rho12 - oracle.rho12)});
        worst = std::max(worst, dev);
    }
    if (!std::isfinite(worst))
        return {false, "series deviation is not finite"};

    // the deviation must be surfaced by the verify battery, never asserted away
    bool flagged = false;
    for (const CheckResult& r : run_verify(VerifyOptions{}))
        if (!r.hard && r.name.find("series") != std::string::npos)
            flagged = r.detail.rfind("FLAG", 0) == 0;
    const bool needs_flag = worst > 1e-8;
    return {!needs_flag || flagged,
            "max series deviation from the dense solver " + fmtg(worst) +
                (flagged ? ", flagged in verify" : ", NOT flagged in verify")};
}

Outcome criterion_free_evolution_law() {
    const std::vector<double> want = {pi, 3.0 * pi, 5.0 * pi};
    const Window w{0.0, 20.0, 0.005};

    FieldSpec fock;
    fock.kind = FieldKind::fock;
    fock.n = 1;
    std::string note = "fock:";
    bool ok = times_match(pair11_times(cell_events({0.0, 1.0}, fock, w)), want,
                          1e-6, note);

    FieldSpec bin;
    bin.kind = FieldKind::binomial;
    bin.mu = 10;
    bin.eta = 0.3;
    note += "; binomial:";
    ok = times_match(pair11_times(cell_events({0.0, 1.0}, bin, w)), want, 1e-6,
                     note) &&
         ok;
    return {ok, note};
}

Outcome criterion_resonance_law() {
    FieldSpec vac;
    vac.kind = FieldKind::fock;
    vac.n = 0;

    std::string note = "g=0.1:";
    bool ok = times_match(
        pair11_times(cell_events({0.1, 0.0}, vac, {0.0, 100.0, 0.005})),
        {10.0 * pi, 30.0 * pi}, 1e-5, note);

    note += "; g=1:";
    ok = times_match(
             pair11_times(cell_events({1.0, 0.0}, vac, {0.0, 20.0, 0.005})),
             {pi, 3.0 * pi, 5.0 * pi}, 1e-5, note) &&
         ok;
    return {ok, note};
}

Outcome criterion_coupling_monotonicity() {
    const std::vector<int> counts = sweep_counts(coupling_sweep());
    std::string note = "counts over g in {0.1,0.25,0.35,0.5}: " +
                       ints_csv(counts) + " on (0,40);";
    bool golden_ok = match_golden(counts, load_golden(), "coupling_counts", note);

    bool nonincreasing = true;
    bool strict = false;
    for (size_t k = 1; k < counts.size(); ++k) {
        if (counts[k] > counts[k - 1]) nonincreasing = false;
        if (counts[k] < counts[k - 1]) strict = true;
    }
    note += nonincreasing ? " nonincreasing holds"
                          : " nonincreasing VIOLATED (revival beat re-enters "
                            "the window for the larger couplings)";
    return {golden_ok && nonincreasing && strict, note};
}

Outcome criterion_detuning_monotonicity() {
    const std::vector<int> counts = sweep_counts(detuning_sweep());
    std::string note =
        "counts over delta in {0.3,0.5,1,2}: " + ints_csv(counts) + ";";
    bool ok = match_golden(counts, load_golden(), "detuning_counts", note);
    for (size_t k = 1; k < counts.size(); ++k)
        if (counts[k] < counts[k - 1]) ok = false;
    if (counts.back() <= counts.front()) ok = false;
    note += " nondecreasing with a strict overall increase";
    return {ok, note};
}

Outcome criterion_photon_monotonicity() {
    const std::vector<int> counts = sweep_counts(photon_sweep());
    std::string note =
        "counts over n in {1,3,5,10,20}: " + ints_csv(counts) + ";";
    bool ok = match_golden(counts, load_golden(), "photon_counts", note);
    for (size_t k = 1; k < counts.size(); ++k)
        if (counts[k] < counts[k - 1]) ok = false;
    if (counts.back() <= counts.front()) ok = false;
    note += " nondecreasing with a strict overall increase";
    return {ok, note};
}

Outcome criterion_eta_insensitivity() {
    const std::vector<int> counts = sweep_counts(eta_sweep());
    std::string note = "counts at eta = 0.001 and 0.8: " + ints_csv(counts) + ";";
    bool ok = match_golden(counts, load_golden(), "eta_counts", note);
    const int diff = std::abs(counts[0] - counts[1]);
    note += " |difference| = " + std::to_string(diff);
    return {ok && diff <= 1, note};
}

Outcome criterion_invariants_battery() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckResult> results = run_verify(VerifyOptions{});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    int failed = 0;
    std::string names;
    for (const CheckResult& r : results)
        if (r.hard && !r.pass) {
            ++failed;
            names += " " + r.name + ";";
        }
    const bool pass = failed == 0 && secs < 60.0;
    std::string note = std::to_string(results.size()) + " checks, " +
                       std::to_string(failed) + " hard failures, " +
                       fmtg(secs) + " s";
    if (failed) note += ":" + names;
    return {pass, note};
}

struct Criterion {
    int id;
    const char* label;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "closed form matches the dense solver on random draws",
         criterion_oracle_equivalence},
        {2, "direct fock expression matches manifold propagation",
         criterion_fock_direct},
        {3, "binomial series deviation is reported and flagged",
         criterion_series_diagnostic},
        {4, "zero-coupling events at odd multiples of pi/delta",
         criterion_free_evolution_law},
        {5, "resonant vacuum events at odd multiples of pi/g",
         criterion_resonance_law},
        {6, "event count is nonincreasing in the coupling",
         criterion_coupling_monotonicity},
        {7, "event count is nondecreasing in the detuning",
         criterion_detuning_monotonicity},
        {8, "event count is nondecreasing in the photon number",
         criterion_photon_monotonicity},
        {9, "event count is insensitive to the binomial eta",
         criterion_eta_insensitivity},
        {10, "structural invariants battery passes quickly",
         criterion_invariants_battery},
    };
    return all;
}

int dump_counts() {
    json out;
    out["coupling_counts"] = sweep_counts(coupling_sweep());
    out["detuning_counts"] = sweep_counts(detuning_sweep());
    out["photon_counts"] = sweep_counts(photon_sweep());
    out["eta_counts"] = sweep_counts(eta_sweep());
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) {
            only = std::atoi(argv[++k]);
        } else if (std::strcmp(argv[k], "--dump-counts") == 0) {
            return dump_counts();
        } else {
            std::fprintf(stderr,
                         "usage: acceptance [--criterion N | --dump-counts]\n");
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.pass) ++failures;
        std::printf("[%s] criterion %2d: %s (%s)\n", out.pass ? "PASS" : "FAIL",
                    c.id, c.label, out.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
