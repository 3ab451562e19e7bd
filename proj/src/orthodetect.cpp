#include "orthospeed/orthodetect.hpp"

#include <algorithm>
#include <cmath>

namespace orthospeed {

namespace {

// Golden-section minimizer; f is unimodal on [a, b] near a detected dip.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2.0;
}

}  // namespace

std::vector<OrthogonalityEvent> scan_events(
    const std::vector<OverlapSample>& trace, double epsilon_orth,
    double refine_tol, const SampleEvaluator& evaluator) {
    if (!(epsilon_orth > 0.0 && epsilon_orth <= 0.1))
        throw domain_error("epsilon_orth must lie in (0, 0.1]");
    if (!(refine_tol > 0.0))
        throw domain_error("refine_tol must be positive");
    for (size_t k = 1; k < trace.size(); ++k)
        if (!(trace[k].t > trace[k - 1].t))
            throw domain_error("trace grid must be strictly increasing in t");

    std::vector<OrthogonalityEvent> events;
    const size_t npts = trace.size();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            double prev_t = -1.0;
            bool have_prev = false;
            for (size_t k = 1; k + 1 < npts; ++k) {
                if (trace[k - 1].degenerate || trace[k].degenerate ||
                    trace[k + 1].degenerate)
                    continue;
                const double v = trace[k].sp[i][j];
                const double vl = trace[k - 1].sp[i][j];
                const double vr = trace[k + 1].sp[i][j];
                if (!(v <= vl && v <= vr)) continue;
                // the refined minimum can undershoot the grid value by at
                // most about the bracket's fall; skip dips that cannot reach
                // the threshold
                const double rise = std::max(vl - v, vr - v);
                if (v >= epsilon_orth + rise) continue;

                auto f = [&](double t) {
                    const double s = evaluator(t).sp[i][j];
                    return s * s;
                };
                const double tstar =
                    golden_min(f, trace[k - 1].t, trace[k + 1].t, refine_tol);
                const double res = std::sqrt(f(tstar));
                if (res >= epsilon_orth) continue;
                if (have_prev && std::abs(tstar - prev_t) < 10.0 * refine_tol)
                    continue;
                events.push_back({i + 1, j + 1, tstar, res});
                prev_t = tstar;
                have_prev = true;
            }
        }
    }
    std::sort(events.begin(), events.end(),
              [](const OrthogonalityEvent& a, const OrthogonalityEvent& b) {
                  if (a.t_event != b.t_event) return a.t_event < b.t_event;
                  if (a.i != b.i) return a.i < b.i;
                  return a.j < b.j;
              });
    return events;
}

SpeedReport speed_report(const std::vector<OrthogonalityEvent>& events,
                         double t0, double t1) {
    if (!(t1 > t0)) throw domain_error("window must satisfy t1 > t0");
    SpeedReport rep;
    rep.t0 = t0;
    rep.t1 = t1;
    for (const auto& e : events) {
        rep.counts[e.i - 1][e.j - 1] += 1;
        rep.total_events += 1;
        if (!rep.first_orthogonality_time ||
            e.t_event < *rep.first_orthogonality_time)
            rep.first_orthogonality_time = e.t_event;
    }
    rep.speed = rep.total_events / (t1 - t0);
    return rep;
}

}  // namespace orthospeed
