#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "orthospeed/spectral.hpp"

namespace orthospeed {

// A refined local minimum of |Sp_ij| that dips below the detection threshold.
struct OrthogonalityEvent {
    int i = 0;  // 1-based overlap-pair indices
    int j = 0;
    double t_event = 0.0;
    double residual = 0.0;
};

struct DetectorSettings {
    double epsilon_orth = 0.02;
    double refine_tol = 1e-7;
};

struct SpeedReport {
    double t0 = 0.0;
    double t1 = 0.0;
    int counts[2][2] = {{0, 0}, {0, 0}};
    int total_events = 0;
    std::optional<double> first_orthogonality_time;
    double speed = 0.0;  // total_events / (t1 - t0)
};

using SampleEvaluator = std::function<OverlapSample(double)>;

// Scan each |Sp_ij| trace for local minima, refine candidates to
// |t - t*| < refine_tol by golden-section search on |Sp|^2 (smooth, unlike
// |Sp|), and keep minima whose refined value is below epsilon_orth.
// Degenerate-flagged samples are skipped; same-pair events closer than
// 10*refine_tol merge into one. Events come back time-ordered.
std::vector<OrthogonalityEvent> scan_events(
    const std::vector<OverlapSample>& trace, double epsilon_orth,
    double refine_tol, const SampleEvaluator& evaluator);

SpeedReport speed_report(const std::vector<OrthogonalityEvent>& events,
                         double t0, double t1);

}  // namespace orthospeed
