#pragma once

#include <string>
#include <vector>

namespace orthospeed {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool hard = true;   // soft checks report but never gate the exit code
    std::string detail;
};

struct VerifyOptions {
    // Fault injection: replace the manifold frequency by its square inside a
    // shadow propagator so the unitarity check demonstrably catches the
    // wrong formula.
    bool inject_rabi_square = false;
    // Scan grid used for the detector checks; values above the 0.01 bound
    // trip the grid-spacing check.
    double grid_dt = 0.005;
};

std::vector<CheckResult> run_verify(const VerifyOptions& opt);

// True iff every hard check passed.
bool verify_ok(const std::vector<CheckResult>& results);

}  // namespace orthospeed
