#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace orthospeed {

using cplx = std::complex<double>;

// Bad user input (config values, CLI arguments, constructor domains).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure inside a computation (solver non-convergence, NaN).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interaction-picture parameters in scaled (dimensionless) frequency units.
struct ModelParams {
    double g = 0.0;      // qubit-field coupling, g >= 0
    double delta = 0.0;  // detuning

    void validate() const {
        if (!(g >= 0.0) || !std::isfinite(g))
            throw domain_error("coupling g must be finite and >= 0");
        if (!std::isfinite(delta))
            throw domain_error("detuning must be finite");
    }
};

// Reduced 2x2 qubit state; rho21 = conj(rho12) is implied.
struct QubitDensity {
    double rho11 = 0.0;
    double rho22 = 0.0;
    cplx rho12{0.0, 0.0};

    double trace() const { return rho11 + rho22; }
    double det() const { return rho11 * rho22 - std::norm(rho12); }

    bool is_valid(double tol = 1e-12) const {
        return std::abs(trace() - 1.0) <= tol &&
               rho11 >= -tol && rho11 <= 1.0 + tol &&
               rho22 >= -tol && rho22 <= 1.0 + tol &&
               det() >= -tol;
    }
};

// sin(x)/x with a series branch: the direct quotient loses accuracy for
// tiny x and is undefined at 0.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// Oscillation frequency of the n-excitation manifold.
inline double rabi_frequency(const ModelParams& p, int n) {
    return std::sqrt(p.delta * p.delta / 4.0 + p.g * p.g * static_cast<double>(n));
}

}  // namespace orthospeed
