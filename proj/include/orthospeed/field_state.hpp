#pragma once

#include <string>
#include <vector>

#include "orthospeed/model.hpp"

namespace orthospeed {

enum class FieldKind { fock, binomial, coherent_approx };

// Normalized photon-number amplitude vector c_0..c_N.
struct FieldState {
    std::vector<cplx> amplitudes;
    FieldKind kind = FieldKind::fock;

    // constructor parameters, kept for config echo / reporting
    int fock_n = 0;
    int mu = 0;
    double eta = 0.0;
    double nbar = 0.0;

    int truncation() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm_sq() const;
    std::string describe() const;
};

FieldState make_fock(int n);

// Amplitudes sqrt(C(mu,m)) eta^m (1-eta^2)^((mu-m)/2), real eta in [0,1].
FieldState make_binomial(int mu, double eta);

// Poissonian amplitudes truncated so the discarded tail mass < tail_tol,
// then renormalized.
FieldState make_coherent_approx(double nbar, double tail_tol);

double mean_photon(const FieldState& state);

}  // namespace orthospeed
