#pragma once

#include <array>
#include <vector>

#include "orthospeed/field_state.hpp"
#include "orthospeed/model.hpp"

namespace orthospeed {

// Joint qubit-field pure state in the {|+>, |->} x Fock basis.
// f_plus covers photon numbers 0..N, f_minus 0..N+1: one extra slot because
// |+,n> couples to |-,n+1>, which closes every excitation manifold exactly
// (no truncation error).
struct JointState {
    std::vector<cplx> f_plus;
    std::vector<cplx> f_minus;

    double norm_sq() const;
};

using QubitVec = std::array<cplx, 2>;

// (cos theta, e^{i phi} sin theta); theta = pi/4, phi = 0 is the default
// equal superposition.
QubitVec qubit_state(double theta, double phi);
QubitVec default_qubit();

// Exact closed-form evolution: each manifold span{|+,n>, |-,n+1>} rotates as
// a 2x2 block, the uncoupled |-,0> picks up the free phase e^{+i delta t/2}
// (recovered from the same cos/sinc expression at n = 0).
JointState evolve_joint(const ModelParams& p, const FieldState& field,
                        const QubitVec& qubit, double t);

// Partial trace over the field.
QubitDensity reduced_qubit(const JointState& s);

// Direct closed-form expression for a Fock-state field, bypassing the joint
// state entirely. Agrees with reduced_qubit(evolve_joint(...)) to 1e-12.
QubitDensity fock_rho_direct(const ModelParams& p, int n, double t);

// Truncated-series evaluation of the binomial-field density elements.
// Diagnostic only: the series as transcribed does not reproduce the manifold
// result (its trace is 2 at t=0), so values are returned unvalidated together
// with the max elementwise deviation from the manifold computation.
struct SeriesEval {
    double rho11 = 0.0;
    double rho22 = 0.0;
    cplx rho12{0.0, 0.0};
    double max_deviation = 0.0;
};

SeriesEval binomial_rho_series(const ModelParams& p, int mu, double eta,
                               double t);

}  // namespace orthospeed
