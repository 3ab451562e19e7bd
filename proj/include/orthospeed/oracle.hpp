#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orthospeed/field_state.hpp"
#include "orthospeed/model.hpp"
#include "orthospeed/propagator.hpp"

namespace orthospeed {

// Brute-force reference evolution: dense joint Hamiltonian on a truncated
// space, exponentiated through a Hermitian eigendecomposition. Shares no
// numerical machinery with the closed-form path.

// Block matrix [[delta/2 I, -i g a], [i g a^T, -delta/2 I]] with the
// truncated annihilation matrix a|n> = sqrt(n)|n-1>. Basis ordering is
// qubit-major: index = s*dim_field + n, s in {plus -> 0, minus -> 1}.
Eigen::MatrixXcd build_hamiltonian(const ModelParams& p, int dim_field);

// exp(-iHt) psi0 for a single time point (diagonalizes on every call; use
// OracleEvolver for traces).
Eigen::VectorXcd evolve_exact(const Eigen::MatrixXcd& H,
                              const Eigen::VectorXcd& psi0, double t);

QubitDensity partial_trace_qubit(const Eigen::VectorXcd& psi, int dim_field);

// Diagonalize once, then apply per-time phase factors; cheap per time point.
class OracleEvolver {
  public:
    OracleEvolver(const ModelParams& p, const FieldState& field,
                  const QubitVec& qubit);

    Eigen::VectorXcd state(double t) const;
    QubitDensity rho(double t) const;
    int dim_field() const { return dim_field_; }

  private:
    int dim_field_;
    Eigen::VectorXd evals_;
    Eigen::MatrixXcd evecs_;
    Eigen::VectorXcd coeffs_;  // evecs^H * psi0
};

// Field truncation + 2 covers the extra |-,N+1> slot every manifold needs.
QubitDensity oracle_rho(const ModelParams& p, const FieldState& field, double t,
                        const QubitVec& qubit = default_qubit());

}  // namespace orthospeed
