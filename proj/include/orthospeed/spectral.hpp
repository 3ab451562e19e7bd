#pragma once

#include <array>

#include "orthospeed/model.hpp"

namespace orthospeed {

using Vec2c = std::array<cplx, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// Eigen-pair of a 2x2 density matrix, eigenvalue-ordered (lambda1 >= lambda2).
// Branch labels follow the ordering, never eigenvector continuity; both
// overlap traces are always reported downstream, so a level-crossing swap
// cannot lose an orthogonality event.
struct SpectralPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Vec2c u1{};
    Vec2c u2{};
    bool degenerate = false;  // lambda1 - lambda2 < 1e-10; eigenvectors arbitrary
};

// Eigenbasis of the initial equal-superposition state, eigenvalues 1 and 0.
struct InitialBasis {
    Vec2c nu1;
    Vec2c nu2;
    InitialBasis();
};

const InitialBasis& initial_basis();

// |Sp_ij| = |<nu_i | u_j>| at one instant.
struct OverlapSample {
    double t = 0.0;
    Mat2 sp{};
    bool degenerate = false;
};

SpectralPair eig2(const QubitDensity& rho);

Mat2 overlaps(const SpectralPair& pair, const InitialBasis& basis = initial_basis());

}  // namespace orthospeed
