#include "orthospeed/spectral.hpp"

#include <cmath>

namespace orthospeed {

namespace {

// Rotate the global phase so the largest-magnitude component is real >= 0.
void fix_phase(Vec2c& u) {
    const int k = std::abs(u[0]) >= std::abs(u[1]) ? 0 : 1;
    const double mag = std::abs(u[k]);
    if (mag == 0.0) return;
    const cplx ph = std::conj(u[k]) / mag;
    u[0] *= ph;
    u[1] *= ph;
}

}  // namespace

InitialBasis::InitialBasis() {
    const double r = 1.0 / std::sqrt(2.0);
    nu1 = {cplx(r, 0.0), cplx(r, 0.0)};
    nu2 = {cplx(r, 0.0), cplx(-r, 0.0)};
}

const InitialBasis& initial_basis() {
    static const InitialBasis basis;
    return basis;
}

SpectralPair eig2(const QubitDensity& rho) {
    const double a = rho.rho11;
    const double c = rho.rho22;
    const cplx b = rho.rho12;

    SpectralPair out;
    const double disc =
        std::sqrt((a - c) * (a - c) + 4.0 * std::norm(b));
    out.lambda1 = (1.0 + disc) / 2.0;
    out.lambda2 = (1.0 - disc) / 2.0;
    out.degenerate = disc < 1e-10;

    if (std::abs(b) < 1e-13) {
        // effectively diagonal: standard basis, ordered by eigenvalue
        if (a >= c) {
            out.u1 = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
            out.u2 = {cplx(0.0, 0.0), cplx(1.0, 0.0)};
        } else {
            out.u1 = {cplx(0.0, 0.0), cplx(1.0, 0.0)};
            out.u2 = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
        }
        return out;
    }

    // two equivalent row constructions; pick the larger-norm one so a small
    // residual never divides the result into noise
    const Vec2c cand1{b, cplx(out.lambda1 - a, 0.0)};
    const Vec2c cand2{cplx(out.lambda1 - c, 0.0), std::conj(b)};
    const double n1 = std::norm(cand1[0]) + std::norm(cand1[1]);
    const double n2 = std::norm(cand2[0]) + std::norm(cand2[1]);
    Vec2c u = n1 >= n2 ? cand1 : cand2;
    const double inv = 1.0 / std::sqrt(n1 >= n2 ? n1 : n2);
    u[0] *= inv;
    u[1] *= inv;

    out.u1 = u;
    out.u2 = {-std::conj(u[1]), std::conj(u[0])};  // exact orthogonal complement
    fix_phase(out.u1);
    fix_phase(out.u2);
    return out;
}

Mat2 overlaps(const SpectralPair& pair, const InitialBasis& basis) {
    const Vec2c* nus[2] = {&basis.nu1, &basis.nu2};
    const Vec2c* us[2] = {&pair.u1, &pair.u2};
    Mat2 sp{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            sp[i][j] = std::abs(std::conj((*nus[i])[0]) * (*us[j])[0] +
                                std::conj((*nus[i])[1]) * (*us[j])[1]);
    return sp;
}

}  // namespace orthospeed
