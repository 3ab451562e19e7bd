#include <cmath>
#include <doctest.h>

#include "orthospeed/propagator.hpp"
#include "orthospeed/spectral.hpp"

using namespace orthospeed;

namespace {

double norm2(const Vec2c& v) { return std::norm(v[0]) + std::norm(v[1]); }

cplx inner(const Vec2c& a, const Vec2c& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

// Residual of the eigen-equation for one branch.
double eig_residual(const QubitDensity& rho, double lambda, const Vec2c& u) {
    const cplx r0 = rho.rho11 * u[0] + rho.rho12 * u[1] - lambda * u[0];
    const cplx r1 = std::conj(rho.rho12) * u[0] + rho.rho22 * u[1] - lambda * u[1];
    return std::sqrt(std::norm(r0) + std::norm(r1));
}

// Explicit ratio form of the eigenvectors, usable when rho12 is not tiny:
// u_k proportional to (1, (lambda_k - rho11)/rho12).
Vec2c ratio_eigenvector(const QubitDensity& rho, double lambda) {
    const cplx second = (lambda - rho.rho11) / rho.rho12;
    const double scale = 1.0 / std::sqrt(1.0 + std::norm(second));
    return {scale, scale * second};
}

}  // namespace

TEST_CASE("initial basis") {
    const InitialBasis& b = initial_basis();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b.nu1[0] - cplx{r, 0.0}) < 1e-15);
    CHECK(std::abs(b.nu1[1] - cplx{r, 0.0}) < 1e-15);
    CHECK(std::abs(b.nu2[1] - cplx{-r, 0.0}) < 1e-15);
    CHECK(std::abs(inner(b.nu1, b.nu2)) < 1e-15);
}

TEST_CASE("eigenpair of the initial state") {
    const SpectralPair pr = eig2({0.5, 0.5, {0.5, 0.0}});
    CHECK(pr.lambda1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pr.lambda2 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_FALSE(pr.degenerate);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(pr.u1[0] - cplx{r, 0.0}) < 1e-12);
    CHECK(std::abs(pr.u1[1] - cplx{r, 0.0}) < 1e-12);
    CHECK(std::abs(pr.u2[0] - cplx{r, 0.0}) < 1e-12);
    CHECK(std::abs(pr.u2[1] - cplx{-r, 0.0}) < 1e-12);
}

TEST_CASE("worked asymmetric example") {
    const SpectralPair pr = eig2({0.75, 0.25, {0.25, 0.0}});
    CHECK(pr.lambda1 == doctest::Approx(0.853553).epsilon(1e-6));
    CHECK(pr.lambda2 == doctest::Approx(0.146447).epsilon(1e-5));
    CHECK(std::abs(pr.u1[0] - cplx{0.923880, 0.0}) < 1e-6);
    CHECK(std::abs(pr.u1[1] - cplx{0.382683, 0.0}) < 1e-6);

    const Mat2 sp = overlaps(pr);
    CHECK(sp[0][0] == doctest::Approx(0.923880).epsilon(1e-6));
}

TEST_CASE("degenerate state is flagged") {
    const SpectralPair pr = eig2({0.5, 0.5, {0.0, 0.0}});
    CHECK(pr.degenerate);
    CHECK(pr.lambda1 == doctest::Approx(0.5));
    CHECK(pr.lambda2 == doctest::Approx(0.5));
}

TEST_CASE("diagonal densities give basis eigenvectors ordered by eigenvalue") {
    const SpectralPair top = eig2({0.7, 0.3, {0.0, 0.0}});
    CHECK(std::abs(top.u1[0] - cplx{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(top.u1[1]) < 1e-14);

    const SpectralPair bottom = eig2({0.3, 0.7, {0.0, 0.0}});
    CHECK(std::abs(bottom.u1[1] - cplx{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(bottom.u1[0]) < 1e-14);
    CHECK(bottom.lambda1 == doctest::Approx(0.7));
}

TEST_CASE("eigen-equation residual, orthogonality, reconstruction") {
    const FieldState field = make_binomial(6, 0.45);
    const ModelParams p{0.3, 0.8};
    for (double t = 0.1; t < 30.0; t += 0.61) {
        const QubitDensity rho =
            reduced_qubit(evolve_joint(p, field, default_qubit(), t));
        const SpectralPair pr = eig2(rho);
        if (pr.degenerate) continue;
        CHECK(std::abs(pr.lambda1 + pr.lambda2 - 1.0) < 1e-12);
        CHECK(std::abs(norm2(pr.u1) - 1.0) < 1e-12);
        CHECK(std::abs(norm2(pr.u2) - 1.0) < 1e-12);
        CHECK(eig_residual(rho, pr.lambda1, pr.u1) < 1e-10);
        CHECK(eig_residual(rho, pr.lambda2, pr.u2) < 1e-10);
        CHECK(std::abs(inner(pr.u1, pr.u2)) < 1e-10);

        // lambda1 u1 u1^H + lambda2 u2 u2^H reproduces rho
        const double r11 = pr.lambda1 * std::norm(pr.u1[0]) +
                           pr.lambda2 * std::norm(pr.u2[0]);
        const cplx r12 = pr.lambda1 * pr.u1[0] * std::conj(pr.u1[1]) +
                         pr.lambda2 * pr.u2[0] * std::conj(pr.u2[1]);
        CHECK(std::abs(r11 - rho.rho11) < 1e-10);
        CHECK(std::abs(r12 - rho.rho12) < 1e-10);
    }
}

TEST_CASE("two-branch solver matches the explicit ratio form") {
    const FieldState field = make_fock(1);
    const ModelParams p{0.1, 1.0};
    int compared = 0;
    for (double t = 0.3; t < 25.0; t += 0.47) {
        const QubitDensity rho =
            reduced_qubit(evolve_joint(p, field, default_qubit(), t));
        if (std::abs(rho.rho12) <= 1e-6) continue;
        const SpectralPair pr = eig2(rho);
        if (pr.degenerate) continue;
        const Vec2c v1 = ratio_eigenvector(rho, pr.lambda1);
        const Vec2c v2 = ratio_eigenvector(rho, pr.lambda2);
        CHECK(std::abs(std::abs(inner(v1, pr.u1)) - 1.0) < 1e-10);
        CHECK(std::abs(std::abs(inner(v2, pr.u2)) - 1.0) < 1e-10);
        ++compared;
    }
    CHECK(compared > 30);
}

TEST_CASE("overlaps of the initial pair form the identity") {
    const Mat2 sp = overlaps(eig2({0.5, 0.5, {0.5, 0.0}}));
    CHECK(sp[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sp[1][1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sp[0][1] < 1e-12);
    CHECK(sp[1][0] < 1e-12);
}

TEST_CASE("swapped eigenbasis flips the overlap matrix") {
    const Mat2 sp = overlaps(eig2({0.5, 0.5, {-0.5, 0.0}}));
    CHECK(sp[0][0] < 1e-12);
    CHECK(sp[1][1] < 1e-12);
    CHECK(sp[0][1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sp[1][0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("overlap rows and columns are normalized") {
    const FieldState field = make_binomial(10, 0.3);
    const ModelParams p{0.35, 1.0};
    for (double t = 0.05; t < 40.0; t += 0.83) {
        const SpectralPair pr =
            eig2(reduced_qubit(evolve_joint(p, field, default_qubit(), t)));
        if (pr.degenerate) continue;
        const Mat2 sp = overlaps(pr);
        for (int i = 0; i < 2; ++i) {
            const double row = sp[i][0] * sp[i][0] + sp[i][1] * sp[i][1];
            const double col = sp[0][i] * sp[0][i] + sp[1][i] * sp[1][i];
            CHECK(std::abs(row - 1.0) < 1e-10);
            CHECK(std::abs(col - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("overlap traces move continuously between grid points") {
    const ModelParams p{0.1, 1.0};
    const FieldState field = make_fock(1);
    const double dt = 0.01;
    Mat2 prev{};
    bool have_prev = false;
    for (double t = 0.0; t <= 40.0 + 1e-9; t += dt) {
        const SpectralPair pr =
            eig2(reduced_qubit(evolve_joint(p, field, default_qubit(), t)));
        if (pr.degenerate) {
            have_prev = false;
            continue;
        }
        const Mat2 sp = overlaps(pr);
        if (have_prev)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    CHECK(std::abs(sp[i][j] - prev[i][j]) < 0.1);
        prev = sp;
        have_prev = true;
    }
}
