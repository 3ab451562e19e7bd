#include "orthospeed/oracle.hpp"

#include <cmath>

namespace orthospeed {

namespace {
constexpr cplx kI{0.0, 1.0};

Eigen::VectorXcd joint_initial(const FieldState& field, const QubitVec& qubit,
                               int dim_field) {
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(2 * dim_field);
    const int N = field.truncation();
    for (int n = 0; n <= N; ++n) {
        psi0(n) = qubit[0] * field.amplitudes[static_cast<size_t>(n)];
        psi0(dim_field + n) = qubit[1] * field.amplitudes[static_cast<size_t>(n)];
    }
    return psi0;
}
}  // namespace

Eigen::MatrixXcd build_hamiltonian(const ModelParams& p, int dim_field) {
    p.validate();
    if (dim_field < 2) throw domain_error("field dimension must be >= 2");
    const int d = dim_field;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));

    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    H.topLeftCorner(d, d) =
        (p.delta / 2.0) * Eigen::MatrixXcd::Identity(d, d);
    H.bottomRightCorner(d, d) =
        (-p.delta / 2.0) * Eigen::MatrixXcd::Identity(d, d);
    H.topRightCorner(d, d) = -kI * p.g * a;
    H.bottomLeftCorner(d, d) = kI * p.g * a.adjoint();
    return H;
}

Eigen::VectorXcd evolve_exact(const Eigen::MatrixXcd& H,
                              const Eigen::VectorXcd& psi0, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success)
        throw numeric_error("Hermitian eigensolver failed to converge");
    Eigen::VectorXcd phases =
        (-kI * t * es.eigenvalues().array()).exp().matrix();
    return es.eigenvectors() *
           (phases.array() * (es.eigenvectors().adjoint() * psi0).array())
               .matrix();
}

QubitDensity partial_trace_qubit(const Eigen::VectorXcd& psi, int dim_field) {
    if (psi.size() != 2 * dim_field)
        throw domain_error("state length does not match 2 * dim_field");
    QubitDensity rho;
    for (int n = 0; n < dim_field; ++n) {
        rho.rho11 += std::norm(psi(n));
        rho.rho22 += std::norm(psi(dim_field + n));
        rho.rho12 += psi(n) * std::conj(psi(dim_field + n));
    }
    return rho;
}

OracleEvolver::OracleEvolver(const ModelParams& p, const FieldState& field,
                             const QubitVec& qubit)
    : dim_field_(field.truncation() + 2) {
    Eigen::MatrixXcd H = build_hamiltonian(p, dim_field_);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success)
        throw numeric_error("Hermitian eigensolver failed to converge");
    evals_ = es.eigenvalues();
    evecs_ = es.eigenvectors();
    coeffs_ = evecs_.adjoint() * joint_initial(field, qubit, dim_field_);
}

Eigen::VectorXcd OracleEvolver::state(double t) const {
    Eigen::VectorXcd phases = (-kI * t * evals_.array()).exp().matrix();
    return evecs_ * (phases.array() * coeffs_.array()).matrix();
}

QubitDensity OracleEvolver::rho(double t) const {
    return partial_trace_qubit(state(t), dim_field_);
}

QubitDensity oracle_rho(const ModelParams& p, const FieldState& field, double t,
                        const QubitVec& qubit) {
    return OracleEvolver(p, field, qubit).rho(t);
}

}  // namespace orthospeed
