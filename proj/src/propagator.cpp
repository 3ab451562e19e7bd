#include "orthospeed/propagator.hpp"

#include <algorithm>
#include <cmath>

namespace orthospeed {

namespace {
constexpr cplx kI{0.0, 1.0};
}

double JointState::norm_sq() const {
    double s = 0.0;
    for (const cplx& c : f_plus) s += std::norm(c);
    for (const cplx& c : f_minus) s += std::norm(c);
    return s;
}

QubitVec qubit_state(double theta, double phi) {
    return {cplx(std::cos(theta), 0.0),
            std::exp(kI * phi) * std::sin(theta)};
}

QubitVec default_qubit() {
    const double r = 1.0 / std::sqrt(2.0);
    return {cplx(r, 0.0), cplx(r, 0.0)};
}

JointState evolve_joint(const ModelParams& p, const FieldState& field,
                        const QubitVec& qubit, double t) {
    p.validate();
    if (!std::isfinite(t)) throw domain_error("time must be finite");
    if (std::abs(field.norm_sq() - 1.0) > 1e-9)
        throw domain_error("field state is not normalized");
    if (std::abs(std::norm(qubit[0]) + std::norm(qubit[1]) - 1.0) > 1e-9)
        throw domain_error("qubit state is not normalized");

    const int N = field.truncation();
    const size_t np = static_cast<size_t>(N) + 1;
    std::vector<cplx> fp(np), fm(np + 1, cplx(0.0, 0.0));
    for (size_t n = 0; n < np; ++n) {
        fp[n] = qubit[0] * field.amplitudes[n];
        fm[n] = qubit[1] * field.amplitudes[n];
    }

    JointState out;
    out.f_plus.assign(np, cplx(0.0, 0.0));
    out.f_minus.assign(np + 1, cplx(0.0, 0.0));
    const double half_delta = p.delta / 2.0;

    for (int n = 0; n <= N; ++n) {
        const double om = rabi_frequency(p, n + 1);
        const double c = std::cos(om * t);
        const double s = t * sinc(om * t);  // sin(om t)/om, finite at om = 0
        const double gm = p.g * std::sqrt(static_cast<double>(n + 1));
        out.f_plus[n] = (c - kI * half_delta * s) * fp[n] - gm * s * fm[n + 1];
        out.f_minus[n + 1] =
            gm * s * fp[n] + (c + kI * half_delta * s) * fm[n + 1];
    }
    const double om0 = rabi_frequency(p, 0);
    out.f_minus[0] =
        (std::cos(om0 * t) + kI * half_delta * t * sinc(om0 * t)) * fm[0];
    return out;
}

QubitDensity reduced_qubit(const JointState& s) {
    QubitDensity rho;
    for (const cplx& c : s.f_plus) rho.rho11 += std::norm(c);
    for (const cplx& c : s.f_minus) rho.rho22 += std::norm(c);
    for (size_t n = 0; n < s.f_plus.size(); ++n)
        rho.rho12 += s.f_plus[n] * std::conj(s.f_minus[n]);
    return rho;
}

QubitDensity fock_rho_direct(const ModelParams& p, int n, double t) {
    p.validate();
    if (n < 0) throw domain_error("photon number must be >= 0");
    const double on = rabi_frequency(p, n);
    const double on1 = rabi_frequency(p, n + 1);
    const double sn = t * sinc(on * t);
    const double sn1 = t * sinc(on1 * t);
    const double cn = std::cos(on * t);
    const double cn1 = std::cos(on1 * t);
    const double hd = p.delta / 2.0;
    const double g2 = p.g * p.g;

    QubitDensity rho;
    rho.rho11 = 0.5 * (cn1 * cn1 + hd * hd * sn1 * sn1 + g2 * n * sn * sn);
    rho.rho22 =
        0.5 * (cn * cn + hd * hd * sn * sn + g2 * (n + 1) * sn1 * sn1);
    rho.rho12 = 0.5 * (cn1 - kI * hd * sn1) * (cn - kI * hd * sn);
    return rho;
}

SeriesEval binomial_rho_series(const ModelParams& p, int mu, double eta,
                               double t) {
    p.validate();
    if (mu < 0) throw domain_error("mu must be >= 0");
    if (!(eta >= 0.0 && eta < 1.0))
        throw domain_error("series evaluation requires eta in [0, 1)");

    const double hd = p.delta / 2.0;
    SeriesEval out;
    for (int n = 0; n <= mu; ++n) {
        double P;
        if (eta == 0.0) {
            if (n > 0) break;
            P = 1.0;
        } else {
            P = std::exp(std::lgamma(mu + 1.0) - std::lgamma(mu - n + 1.0) -
                         std::lgamma(n + 1.0) + 2.0 * n * std::log(eta) +
                         (mu - n) * std::log1p(-eta * eta));
        }
        const double on = rabi_frequency(p, n);
        const double on1 = rabi_frequency(p, n + 1);
        const double on2 = rabi_frequency(p, n + 2);
        const double sn = t * sinc(on * t);
        const double sn1 = t * sinc(on1 * t);
        const double sn2 = t * sinc(on2 * t);
        const double cn = std::cos(on * t);
        const double cn1 = std::cos(on1 * t);
        const double cn2 = std::cos(on2 * t);

        // amplitude-ratio factors as printed; the eta-free cross term in
        // rho12 is one of the suspected misprints this evaluator preserves
        const double amp =
            eta > 0.0
                ? (mu - n) / std::sqrt(n + 1.0) * eta / std::sqrt(1.0 - eta * eta)
                : 0.0;
        const double amp2 = p.g * p.g * (mu - n) / std::sqrt(n + 1.0) *
                            (mu - n + 1.0) / std::sqrt(n + 2.0) /
                            (1.0 - eta * eta);

        out.rho11 += P * (cn1 * cn1 + p.g * p.g * n * sn * sn +
                          hd * hd * sn1 * sn1 - 2.0 * p.g * amp * cn1 * sn);
        out.rho22 += P * (cn * cn + p.g * p.g * (n + 1) * sn1 * sn1 +
                          hd * hd * sn * sn - 2.0 * p.g * amp * cn1 * sn1);
        out.rho12 += P * ((cn1 - kI * hd * sn1) * (cn - kI * hd * sn) -
                          amp2 * sn1 * sn2 +
                          p.g * amp * sn1 * ((cn - cn2) + kI * hd * (sn - sn2)));
    }

    const QubitDensity ref =
        reduced_qubit(evolve_joint(p, make_binomial(mu, eta), default_qubit(), t));
    out.max_deviation = std::max({std::abs(out.rho11 - ref.rho11),
                                  std::abs(out.rho22 - ref.rho22),
                                  std::abs(out.rho12 - ref.rho12)});
    return out;
}

}  // namespace orthospeed
