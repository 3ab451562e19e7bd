#include "orthospeed/field_state.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

namespace orthospeed {

double FieldState::norm_sq() const {
    double s = 0.0;
    for (const cplx& c : amplitudes) s += std::norm(c);
    return s;
}

std::string FieldState::describe() const {
    char buf[96];
    switch (kind) {
        case FieldKind::fock:
            std::snprintf(buf, sizeof buf, "fock(n=%d)", fock_n);
            break;
        case FieldKind::binomial:
            std::snprintf(buf, sizeof buf, "binomial(mu=%d, eta=%.17g)", mu, eta);
            break;
        case FieldKind::coherent_approx:
            std::snprintf(buf, sizeof buf, "coherent_approx(nbar=%.17g, N=%d)",
                          nbar, truncation());
            break;
    }
    return buf;
}

FieldState make_fock(int n) {
    if (n < 0) throw domain_error("fock photon number must be >= 0");
    FieldState s;
    s.kind = FieldKind::fock;
    s.fock_n = n;
    s.amplitudes.assign(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    s.amplitudes.back() = 1.0;
    return s;
}

FieldState make_binomial(int mu, double eta) {
    if (mu < 0) throw domain_error("binomial mu must be a positive integer");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw domain_error("binomial eta must lie in [0, 1]");
    if (mu == 0) {
        std::cerr << "warning: binomial state with mu=0 degenerates to vacuum\n";
        FieldState s = make_fock(0);
        s.kind = FieldKind::binomial;
        s.mu = 0;
        s.eta = eta;
        return s;
    }

    FieldState s;
    s.kind = FieldKind::binomial;
    s.mu = mu;
    s.eta = eta;
    s.amplitudes.assign(static_cast<size_t>(mu) + 1, cplx(0.0, 0.0));

    if (eta == 0.0) {
        s.amplitudes[0] = 1.0;
        return s;
    }
    if (eta == 1.0) {
        s.amplitudes[static_cast<size_t>(mu)] = 1.0;
        return s;
    }

    // log-space evaluation keeps C(mu, m) finite for large mu
    const double log_eta = std::log(eta);
    const double log_om = std::log1p(-eta * eta);  // ln(1 - eta^2)
    double norm = 0.0;
    for (int m = 0; m <= mu; ++m) {
        const double log_binom = std::lgamma(mu + 1.0) - std::lgamma(m + 1.0) -
                                 std::lgamma(mu - m + 1.0);
        const double a =
            std::exp(0.5 * log_binom + m * log_eta + 0.5 * (mu - m) * log_om);
        s.amplitudes[static_cast<size_t>(m)] = a;
        norm += a * a;
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (cplx& c : s.amplitudes) c *= scale;
    return s;
}

FieldState make_coherent_approx(double nbar, double tail_tol) {
    if (!(nbar >= 0.0)) throw domain_error("nbar must be >= 0");
    if (!(tail_tol > 0.0 && tail_tol <= 1e-6))
        throw domain_error("tail_tol must lie in (0, 1e-6]");

    FieldState s;
    s.kind = FieldKind::coherent_approx;
    s.nbar = nbar;

    if (nbar == 0.0) {
        s.amplitudes.assign(1, cplx(1.0, 0.0));
        return s;
    }

    // accumulate Poisson weights until the remaining mass drops below tail_tol
    std::vector<double> amps;
    double log_p = -nbar;  // ln P(n=0)
    double cum = 0.0;
    const double log_nbar = std::log(nbar);
    for (int n = 0;; ++n) {
        amps.push_back(std::exp(0.5 * log_p));
        cum += std::exp(log_p);
        if (1.0 - cum < tail_tol) break;
        if (n > 100000) throw numeric_error("coherent truncation did not converge");
        log_p += log_nbar - std::log(n + 1.0);
    }
    const double scale = 1.0 / std::sqrt(cum);
    s.amplitudes.reserve(amps.size());
    for (double a : amps) s.amplitudes.emplace_back(a * scale, 0.0);
    return s;
}

double mean_photon(const FieldState& state) {
    double s = 0.0;
    for (size_t n = 0; n < state.amplitudes.size(); ++n)
        s += static_cast<double>(n) * std::norm(state.amplitudes[n]);
    return s;
}

}  // namespace orthospeed
