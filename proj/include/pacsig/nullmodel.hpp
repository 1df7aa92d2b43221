#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pacsig/error.hpp"
#include "pacsig/mi.hpp"
#include "pacsig/specfun.hpp"

namespace pacsig {

// Closed-form parameters of the white-noise MI null for a given sample
// length and bin count. Every intermediate of the chain is kept.
struct NullModelParams {
    std::size_t n = 0;     // sample length
    std::size_t bins = 0;  // histogram bins B
    double mu_p = 0.0;     // histogram-cell mean, exactly 1/B
    double sigma2_p = 0.0; // histogram-cell variance
    double a_p = 0.0;      // Dirichlet marginal shape
    double b_p = 0.0;      // companion shape, (B-1) * a_p
    double m1 = 0.0;       // E[p ln p]
    double m2 = 0.0;       // E[(p ln p)^2]
    double c = 0.0;        // E[h_i h_j], i != j
    double mu_h = 0.0;     // mean of H / ln B
    double sigma2_h = 0.0; // variance of H / ln B
    double d_h = 0.0;      // method-of-moments dispersion factor
    BetaDist dist;         // MI ~ Beta(dist.a, dist.b)
};

// Alternate readings of the published chain, kept inspectable so the
// Monte Carlo oracle can show how decisively they are rejected.
struct ChainOptions {
    // add the N-free 1/B^3 leading term to sigma2_p
    bool nfree_lead_term = false;
    // use C = (1/B) * (psi'(B a + 2) + h(a,1,2)^2) instead of the
    // Dirichlet cross-moment
    bool printed_cross_moment = false;
    // plug C into var(H) without the -M1^2 centering
    bool uncentered_cross = false;
};

inline NullModelParams null_params(std::size_t n, std::size_t bins,
                                   const ChainOptions& opt = {}) {
    if (n < 2) throw std::invalid_argument("null_params: n must be >= 2");
    if (bins < 2) throw std::invalid_argument("null_params: bins must be >= 2");

    NullModelParams p;
    p.n = n;
    p.bins = bins;
    const double B = static_cast<double>(bins);
    const double N = static_cast<double>(n);
    const double ln_b = std::log(B);

    p.mu_p = 1.0 / B;
    const double cv = 4.0 / std::numbers::pi - 1.0;
    double inner = (1.0 / (B * B) +
                    (1.0 - 1.0 / B) / N * (1.0 / B - (1.0 - 2.0 / B) / (2.0 * N))) * cv / N;
    if (opt.nfree_lead_term) inner += 1.0 / (B * B * B);
    p.sigma2_p = B * (1.0 - 1.0 / B) * inner;

    p.a_p = p.mu_p * ((p.mu_p - p.mu_p * p.mu_p) / p.sigma2_p - 1.0);
    if (!(p.a_p > 0.0)) {
        std::ostringstream os;
        os << "null_params: non-positive shape a_p=" << p.a_p
           << " (sigma2_p=" << p.sigma2_p << ", n=" << n << ", B=" << bins << ")";
        throw numeric_error(os.str());
    }
    p.b_p = (B - 1.0) * p.a_p;

    const double a = p.a_p;
    const auto h = [&](double i, double j) { return digamma(a + i) - digamma(B * a + j); };
    const auto h1 = [&](double i, double j) { return trigamma(a + i) - trigamma(B * a + j); };

    p.m1 = h(1.0, 1.0) / B;
    p.m2 = (a + 1.0) / (B * a + 1.0) * (h1(2.0, 2.0) + h(2.0, 2.0) * h(2.0, 2.0)) / B;
    if (opt.printed_cross_moment)
        p.c = (trigamma(B * a + 2.0) + h(1.0, 2.0) * h(1.0, 2.0)) / B;
    else
        p.c = a / (B * (B * a + 1.0)) * (h(1.0, 2.0) * h(1.0, 2.0) - trigamma(B * a + 2.0));

    p.mu_h = -p.m1 * B / ln_b;
    const double cross = opt.uncentered_cross ? p.c : p.c - p.m1 * p.m1;
    p.sigma2_h = (B * (p.m2 - p.m1 * p.m1) + B * (B - 1.0) * cross) / (ln_b * ln_b);

    if (!(p.sigma2_h > 0.0) || !(p.mu_h > 0.0 && p.mu_h < 1.0)) {
        std::ostringstream os;
        os << "null_params: entropy moments outside the beta domain (mu_h=" << p.mu_h
           << ", sigma2_h=" << p.sigma2_h << ", m1=" << p.m1 << ", m2=" << p.m2
           << ", c=" << p.c << ", a_p=" << p.a_p << ")";
        throw numeric_error(os.str());
    }

    p.d_h = (p.mu_h - p.mu_h * p.mu_h) / p.sigma2_h - 1.0;
    if (!(p.d_h > 0.0)) {
        std::ostringstream os;
        os << "null_params: non-positive dispersion d_h=" << p.d_h
           << " (mu_h=" << p.mu_h << ", sigma2_h=" << p.sigma2_h << ")";
        throw numeric_error(os.str());
    }

    const double a_h = p.mu_h * p.d_h;
    const double b_h = (1.0 - p.mu_h) * p.d_h;
    // MI = 1 - H/ln B, so the shapes swap by reflection
    p.dist = BetaDist(b_h, a_h);
    return p;
}

// Smallest MI rejecting the no-coupling null at level alpha.
inline double critical_value(const NullModelParams& p, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("critical_value: alpha must be in (0, 1)");
    return beta_inv_cdf(p.dist, 1.0 - alpha);
}

// Upper-tail probability of observing at least `mi` under the null.
inline double p_value(const NullModelParams& p, double mi) {
    if (!(mi >= 0.0 && mi <= 1.0))
        throw std::domain_error("p_value: mi must be in [0, 1]");
    return 1.0 - beta_cdf(p.dist, mi);
}

struct MiAssessment {
    double mi = 0.0;
    double p_value = 1.0;
    double alpha = 0.0;
    double critical_value = 0.0;
    bool significant = false;
};

inline MiAssessment assess(const MiValue& value, std::size_t n, double alpha) {
    const auto params = null_params(n, value.bin_count);
    MiAssessment out;
    out.mi = value.mi;
    out.alpha = alpha;
    out.p_value = p_value(params, value.mi);
    out.critical_value = critical_value(params, alpha);
    out.significant = out.p_value < alpha;
    return out;
}

} // namespace pacsig
