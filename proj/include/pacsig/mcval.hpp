#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pacsig/mi.hpp"
#include "pacsig/nullmodel.hpp"
#include "pacsig/parallel.hpp"
#include "pacsig/rng.hpp"
#include "pacsig/sigproc.hpp"

namespace pacsig {

// Empirical MI sample under the no-coupling null: each replicate takes
// phase from one fresh white-noise signal and amplitude from another,
// with no band splitting.
struct McNullSample {
    std::size_t n = 0;
    std::size_t bins = 0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::vector<double> mis; // sorted ascending
};

inline McNullSample mc_null(std::size_t n, std::size_t bins, std::size_t reps,
                            std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("mc_null: reps must be >= 1");
    McNullSample out;
    out.n = n;
    out.bins = bins;
    out.reps = reps;
    out.seed = seed;
    out.mis.resize(reps);
    detail::parallel_for(reps, [&](std::size_t r) {
        const auto x = white_noise(n, 1.0, derive_seed(seed, 2 * r));
        const auto y = white_noise(n, 1.0, derive_seed(seed, 2 * r + 1));
        out.mis[r] = mi_raw(x, y, bins).mi;
    });
    std::sort(out.mis.begin(), out.mis.end());
    return out;
}

struct QqPoint {
    double quantile = 0.0;
    double empirical = 0.0;
    double theoretical = 0.0;
};

// Empirical quantile with linear interpolation between order statistics.
inline double empirical_quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
    const double h = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline std::vector<QqPoint> qq_table(const McNullSample& sample,
                                     const NullModelParams& params,
                                     const std::vector<double>& quantiles) {
    std::vector<QqPoint> out;
    out.reserve(quantiles.size());
    for (double q : quantiles) {
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("qq_table: quantiles must lie in (0, 1)");
        out.push_back({q, empirical_quantile(sample.mis, q), beta_inv_cdf(params.dist, q)});
    }
    return out;
}

// Sup-norm distance between the empirical CDF and the analytic beta CDF.
inline double ks_distance(const McNullSample& sample, const NullModelParams& params) {
    if (sample.mis.empty()) throw std::invalid_argument("ks_distance: empty sample");
    const double n = static_cast<double>(sample.mis.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.mis.size(); ++i) {
        const double f = beta_cdf(params.dist, sample.mis[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    return d;
}

struct MomentEstimate {
    double value = 0.0;
    double se = 0.0; // replicate-level standard error
};

// Brute-force estimates of the entropy-contribution moments from simulated
// white-noise histograms, with replicate-level standard errors.
struct MomentOracle {
    std::size_t n = 0;
    std::size_t bins = 0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    MomentEstimate m1;       // E[p ln p]
    MomentEstimate m2;       // E[(p ln p)^2]
    MomentEstimate c;        // E[h_i h_j], i != j
    MomentEstimate mu_h;     // E[H / ln B]
    MomentEstimate sigma2_h; // var(H / ln B)
};

inline MomentOracle moment_oracle(std::size_t n, std::size_t bins, std::size_t reps,
                                  std::uint64_t seed) {
    if (reps < 100) throw std::invalid_argument("moment_oracle: reps must be >= 100");
    const double B = static_cast<double>(bins);
    const double ln_b = std::log(B);

    std::vector<double> rep_m1(reps), rep_m2(reps), rep_c(reps), rep_hn(reps);
    detail::parallel_for(reps, [&](std::size_t r) {
        const auto x = white_noise(n, 1.0, derive_seed(seed, 2 * r));
        const auto y = white_noise(n, 1.0, derive_seed(seed, 2 * r + 1));
        const auto ph = analytic(x);
        const auto am = analytic(y);
        const auto hist = phase_amp_histogram(ph.phase, am.amplitude, bins);
        double s = 0.0, q = 0.0;
        for (double p : hist.probs) {
            const double h = (p > 0.0) ? p * std::log(p) : 0.0;
            s += h;
            q += h * h;
        }
        rep_m1[r] = s / B;
        rep_m2[r] = q / B;
        rep_c[r] = (s * s - q) / (B * (B - 1.0));
        rep_hn[r] = -s / ln_b;
    });

    const auto mean_se = [reps](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= static_cast<double>(reps);
        double ss = 0.0;
        for (double x : v) ss += (x - m) * (x - m);
        const double var = ss / static_cast<double>(reps - 1);
        return MomentEstimate{m, std::sqrt(var / static_cast<double>(reps))};
    };

    MomentOracle out;
    out.n = n;
    out.bins = bins;
    out.reps = reps;
    out.seed = seed;
    out.m1 = mean_se(rep_m1);
    out.m2 = mean_se(rep_m2);
    out.c = mean_se(rep_c);
    out.mu_h = mean_se(rep_hn);

    double mean_hn = out.mu_h.value;
    double m2c = 0.0, m4c = 0.0;
    for (double x : rep_hn) {
        const double d = x - mean_hn;
        m2c += d * d;
        m4c += d * d * d * d;
    }
    const double rr = static_cast<double>(reps);
    const double var = m2c / (rr - 1.0);
    m4c /= rr;
    // SE of a sample variance from the fourth central moment
    const double se_var = std::sqrt(std::max(0.0, (m4c - var * var * (rr - 3.0) / (rr - 1.0)) / rr));
    out.sigma2_h = {var, se_var};
    return out;
}

} // namespace pacsig
