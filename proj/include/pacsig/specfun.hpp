#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pacsig {

// psi(x) for x > 0: recurrence lift into the asymptotic region, then the
// Bernoulli series. Relative error < 1e-13 over (0, 1e6).
inline double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("digamma: x must be > 0");
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv;
    result -= inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
              inv2 * (1.0 / 252.0 -
              inv2 * (1.0 / 240.0 -
              inv2 * (1.0 / 132.0 -
              inv2 * (691.0 / 32760.0 -
              inv2 * (1.0 / 12.0)))))));
    return result;
}

// psi'(x) for x > 0, same scheme.
inline double trigamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("trigamma: x must be > 0");
    double result = 0.0;
    while (x < 10.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    result += inv * (1.0 +
              inv * (0.5 +
              inv * (1.0 / 6.0 -
              inv2 * (1.0 / 30.0 -
              inv2 * (1.0 / 42.0 -
              inv2 * (1.0 / 30.0 -
              inv2 * (5.0 / 66.0 -
              inv2 * (691.0 / 2730.0))))))));
    return result;
}

struct BetaDist {
    double a = 1.0;
    double b = 1.0;

    BetaDist() = default;
    BetaDist(double shape_a, double shape_b) : a(shape_a), b(shape_b) { validate(); }

    void validate() const {
        if (!(a > 0.0) || !(b > 0.0))
            throw std::domain_error("BetaDist: shapes must be > 0 (a=" +
                                    std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }

    double mean() const { return a / (a + b); }
    double variance() const {
        const double s = a + b;
        return a * b / (s * s * (s + 1.0));
    }
};

inline double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace detail {

// Continued fraction for the regularized incomplete beta (modified Lentz).
inline double beta_cf(double a, double b, double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double fpmin = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 20000; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= 3.0 * eps) break;
    }
    return h;
}

} // namespace detail

// Regularized incomplete beta I_x(a, b).
inline double beta_cdf(const BetaDist& dist, double x) {
    dist.validate();
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("beta_cdf: x must be in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double a = dist.a, b = dist.b;
    const double lnfront = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    const double front = std::exp(lnfront);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * detail::beta_cf(a, b, x) / a;
    return 1.0 - front * detail::beta_cf(b, a, 1.0 - x) / b;
}

inline double beta_pdf(const BetaDist& dist, double x) {
    dist.validate();
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return std::exp((dist.a - 1.0) * std::log(x) + (dist.b - 1.0) * std::log1p(-x) -
                    log_beta(dist.a, dist.b));
}

// Quantile: safeguarded Newton with bisection fallback; the result x
// satisfies |beta_cdf(x) - q| < 1e-12 (well inside the 1e-10 contract).
inline double beta_inv_cdf(const BetaDist& dist, double q) {
    dist.validate();
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("beta_inv_cdf: q must be in (0, 1)");
    double lo = 0.0, hi = 1.0;
    double x = dist.mean();
    if (!(x > 0.0 && x < 1.0)) x = 0.5;
    double f = beta_cdf(dist, x) - q;
    for (int it = 0; it < 200; ++it) {
        if (f > 0.0) hi = x; else lo = x;
        if (std::fabs(f) < 1e-14 || hi - lo < 1e-17) break;
        const double dens = beta_pdf(dist, x);
        double next = (dens > 0.0) ? x - f / dens : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
        f = beta_cdf(dist, x) - q;
    }
    return x;
}

} // namespace pacsig
