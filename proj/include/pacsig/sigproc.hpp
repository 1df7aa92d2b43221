#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pacsig/fft.hpp"
#include "pacsig/rng.hpp"
#include "pacsig/specfun.hpp"
#include "pacsig/types.hpp"

namespace pacsig {

constexpr double two_pi = 2.0 * std::numbers::pi;

// n i.i.d. zero-mean Gaussian samples with standard deviation sigma.
inline TimeSeries white_noise(std::size_t n, double sigma, std::uint64_t seed,
                              double fs = 1.0) {
    if (n < 1) throw std::invalid_argument("white_noise: n must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("white_noise: sigma must be > 0");
    auto eng = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, sigma);
    std::vector<double> v(n);
    for (auto& x : v) x = gauss(eng);
    return TimeSeries(std::move(v), fs);
}

namespace detail {

// Analytic signal via the frequency-domain construction: double the
// positive frequencies, keep DC (and Nyquist for even n) single, zero the
// negative half, then invert.
inline std::vector<fft::cplx> analytic_signal(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<fft::cplx> spec(n);
    for (std::size_t i = 0; i < n; ++i) spec[i] = {x[i], 0.0};
    fft::forward(spec);
    const std::size_t half = n / 2;
    if (n % 2 == 0) {
        for (std::size_t k = 1; k < half; ++k) spec[k] *= 2.0;
        // spec[half] is the self-conjugate Nyquist bin; leave it single
    } else {
        for (std::size_t k = 1; k <= half; ++k) spec[k] *= 2.0;
    }
    for (std::size_t k = half + 1; k < n; ++k) spec[k] = {0.0, 0.0};
    fft::inverse(spec);
    return spec;
}

} // namespace detail

// Hilbert transform: imaginary part of the analytic signal.
inline TimeSeries hilbert(const TimeSeries& x) {
    x.validate();
    if (x.size() < 2) throw std::invalid_argument("hilbert: length must be >= 2");
    auto z = detail::analytic_signal(x.samples);
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].imag();
    return TimeSeries(std::move(out), x.fs);
}

// Instantaneous amplitude and phase. phase = atan2(x_hat, x) mapped into [0, 2*pi).
inline AnalyticSeries analytic(const TimeSeries& x) {
    x.validate();
    if (x.size() < 2) throw std::invalid_argument("analytic: length must be >= 2");
    auto z = detail::analytic_signal(x.samples);
    AnalyticSeries out;
    out.fs = x.fs;
    out.amplitude.resize(z.size());
    out.phase.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out.amplitude[i] = std::hypot(x.samples[i], z[i].imag());
        double ph = std::atan2(z[i].imag(), x.samples[i]);
        if (ph < 0.0) ph += two_pi;
        if (ph >= two_pi) ph = 0.0;
        out.phase[i] = ph;
    }
    return out;
}

// Band-pass as a frequency-domain mask (zero phase distortion).
// FilterShape::ideal keeps [f_lo, f_hi] bit-exactly (edge bins included);
// FilterShape::soft multiplies by 1/sqrt(1+(f/f_hi)^2k)/sqrt(1+(f_lo/f)^2k).
inline TimeSeries bandpass(const TimeSeries& x, const BandSpec& band,
                           const FilterSpec& filter = {FilterShape::ideal, 0.0}) {
    x.validate();
    band.validate_for(x.fs);
    if (filter.shape == FilterShape::soft) filter.validate();
    const std::size_t n = x.size();
    std::vector<fft::cplx> spec(n);
    for (std::size_t i = 0; i < n; ++i) spec[i] = {x.samples[i], 0.0};
    fft::forward(spec);
    for (std::size_t k = 0; k < n; ++k) {
        // bin k and bin n-k share the frequency k*fs/n
        const std::size_t kk = (k <= n / 2) ? k : n - k;
        const double f = static_cast<double>(kk) * x.fs / static_cast<double>(n);
        double gain = 1.0;
        if (filter.shape == FilterShape::ideal) {
            gain = (f >= band.f_lo && f <= band.f_hi) ? 1.0 : 0.0;
        } else {
            gain = 1.0 / std::sqrt(1.0 + std::pow(f / band.f_hi, 2.0 * filter.order));
            if (band.f_lo > 0.0) {
                if (f == 0.0)
                    gain = 0.0;
                else
                    gain /= std::sqrt(1.0 + std::pow(band.f_lo / f, 2.0 * filter.order));
            }
        }
        spec[k] *= gain;
    }
    fft::inverse(spec);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = spec[i].real();
    return TimeSeries(std::move(out), x.fs);
}

// Closed-form sums of the convolution kernel h and h^2 over 0..N:
//   H1(N) = (1/pi) * (psi(N/2 + 1/2) - psi(1/2))
//   H2(N) = (1/2) * (1 - (2/pi^2) * psi'(N/2 + 1/2))
// Exact against direct summation for even N; H1(0) = H2(0) = 0.
struct KernelSums {
    double h1 = 0.0;
    double h2 = 0.0;
};

inline KernelSums kernel_sums(std::size_t n) {
    if (n == 0) return {0.0, 0.0};
    const double arg = static_cast<double>(n) / 2.0 + 0.5;
    KernelSums s;
    s.h1 = (digamma(arg) - digamma(0.5)) / std::numbers::pi;
    s.h2 = 0.5 * (1.0 - (2.0 / (std::numbers::pi * std::numbers::pi)) * trigamma(arg));
    return s;
}

// Variance scaling of the transform of white noise at sample index k of an
// N-sample signal, from the kernel sums. The sum runs over both the past
// and future weight tails, so the two pieces add.
inline double kappa_additive(std::size_t n_total, std::size_t k) {
    if (n_total == 0) return 0.0;
    return kernel_sums(n_total - 1 - k).h2 + kernel_sums(k).h2;
}

// Same quantity with the tails subtracted; kept only for comparison.
inline double kappa_subtractive(std::size_t n_total, std::size_t k) {
    if (n_total == 0) return 0.0;
    return kernel_sums(n_total - 1 - k).h2 - kernel_sums(k).h2;
}

} // namespace pacsig
