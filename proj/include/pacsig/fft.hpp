#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pacsig::fft {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// Precomputed tables for an iterative radix-2 transform of size n.
struct Pow2Plan {
    std::size_t n = 0;
    std::vector<std::size_t> rev;
    std::vector<cplx> w; // w[j] = exp(-2*pi*i*j/n), j < n/2

    explicit Pow2Plan(std::size_t size) : n(size), rev(size) {
        std::size_t log2n = 0;
        while ((std::size_t{1} << log2n) < n) ++log2n;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < log2n; ++b)
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
            rev[i] = r;
        }
        w.resize(n / 2);
        for (std::size_t j = 0; j < n / 2; ++j) {
            double ang = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
            w[j] = {std::cos(ang), std::sin(ang)};
        }
    }

    void forward(cplx* a) const {
        for (std::size_t i = 0; i < n; ++i)
            if (i < rev[i]) std::swap(a[i], a[rev[i]]);
        for (std::size_t len = 2; len <= n; len <<= 1) {
            const std::size_t half = len >> 1;
            const std::size_t stride = n / len;
            for (std::size_t i = 0; i < n; i += len) {
                for (std::size_t j = 0; j < half; ++j) {
                    const cplx t = a[i + j + half] * w[j * stride];
                    a[i + j + half] = a[i + j] - t;
                    a[i + j] += t;
                }
            }
        }
    }
};

// Bluestein (chirp-z) tables for arbitrary size n.
struct BluesteinPlan {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<cplx> chirp;  // exp(-i*pi*k^2/n), k < n
    std::vector<cplx> fft_v;  // forward transform of the padded conjugate chirp
    std::shared_ptr<Pow2Plan> inner;

    explicit BluesteinPlan(std::size_t size) : n(size) {
        m = next_pow2(2 * n + 1);
        inner = std::make_shared<Pow2Plan>(m);
        chirp.resize(n);
        const std::uint64_t period = 2 * static_cast<std::uint64_t>(n);
        for (std::size_t k = 0; k < n; ++k) {
            // reduce k^2 mod 2n first so the angle stays small and accurate
            const std::uint64_t r = (static_cast<std::uint64_t>(k) * k) % period;
            const double ang = -std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
            chirp[k] = {std::cos(ang), std::sin(ang)};
        }
        std::vector<cplx> v(m, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < n; ++k) {
            const cplx c = std::conj(chirp[k]);
            v[k] = c;
            if (k > 0) v[m - k] = c;
        }
        inner->forward(v.data());
        fft_v = std::move(v);
    }

    void forward(cplx* a) const {
        std::vector<cplx> buf(m, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < n; ++k) buf[k] = a[k] * chirp[k];
        inner->forward(buf.data());
        for (std::size_t k = 0; k < m; ++k) buf[k] *= fft_v[k];
        // inverse of the inner transform via conjugation
        for (auto& z : buf) z = std::conj(z);
        inner->forward(buf.data());
        const double scale = 1.0 / static_cast<double>(m);
        for (std::size_t k = 0; k < n; ++k)
            a[k] = std::conj(buf[k]) * scale * chirp[k];
    }
};

struct Plan {
    std::shared_ptr<Pow2Plan> pow2;
    std::shared_ptr<BluesteinPlan> bluestein;

    explicit Plan(std::size_t n) {
        if (is_pow2(n))
            pow2 = std::make_shared<Pow2Plan>(n);
        else
            bluestein = std::make_shared<BluesteinPlan>(n);
    }

    void forward(cplx* a) const {
        if (pow2)
            pow2->forward(a);
        else
            bluestein->forward(a);
    }
};

// One plan cache per thread: lock-free and safe for parallel replicates.
inline const Plan& plan_for(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::shared_ptr<Plan>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_shared<Plan>(n)).first;
    return *it->second;
}

} // namespace detail

// In-place forward DFT: X_k = sum_j x_j exp(-2*pi*i*j*k/n).
inline void forward(std::vector<cplx>& data) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    if (data.size() == 1) return;
    detail::plan_for(data.size()).forward(data.data());
}

// In-place inverse DFT (with 1/n normalization).
inline void inverse(std::vector<cplx>& data) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    if (data.size() == 1) return;
    for (auto& z : data) z = std::conj(z);
    detail::plan_for(data.size()).forward(data.data());
    const double scale = 1.0 / static_cast<double>(data.size());
    for (auto& z : data) z = std::conj(z) * scale;
}

} // namespace pacsig::fft
