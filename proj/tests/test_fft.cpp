#include <catch_amalgamated.hpp>

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "pacsig/fft.hpp"

using pacsig::fft::cplx;

namespace {

// quadratic-time reference transform
std::vector<cplx> naive_dft(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = -2.0 * std::numbers::pi *
                               static_cast<double>((j * k) % n) / static_cast<double>(n);
            acc += x[j] * cplx{std::cos(ang), std::sin(ang)};
        }
        out[k] = acc;
    }
    return out;
}

std::vector<cplx> random_signal(std::size_t n, unsigned seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> x(n);
    for (auto& v : x) v = {g(eng), g(eng)};
    return x;
}

} // namespace

TEST_CASE("fft matches the naive DFT for power-of-two and odd sizes") {
    for (std::size_t n : {2u, 8u, 16u, 60u, 100u, 127u, 128u, 600u}) {
        auto x = random_signal(n, 17 + static_cast<unsigned>(n));
        auto ref = naive_dft(x);
        auto got = x;
        pacsig::fft::forward(got);
        double max_err = 0.0;
        double scale = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            max_err = std::max(max_err, std::abs(got[k] - ref[k]));
            scale = std::max(scale, std::abs(ref[k]));
        }
        INFO("n=" << n);
        CHECK(max_err < 1e-10 * std::max(1.0, scale));
    }
}

TEST_CASE("fft inverse round-trips") {
    for (std::size_t n : {5u, 64u, 600u, 1000u}) {
        auto x = random_signal(n, 99 + static_cast<unsigned>(n));
        auto y = x;
        pacsig::fft::forward(y);
        pacsig::fft::inverse(y);
        double max_err = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            max_err = std::max(max_err, std::abs(y[k] - x[k]));
        INFO("n=" << n);
        CHECK(max_err < 1e-12);
    }
}

TEST_CASE("fft satisfies Parseval") {
    auto x = random_signal(601, 7);
    double time_energy = 0.0;
    for (const auto& v : x) time_energy += std::norm(v);
    auto y = x;
    pacsig::fft::forward(y);
    double freq_energy = 0.0;
    for (const auto& v : y) freq_energy += std::norm(v);
    CHECK(freq_energy / static_cast<double>(x.size()) ==
          Catch::Approx(time_energy).epsilon(1e-12));
}

TEST_CASE("fft of a unit impulse is flat") {
    std::vector<cplx> x(240, cplx{0.0, 0.0});
    x[0] = {1.0, 0.0};
    pacsig::fft::forward(x);
    for (const auto& v : x) {
        CHECK(v.real() == Catch::Approx(1.0).margin(1e-12));
        CHECK(v.imag() == Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("fft rejects empty input") {
    std::vector<cplx> x;
    CHECK_THROWS_AS(pacsig::fft::forward(x), std::invalid_argument);
}
