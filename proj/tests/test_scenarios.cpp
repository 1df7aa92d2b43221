#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "pacsig/fft.hpp"
#include "pacsig/mcval.hpp"
#include "pacsig/scenarios.hpp"

using namespace pacsig;
using Catch::Approx;

namespace {

double var_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size());
}

} // namespace

TEST_CASE("generators are deterministic and have the configured length") {
    for (auto kind : {ScenarioKind::am, ScenarioKind::spikes, ScenarioKind::hfo}) {
        auto cfg = scenario_defaults(kind);
        cfg.strength = 1.3;
        cfg.seed = 77;
        const auto a = simulate_scenario(cfg);
        const auto b = simulate_scenario(cfg);
        CHECK(a.samples == b.samples);
        CHECK(a.size() == 600);
        CHECK(a.fs == 300.0);
    }
    auto bad = scenario_defaults(ScenarioKind::am);
    bad.strength = -1.0;
    CHECK_THROWS_AS(simulate_am(bad), std::invalid_argument);
    auto wrong = scenario_defaults(ScenarioKind::am);
    CHECK_THROWS_AS(simulate_spikes(wrong), std::invalid_argument);
    CHECK_THROWS_AS(scenario_kind_from("nope"), std::invalid_argument);
}

TEST_CASE("spike template has three events over two seconds") {
    auto cfg = scenario_defaults(ScenarioKind::spikes);
    cfg.strength = 1.0;
    const auto tpl = scenario_template(cfg).samples;
    int peaks = 0;
    for (std::size_t i = 1; i + 1 < tpl.size(); ++i)
        if (tpl[i] > 0.5 && tpl[i] >= tpl[i - 1] && tpl[i] > tpl[i + 1]) ++peaks;
    CHECK(peaks == 3);
    double peak = 0.0;
    for (double v : tpl) peak = std::max(peak, std::fabs(v));
    CHECK(peak == Approx(1.0).margin(1e-12));
}

TEST_CASE("gumbel scale for the 60 ms component") {
    CHECK(detail::gumbel_scale(0.06) == Approx(0.012045).margin(1e-5));
}

TEST_CASE("hfo burst envelope has the configured width") {
    auto cfg = scenario_defaults(ScenarioKind::hfo);
    cfg.strength = 1.0;
    // strip the slow wave to leave the bursts
    const auto tpl = scenario_template(cfg).samples;
    std::vector<double> bursts(tpl.size());
    for (std::size_t i = 0; i < tpl.size(); ++i) {
        const double t = static_cast<double>(i) / cfg.fs;
        bursts[i] = tpl[i] - std::sin(two_pi * 1.5 * t);
    }
    // full width at half maximum of |burst| around the first event (t=1/9..37/90)
    const double sigma = 0.2 / 2.4;
    CHECK(sigma == Approx(0.0833).margin(1e-4));
    const std::size_t center = static_cast<std::size_t>(std::llround(cfg.fs / 6.0));
    // envelope at center vs at center + FWHM/2: the Gaussian halves
    const auto env = analytic(TimeSeries(bursts, cfg.fs)).amplitude;
    const std::size_t half_off = static_cast<std::size_t>(std::llround(0.1 * cfg.fs));
    CHECK(env[center + half_off] / env[center] == Approx(0.5).margin(0.08));
}

TEST_CASE("hfo burst spectrum peaks at 120 Hz") {
    auto cfg = scenario_defaults(ScenarioKind::hfo);
    cfg.strength = 1.0;
    const auto tpl = scenario_template(cfg).samples;
    std::vector<double> bursts(tpl.size());
    for (std::size_t i = 0; i < tpl.size(); ++i) {
        const double t = static_cast<double>(i) / cfg.fs;
        bursts[i] = tpl[i] - std::sin(two_pi * 1.5 * t);
    }
    std::vector<fft::cplx> spec(bursts.size());
    for (std::size_t i = 0; i < bursts.size(); ++i) spec[i] = {bursts[i], 0.0};
    fft::forward(spec);
    std::size_t best = 0;
    double best_mag = 0.0;
    for (std::size_t k = 1; k < bursts.size() / 2; ++k)
        if (std::abs(spec[k]) > best_mag) {
            best_mag = std::abs(spec[k]);
            best = k;
        }
    const double df = cfg.fs / static_cast<double>(bursts.size());
    CHECK(std::fabs(static_cast<double>(best) * df - 120.0) <= df + 1e-9);
}

TEST_CASE("event energy scales with the square of the strength") {
    for (auto kind : {ScenarioKind::am, ScenarioKind::spikes, ScenarioKind::hfo}) {
        auto cfg = scenario_defaults(kind);
        cfg.strength = 0.0;
        const double base = var_of(scenario_template(cfg).samples);
        cfg.strength = 1.0;
        const double v1 = var_of(scenario_template(cfg).samples) - base;
        cfg.strength = 2.0;
        const double v2 = var_of(scenario_template(cfg).samples) - base;
        cfg.strength = 4.0;
        const double v4 = var_of(scenario_template(cfg).samples) - base;
        INFO(to_string(kind));
        CHECK(v2 / v1 == Approx(4.0).epsilon(0.10));
        CHECK(v4 / v1 == Approx(16.0).epsilon(0.10));
    }
}

TEST_CASE("spikes and hfo reduce to white noise at zero strength") {
    for (auto kind : {ScenarioKind::spikes, ScenarioKind::hfo}) {
        auto cfg = scenario_defaults(kind);
        cfg.strength = 0.0;
        cfg.seed = 5;
        const auto sig = simulate_scenario(cfg);
        const auto noise = [&] {
            auto eng = make_engine(cfg.seed);
            std::normal_distribution<double> g(0.0, 1.0);
            std::vector<double> v(cfg.length());
            for (auto& x : v) x = g(eng);
            return v;
        }();
        CHECK(sig.samples == noise);
    }

    // and their null MI distribution matches the analytic null
    const auto params = null_params(600, 18);
    const std::size_t reps = 500;
    std::vector<double> mis(reps);
    auto cfg = scenario_defaults(ScenarioKind::spikes);
    cfg.strength = 0.0;
    detail::parallel_for(reps, [&](std::size_t r) {
        auto c1 = cfg;
        c1.seed = derive_seed(2024, 2 * r);
        auto c2 = cfg;
        c2.seed = derive_seed(2024, 2 * r + 1);
        mis[r] = mi_raw(simulate_scenario(c1), simulate_scenario(c2), 18).mi;
    });
    std::sort(mis.begin(), mis.end());
    McNullSample s;
    s.mis = std::move(mis);
    s.reps = reps;
    CHECK(ks_distance(s, params) < 0.05);
}

TEST_CASE("jitter moves events and keeps determinism") {
    auto cfg = scenario_defaults(ScenarioKind::spikes);
    cfg.strength = 3.0;
    cfg.seed = 9;
    const auto plain = simulate_scenario(cfg);
    cfg.jitter = true;
    const auto jit1 = simulate_scenario(cfg);
    const auto jit2 = simulate_scenario(cfg);
    CHECK(jit1.samples == jit2.samples);
    CHECK(jit1.samples != plain.samples);
}

TEST_CASE("sweep produces the full grid with constant critical values") {
    const std::vector<double> strengths{0.0, 0.5, 1.0};
    const std::vector<std::size_t> bins{9, 18};
    const std::vector<std::uint64_t> seeds{1, 2, 3, 4};
    const auto rows = sweep(ScenarioKind::am, strengths, bins, seeds);
    REQUIRE(rows.size() == strengths.size() * bins.size() * seeds.size());

    // row order is strengths x bins x seeds
    CHECK(rows[0].strength == 0.0);
    CHECK(rows[0].bins == 9);
    CHECK(rows[0].seed == 1);
    CHECK(rows[1].seed == 2);
    CHECK(rows[4].bins == 18);
    CHECK(rows.back().strength == 1.0);

    double cv9 = 0.0, cv18 = 0.0;
    for (const auto& r : rows) {
        if (r.bins == 9) {
            if (cv9 == 0.0) cv9 = r.critical_99;
            CHECK(r.critical_99 == cv9);
        } else {
            if (cv18 == 0.0) cv18 = r.critical_99;
            CHECK(r.critical_99 == cv18);
        }
        CHECK(r.mi >= 0.0);
        CHECK(r.p_value >= 0.0);
        CHECK(r.p_value <= 1.0);
    }
    CHECK(cv18 > cv9);

    CHECK_THROWS_AS(sweep(ScenarioKind::am, {}, bins, seeds), std::invalid_argument);
    CHECK_THROWS_AS(sweep(ScenarioKind::am, strengths, {}, seeds), std::invalid_argument);
    CHECK_THROWS_AS(sweep(ScenarioKind::am, strengths, bins, {}), std::invalid_argument);
}

TEST_CASE("noise-only spikes calibrate against the critical value") {
    auto cfg = scenario_defaults(ScenarioKind::spikes);
    cfg.strength = 0.0;
    const double cv = critical_value(null_params(600, 18), 0.01);
    int below = 0;
    for (std::uint64_t s = 0; s < 30; ++s) {
        cfg.seed = 5000 + s;
        const auto sig = simulate_scenario(cfg);
        if (mi_pipeline(sig, cfg.low_band, cfg.high_band, 18, cfg.filter).mi < cv)
            ++below;
    }
    CHECK(below >= 27);
}

TEST_CASE("noise-only am mean stays inside the critical region") {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 0; s < 20; ++s) seeds.push_back(derive_seed(31, s));
    const auto rows = sweep(ScenarioKind::am, {0.0}, {18}, seeds);
    double mean = 0.0;
    for (const auto& r : rows) mean += r.mi / 20.0;
    CHECK(mean < rows[0].critical_99);
}

TEST_CASE("strong hfo bursts clear every tested bin count") {
    auto cfg = scenario_defaults(ScenarioKind::hfo);
    cfg.strength = 3.0;
    cfg.seed = 11;
    const auto sig = simulate_scenario(cfg);
    for (std::size_t bins : {9u, 18u, 36u, 60u}) {
        const double cv = critical_value(null_params(600, bins), 0.01);
        const auto v = mi_pipeline(sig, cfg.low_band, cfg.high_band, bins, cfg.filter);
        INFO("bins = " << bins);
        CHECK(v.mi > cv);
    }
}

TEST_CASE("hfo sweep crosses the critical line by SNR 1.5 at every bin count") {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 0; s < 20; ++s) seeds.push_back(derive_seed(2024, s));
    const auto rows = sweep(ScenarioKind::hfo, {0.0, 1.5, 3.0}, {9, 18, 36, 60}, seeds);
    for (std::size_t bins : {9u, 18u, 36u, 60u}) {
        double m0 = 0.0, m15 = 0.0, m30 = 0.0, cv = 0.0;
        for (const auto& r : rows) {
            if (r.bins != bins) continue;
            cv = r.critical_99;
            if (r.strength == 0.0) m0 += r.mi / 20.0;
            if (r.strength == 1.5) m15 += r.mi / 20.0;
            if (r.strength == 3.0) m30 += r.mi / 20.0;
        }
        INFO("bins = " << bins);
        CHECK(m0 < cv);
        CHECK(m15 > cv);
        CHECK(m30 > m15);
    }
}

TEST_CASE("mean am sweep rises with strength") {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 0; s < 20; ++s) seeds.push_back(s);
    const auto rows = sweep(ScenarioKind::am, {0.0, 0.5, 1.0}, {18}, seeds);
    double mean[3] = {0.0, 0.0, 0.0};
    for (const auto& r : rows) {
        const int si = r.strength == 0.0 ? 0 : (r.strength == 0.5 ? 1 : 2);
        mean[si] += r.mi / 20.0;
    }
    CHECK(mean[0] < mean[1]);
    CHECK(mean[1] < mean[2]);
}
