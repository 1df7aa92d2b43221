#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacsig/mi.hpp"
#include "pacsig/nullmodel.hpp"
#include "pacsig/parallel.hpp"
#include "pacsig/rng.hpp"
#include "pacsig/sigproc.hpp"
#include "pacsig/types.hpp"

namespace pacsig {

enum class ScenarioKind { am, spikes, hfo };

inline std::string to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::am: return "am";
        case ScenarioKind::spikes: return "spikes";
        case ScenarioKind::hfo: return "hfo";
    }
    return "?";
}

inline ScenarioKind scenario_kind_from(const std::string& s) {
    if (s == "am") return ScenarioKind::am;
    if (s == "spikes") return ScenarioKind::spikes;
    if (s == "hfo") return ScenarioKind::hfo;
    throw std::invalid_argument("unknown scenario kind: " + s);
}

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::am;
    double strength = 0.0; // event peak relative to unit noise sd
    double fs = 300.0;
    double duration = 2.0; // seconds
    std::uint64_t seed = 0;
    BandSpec low_band;
    BandSpec high_band;
    std::size_t bins = 18;
    bool jitter = false; // uniform +-1/6 s event-time jitter
    FilterSpec filter{};

    void validate() const {
        if (!(strength >= 0.0)) throw std::invalid_argument("scenario: strength must be >= 0");
        if (!(fs > 0.0)) throw std::invalid_argument("scenario: fs must be > 0");
        if (!(duration > 0.0)) throw std::invalid_argument("scenario: duration must be > 0");
        if (bins < 2) throw std::invalid_argument("scenario: bins must be >= 2");
        low_band.validate_for(fs);
        high_band.validate_for(fs);
    }

    std::size_t length() const {
        return static_cast<std::size_t>(std::llround(fs * duration));
    }
};

inline ScenarioConfig scenario_defaults(ScenarioKind kind) {
    ScenarioConfig cfg;
    cfg.kind = kind;
    switch (kind) {
        case ScenarioKind::am:
            cfg.low_band = {0.1, 5.0};
            cfg.high_band = {10.0, 75.0};
            break;
        case ScenarioKind::spikes:
            cfg.low_band = {0.1, 8.0};
            cfg.high_band = {12.0, 40.0};
            break;
        case ScenarioKind::hfo:
            cfg.low_band = {0.1, 12.0};
            cfg.high_band = {90.0, 147.0};
            break;
    }
    return cfg;
}

namespace detail {

constexpr double spike_period = 2.0 / 3.0; // seconds between events

inline double gumbel_pdf(double x, double mu, double s) {
    const double z = (x - mu) / s;
    return std::exp(-(z + std::exp(-z))) / s;
}

// Duration d holds 95% of the density, so the scale is
// -d / (log(-log(0.975)) - log(-log(0.025))).
inline double gumbel_scale(double d) {
    static const double denom =
        std::log(-std::log(0.975)) - std::log(-std::log(0.025));
    return -d / denom;
}

inline std::vector<double> event_times(double first, double duration,
                                       const std::vector<double>& jitter) {
    std::vector<double> times;
    std::size_t k = 0;
    for (double t = first; t < duration; t += spike_period, ++k)
        times.push_back(t + (k < jitter.size() ? jitter[k] : 0.0));
    return times;
}

// Sum of three Gumbel densities (60/120/200 ms) per event, jointly
// peak-normalized to 1.
inline std::vector<double> spike_train(std::size_t n, double fs, double duration,
                                       const std::vector<double>& jitter) {
    const auto times = event_times(spike_period / 2.0, duration, jitter);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        for (double tc : times)
            for (double d : {0.06, 0.12, 0.20})
                out[i] += gumbel_pdf(t, tc, gumbel_scale(d));
    }
    double peak = 0.0;
    for (double v : out) peak = std::max(peak, std::fabs(v));
    if (peak > 0.0)
        for (double& v : out) v /= peak;
    return out;
}

// Gaussian-windowed 120 Hz bursts centered on the peaks of a 1.5 Hz wave,
// peak-normalized to 1.
inline std::vector<double> hfo_bursts(std::size_t n, double fs, double duration,
                                      const std::vector<double>& jitter) {
    const double sigma = 0.2 / 2.4; // FWHM convention for the 200 ms envelope
    const auto times = event_times(spike_period / 4.0, duration, jitter);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        for (double tc : times) {
            const double u = (t - tc) / sigma;
            out[i] += std::exp(-0.5 * u * u) * std::sin(two_pi * 120.0 * (t - tc));
        }
    }
    double peak = 0.0;
    for (double v : out) peak = std::max(peak, std::fabs(v));
    if (peak > 0.0)
        for (double& v : out) v /= peak;
    return out;
}

inline std::vector<double> jitter_draws(const ScenarioConfig& cfg, std::mt19937_64& eng) {
    std::vector<double> out;
    if (!cfg.jitter || cfg.kind == ScenarioKind::am) return out;
    const double first = cfg.kind == ScenarioKind::spikes ? spike_period / 2.0
                                                          : spike_period / 4.0;
    std::uniform_real_distribution<double> u(-1.0 / 6.0, 1.0 / 6.0);
    for (double t = first; t < cfg.duration; t += spike_period)
        out.push_back(u(eng));
    return out;
}

} // namespace detail

// Deterministic part of a scenario (no noise, no jitter); strength applied.
inline TimeSeries scenario_template(const ScenarioConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.length();
    std::vector<double> s(n, 0.0);
    const double A = cfg.strength;
    switch (cfg.kind) {
        case ScenarioKind::am:
            // slow oscillation plus a carrier whose envelope it drives
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / cfg.fs;
                const double slow = std::sin(two_pi * 1.0 * t);
                s[i] = slow + (1.0 + A * slow) * std::sin(two_pi * 20.0 * t);
            }
            break;
        case ScenarioKind::spikes: {
            const auto train = detail::spike_train(n, cfg.fs, cfg.duration, {});
            for (std::size_t i = 0; i < n; ++i) s[i] = A * train[i];
            break;
        }
        case ScenarioKind::hfo: {
            // bursts locked to the peaks of a slow wave of the same rate
            const auto bursts = detail::hfo_bursts(n, cfg.fs, cfg.duration, {});
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / cfg.fs;
                s[i] = A * (std::sin(two_pi * 1.5 * t) + bursts[i]);
            }
            break;
        }
    }
    return TimeSeries(std::move(s), cfg.fs);
}

namespace detail {

inline TimeSeries simulate(const ScenarioConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.length();
    auto eng = make_engine(cfg.seed);
    const auto jit = jitter_draws(cfg, eng);

    std::vector<double> s(n, 0.0);
    if (cfg.jitter && cfg.kind == ScenarioKind::spikes) {
        const auto train = spike_train(n, cfg.fs, cfg.duration, jit);
        for (std::size_t i = 0; i < n; ++i) s[i] = cfg.strength * train[i];
    } else if (cfg.jitter && cfg.kind == ScenarioKind::hfo) {
        const auto bursts = hfo_bursts(n, cfg.fs, cfg.duration, jit);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / cfg.fs;
            s[i] = cfg.strength * (std::sin(two_pi * 1.5 * t) + bursts[i]);
        }
    } else {
        s = scenario_template(cfg).samples;
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (double& v : s) v += gauss(eng);
    return TimeSeries(std::move(s), cfg.fs);
}

} // namespace detail

inline TimeSeries simulate_am(const ScenarioConfig& cfg) {
    if (cfg.kind != ScenarioKind::am)
        throw std::invalid_argument("simulate_am: config kind must be am");
    return detail::simulate(cfg);
}

inline TimeSeries simulate_spikes(const ScenarioConfig& cfg) {
    if (cfg.kind != ScenarioKind::spikes)
        throw std::invalid_argument("simulate_spikes: config kind must be spikes");
    return detail::simulate(cfg);
}

inline TimeSeries simulate_hfo(const ScenarioConfig& cfg) {
    if (cfg.kind != ScenarioKind::hfo)
        throw std::invalid_argument("simulate_hfo: config kind must be hfo");
    return detail::simulate(cfg);
}

inline TimeSeries simulate_scenario(const ScenarioConfig& cfg) {
    return detail::simulate(cfg);
}

struct SweepRow {
    ScenarioKind kind;
    double strength = 0.0;
    std::size_t bins = 0;
    std::uint64_t seed = 0;
    double mi = 0.0;
    double p_value = 1.0;
    double critical_99 = 0.0;
};

// MI-vs-strength curves with the analytic 99% critical value per bin count.
// Rows are ordered strengths x bins x seeds regardless of schedule.
inline std::vector<SweepRow> sweep(ScenarioKind kind,
                                   const std::vector<double>& strengths,
                                   const std::vector<std::size_t>& bins_list,
                                   const std::vector<std::uint64_t>& seeds,
                                   const ScenarioConfig& base = {}) {
    if (strengths.empty() || bins_list.empty() || seeds.empty())
        throw std::invalid_argument("sweep: strengths, bins and seeds must be nonempty");

    ScenarioConfig cfg = base;
    if (base.low_band.f_hi == 0.0 && base.high_band.f_hi == 0.0) {
        const auto defaults = scenario_defaults(kind);
        cfg = defaults;
        cfg.strength = base.strength;
        cfg.seed = base.seed;
        cfg.jitter = base.jitter;
        cfg.filter = base.filter;
    }
    cfg.kind = kind;

    const std::size_t n = cfg.length();
    std::vector<NullModelParams> params;
    params.reserve(bins_list.size());
    for (std::size_t b : bins_list) params.push_back(null_params(n, b));

    const std::size_t total = strengths.size() * bins_list.size() * seeds.size();
    std::vector<SweepRow> rows(total);
    detail::parallel_for(total, [&](std::size_t idx) {
        const std::size_t si = idx / (bins_list.size() * seeds.size());
        const std::size_t bi = (idx / seeds.size()) % bins_list.size();
        const std::size_t ri = idx % seeds.size();

        ScenarioConfig cell = cfg;
        cell.strength = strengths[si];
        cell.bins = bins_list[bi];
        cell.seed = seeds[ri];
        const auto sig = detail::simulate(cell);
        const auto mi = mi_pipeline(sig, cell.low_band, cell.high_band, cell.bins, cell.filter);

        SweepRow row;
        row.kind = kind;
        row.strength = cell.strength;
        row.bins = cell.bins;
        row.seed = cell.seed;
        row.mi = mi.mi;
        row.p_value = p_value(params[bi], mi.mi);
        row.critical_99 = critical_value(params[bi], 0.01);
        rows[idx] = row;
    });
    return rows;
}

} // namespace pacsig
