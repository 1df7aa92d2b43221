#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "pacsig/error.hpp"
#include "pacsig/sigproc.hpp"
#include "pacsig/types.hpp"

namespace pacsig {

// Normalized mean-amplitude-per-phase-bin distribution P(b).
struct PhaseAmpHistogram {
    std::vector<double> probs;
    std::size_t bin_count = 0;
    std::size_t empty_bins = 0;
};

struct MiValue {
    double mi = 0.0;           // in [0, 1]
    double entropy_nats = 0.0; // in [0, ln B]
    std::size_t bin_count = 0;
};

// Bin b collects samples with phase in [b*2pi/B, (b+1)*2pi/B); the bin means
// are normalized to sum to one. Empty bins contribute zero mass.
inline PhaseAmpHistogram phase_amp_histogram(std::span<const double> phase,
                                             std::span<const double> amp,
                                             std::size_t bins) {
    if (phase.size() != amp.size())
        throw std::invalid_argument("phase_amp_histogram: phase/amplitude length mismatch");
    if (phase.empty())
        throw std::invalid_argument("phase_amp_histogram: need at least one sample");
    if (bins < 2)
        throw std::invalid_argument("phase_amp_histogram: need at least 2 bins");

    std::vector<double> sums(bins, 0.0);
    std::vector<std::size_t> counts(bins, 0);
    const double scale = static_cast<double>(bins) / two_pi;
    for (std::size_t i = 0; i < phase.size(); ++i) {
        double ph = phase[i];
        if (ph == two_pi) ph = 0.0; // wrap the closed endpoint
        if (!(ph >= 0.0 && ph < two_pi))
            throw std::invalid_argument("phase_amp_histogram: phase outside [0, 2pi)");
        if (!(amp[i] >= 0.0))
            throw std::invalid_argument("phase_amp_histogram: negative amplitude");
        const std::size_t b = std::min(static_cast<std::size_t>(ph * scale), bins - 1);
        sums[b] += amp[i];
        counts[b] += 1;
    }

    PhaseAmpHistogram hist;
    hist.bin_count = bins;
    hist.probs.resize(bins, 0.0);
    double total = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        if (counts[b] == 0) {
            ++hist.empty_bins;
            continue;
        }
        hist.probs[b] = sums[b] / static_cast<double>(counts[b]);
        total += hist.probs[b];
    }
    if (!(total > 0.0))
        throw degenerate_input_error("phase_amp_histogram: all amplitudes are zero");
    for (auto& p : hist.probs) p /= total;
    return hist;
}

// H = -sum p ln p with 0 ln 0 = 0.
inline double entropy(const PhaseAmpHistogram& hist) {
    double h = 0.0;
    for (double p : hist.probs)
        if (p > 0.0) h -= p * std::log(p);
    return std::max(h, 0.0);
}

// rho = 1 - H / ln B. Rounding noise within ~50 ulp of the uniform case is
// snapped to exactly zero so a flat histogram reports mi = 0.
inline MiValue modulation_index(const PhaseAmpHistogram& hist) {
    MiValue v;
    v.bin_count = hist.bin_count;
    v.entropy_nats = entropy(hist);
    const double mi = 1.0 - v.entropy_nats / std::log(static_cast<double>(hist.bin_count));
    v.mi = std::clamp(mi, 0.0, 1.0);
    if (v.mi < 1e-14) v.mi = 0.0;
    if (v.mi == 0.0) v.entropy_nats = std::log(static_cast<double>(hist.bin_count));
    return v;
}

// Two-signal pipeline: phase from the band-passed low component of
// `phase_src`, amplitude from the band-passed high component of `amp_src`.
inline MiValue mi_pipeline(const TimeSeries& phase_src, const TimeSeries& amp_src,
                           const BandSpec& low, const BandSpec& high,
                           std::size_t bins, const FilterSpec& filter = {}) {
    if (phase_src.size() != amp_src.size())
        throw std::invalid_argument("mi_pipeline: input length mismatch");
    if (phase_src.size() < 2)
        throw std::invalid_argument("mi_pipeline: length must be >= 2");
    const auto lowband = analytic(bandpass(phase_src, low, filter));
    const auto highband = analytic(bandpass(amp_src, high, filter));
    // a signal with no in-band energy leaves only transform rounding dust
    double in_scale = 0.0, band_peak = 0.0;
    for (double v : amp_src.samples) in_scale = std::max(in_scale, std::fabs(v));
    for (double v : highband.amplitude) band_peak = std::max(band_peak, v);
    if (band_peak <= 1e-12 * in_scale)
        throw degenerate_input_error("mi_pipeline: amplitude band carries no signal");
    const auto hist = phase_amp_histogram(lowband.phase, highband.amplitude, bins);
    return modulation_index(hist);
}

inline MiValue mi_pipeline(const TimeSeries& x, const BandSpec& low, const BandSpec& high,
                           std::size_t bins, const FilterSpec& filter = {}) {
    return mi_pipeline(x, x, low, high, bins, filter);
}

// Raw variant used by the null sampler: no band splitting, phase and
// amplitude straight from the two analytic signals.
inline MiValue mi_raw(const TimeSeries& phase_src, const TimeSeries& amp_src,
                      std::size_t bins) {
    const auto ph = analytic(phase_src);
    const auto am = analytic(amp_src);
    const auto hist = phase_amp_histogram(ph.phase, am.amplitude, bins);
    return modulation_index(hist);
}

} // namespace pacsig
