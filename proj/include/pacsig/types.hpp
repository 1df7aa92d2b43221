#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pacsig {

// Uniformly sampled real-valued signal.
struct TimeSeries {
    std::vector<double> samples;
    double fs = 0.0; // sampling rate, Hz

    TimeSeries() = default;
    TimeSeries(std::vector<double> data, double rate)
        : samples(std::move(data)), fs(rate) {
        validate();
    }

    std::size_t size() const { return samples.size(); }

    void validate() const {
        if (samples.empty())
            throw std::invalid_argument("TimeSeries: length must be >= 1");
        if (!(fs > 0.0))
            throw std::invalid_argument("TimeSeries: fs must be > 0");
        for (double v : samples)
            if (!std::isfinite(v))
                throw std::invalid_argument("TimeSeries: samples must be finite");
    }
};

// Instantaneous amplitude/phase pair. phase is in [0, 2*pi).
struct AnalyticSeries {
    std::vector<double> amplitude;
    std::vector<double> phase;
    double fs = 0.0;
};

// Frequency interval in Hz.
struct BandSpec {
    double f_lo = 0.0;
    double f_hi = 0.0;

    void validate_for(double fs) const {
        if (!(f_lo >= 0.0) || !(f_lo < f_hi) || !(f_hi <= fs / 2.0))
            throw std::invalid_argument(
                "BandSpec: need 0 <= f_lo < f_hi <= fs/2, got [" +
                std::to_string(f_lo) + ", " + std::to_string(f_hi) +
                "] at fs=" + std::to_string(fs));
    }
};

// Spectral mask used when a pipeline splits a signal into bands.
// `ideal` zeroes everything outside the band. `soft` applies a
// Butterworth-style magnitude rolloff of the given order on both edges,
// which keeps enough broadband content for the noise floor of the
// band-limited pipeline to stay close to the white-noise null.
enum class FilterShape { ideal, soft };

struct FilterSpec {
    FilterShape shape = FilterShape::soft;
    double order = 0.75;

    void validate() const {
        if (shape == FilterShape::soft && !(order > 0.0))
            throw std::invalid_argument("FilterSpec: soft rolloff order must be > 0");
    }
};

} // namespace pacsig
