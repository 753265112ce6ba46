#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asvd/image.hpp"
#include "asvd/patterns.hpp"

namespace asvd {

enum class Protocol {
    ideal,        // signed patterns projected directly (simulation only)
    differential, // positive/negative split, 2M physical projections
    single_round, // normalized patterns + one auxiliary, M+1 projections
};

struct ProtocolConfig {
    Protocol protocol = Protocol::ideal;
    std::optional<double> snr_db;  // absent => noiseless
    std::uint64_t noise_seed = 0;
    // Apply detection noise to the step-1 (low-resolution) readings as
    // well as step 2. Step-2 noise is always applied when snr_db is set.
    bool noise_on_step1 = true;
};

// Single-pixel intensities for one pattern batch plus protocol metadata.
// For the single-round protocol, readings holds the raw responses to the
// projected (normalized) patterns; deembed_single_round() recovers the
// signed-pattern responses.
struct DetectionRecord {
    std::vector<double> readings;
    std::optional<double> auxiliary_reading;
    std::optional<std::vector<std::pair<double, double>>> coeffs;  // (c1, c2) per pattern
    std::uint64_t noise_seed = 0;
    std::optional<double> snr_db;
    std::size_t physical_projections = 0;
};

// readings = phi * vec(object), row-major vectorization.
DetectionRecord measure_ideal(const MeasurementMatrix& phi, const Image& object);

// Positive/negative split of Fig.-2a style: each row is rescaled into
// [-1,1], projected as (1+P)/2 and (1-P)/2, and the difference of the two
// intensities is scaled back. Readings match measure_ideal to rounding.
DetectionRecord measure_differential(const MeasurementMatrix& phi, const Image& object);

// Projects to_single_round(row).projected for every row plus one all-ones
// auxiliary pattern; stores raw responses, (c1,c2) pairs and the
// auxiliary reading.
DetectionRecord measure_single_round(const MeasurementMatrix& phi, const Image& object);

// c1 * B_P - c2 * B_aux for every pattern; the result looks like an ideal
// record (no coeffs, no auxiliary reading).
DetectionRecord deembed_single_round(const DetectionRecord& record);

// Adds i.i.d. zero-mean Gaussian noise with variance Var(readings) /
// 10^(snr_db/10), deterministically from the seed. The auxiliary reading,
// when present, receives noise of the same sigma. Throws DegenerateInput
// for constant readings.
DetectionRecord add_noise(const DetectionRecord& record, double snr_db, std::uint64_t seed);

// Measure with the configured protocol, apply noise if requested, and
// de-embed single-round records so the output is always estimator-ready.
DetectionRecord measure_with_protocol(const MeasurementMatrix& phi, const Image& object,
                                      const ProtocolConfig& cfg, bool step1);

}  // namespace asvd
