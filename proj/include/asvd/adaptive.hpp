#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "asvd/image.hpp"
#include "asvd/patterns.hpp"
#include "asvd/region.hpp"
#include "asvd/sensing.hpp"

namespace asvd {

struct PipelineOptions {
    int block_side = 4;                   // n
    double factor = 0.8;                  // threshold reduction factor
    SelectionMode mode = SelectionMode::imaging;
    std::optional<double> k2;             // required for edge mode
    ProtocolConfig protocol;
    std::uint64_t seed = 0;
    int lowres_filter_radius = 0;         // box pre-filter on the step-1 image
    double step2_fraction = 1.0;          // fraction of n^2*N_S region patterns
};

struct PipelineResult {
    Image lowres;          // grid_side x grid_side step-1 reconstruction
    RegionMask mask;
    Image final;           // N x N, background exactly zero
    SamplingBudget budget;
    QualityReport quality;
    bool degraded = false; // step 2 aborted (empty foreground)
};

// Otsu's threshold: the bin-center k maximizing the between-class
// variance [mu_T*w(k) - mu(k)]^2 / (w(k)*(1-w(k))) over a bins-wide
// histogram of [0,1]; candidates with w in {0,1} are skipped and ties
// break toward the smaller k. Throws DegenerateInput for constant input.
double otsu_threshold(std::span<const double> values, int bins = 256);

// Normalizes the low-resolution image, derives k1 = factor * otsu, and
// selects superpixels with value >= k1 (imaging) or k1 <= value <= k2
// (edge). Throws EmptyForeground when nothing qualifies.
RegionMask select_foreground(const Image& lowres, double factor, SelectionMode mode,
                             std::optional<double> k2 = std::nullopt);

// Two-step adaptive pipeline: full low-resolution SVD sensing of the
// superpixel-downsampled scene, foreground (or edge-band) selection, then
// masked high-resolution SVD sensing of the selected region only.
// EmptyForeground degrades to a lowres-only result instead of throwing.
PipelineResult run_asvd(const Image& object, const PipelineOptions& opts);

// run_asvd with edge-mode selection.
PipelineResult run_edge(const Image& object, PipelineOptions opts);

}  // namespace asvd
