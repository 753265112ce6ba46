#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace asvd {

// 2D grayscale scene or reconstruction, row-major, values nominally in
// [0,1] once normalized. Loaders divide 8-bit samples by 255.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    Image() = default;
    Image(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    std::size_t pixel_count() const { return data.size(); }

    double& at(int y, int x) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x]; }

    std::span<const double> pixels() const { return data; }
    std::span<double> pixels() { return data; }

    bool same_shape(const Image& other) const {
        return width == other.width && height == other.height;
    }
};

struct QualityReport {
    double cc = 0.0;
    double sampling_ratio_patterns = 0.0;
    double sampling_ratio_total = 0.0;
    double wall_time_ms = 0.0;
};

// Pearson correlation over all pixels.
// Throws DimensionMismatch on shape disagreement and DegenerateInput if
// either image has zero variance.
double correlation_coefficient(const Image& a, const Image& b);

// Min-max normalization to [0,1]. Throws DegenerateInput for a constant
// image. Idempotent and rank-preserving.
Image normalize_unit(const Image& a);

// Box mean over the (2*radius+1)^2 window with indices clamped to the
// border (edge replication); radius 0 is the identity.
Image mean_filter(const Image& a, int radius);

}  // namespace asvd
