#include "asvd/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asvd/errors.hpp"
#include "asvd/kernels.hpp"

namespace asvd {

double correlation_coefficient(const Image& a, const Image& b) {
    if (!a.same_shape(b))
        throw DimensionMismatch("correlation_coefficient: " + std::to_string(a.width) + "x" +
                                std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                                std::to_string(b.height));
    const std::size_t n = a.pixel_count();
    if (n == 0) throw DegenerateInput("correlation_coefficient: empty image");

    const double mean_a = kernels::sum(a.pixels()) / static_cast<double>(n);
    const double mean_b = kernels::sum(b.pixels()) / static_cast<double>(n);
    // centered second moments via  sum(xy) - n*mx*my  is unstable for
    // narrow distributions; accumulate centered products directly
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a.data[i] - mean_a;
        const double db = b.data[i] - mean_b;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa == 0.0 || sbb == 0.0)
        throw DegenerateInput("correlation_coefficient: constant image has no correlation");
    return sab / std::sqrt(saa * sbb);
}

Image normalize_unit(const Image& a) {
    if (a.pixel_count() == 0) throw DegenerateInput("normalize_unit: empty image");
    const auto [lo, hi] = kernels::minmax(a.pixels());
    if (!(hi > lo)) throw DegenerateInput("normalize_unit: constant image");
    Image out(a.width, a.height);
    const double scale = 1.0 / (hi - lo);
    kernels::scale_shift(a.pixels(), scale, -lo * scale, out.pixels());
    return out;
}

Image mean_filter(const Image& a, int radius) {
    if (radius < 0) throw InvalidFactor("mean_filter: negative radius");
    if (radius == 0) return a;
    const int w = a.width, h = a.height;
    const int k = 2 * radius + 1;

    // separable box with index clamping (edge replication), divisor k per axis
    Image tmp(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int d = -radius; d <= radius; ++d)
                s += a.at(y, std::clamp(x + d, 0, w - 1));
            tmp.at(y, x) = s / k;
        }
    }
    Image out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int d = -radius; d <= radius; ++d)
                s += tmp.at(std::clamp(y + d, 0, h - 1), x);
            out.at(y, x) = s / k;
        }
    }
    return out;
}

}  // namespace asvd
