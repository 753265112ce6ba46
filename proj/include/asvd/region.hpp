#pragma once

#include <cstdint>
#include <vector>

#include "asvd/errors.hpp"

namespace asvd {

// Partition of an N x N scene into (N/n)^2 superpixels of n x n pixels.
struct SuperpixelGrid {
    int scene_side = 0;  // N
    int block_side = 0;  // n

    SuperpixelGrid() = default;
    SuperpixelGrid(int scene, int block) : scene_side(scene), block_side(block) {
        if (block <= 0 || scene <= 0 || scene % block != 0)
            throw IndivisibleGrid("superpixel side " + std::to_string(block) +
                                  " does not divide scene side " + std::to_string(scene));
    }

    int grid_side() const { return scene_side / block_side; }
    int superpixel_count() const { return grid_side() * grid_side(); }
};

enum class SelectionMode {
    imaging,  // sigma in [k1, 1]
    edge,     // sigma in [k1, k2]
};

// Superpixel-level selection (foreground or edge band) with its
// thresholds, plus helpers to expand to pixel level.
struct RegionMask {
    SuperpixelGrid grid;
    std::vector<std::uint8_t> selected;  // one flag per superpixel, row-major
    SelectionMode mode = SelectionMode::imaging;
    double k1 = 0.0;
    double k2 = 1.0;

    std::size_t selected_count() const {
        std::size_t n = 0;
        for (auto s : selected) n += s ? 1 : 0;
        return n;
    }

    // Pixel-level expansion: flags over the N x N scene, row-major.
    std::vector<std::uint8_t> pixel_mask() const;

    // Scene pixel indices of masked-in pixels, in row-major scene order.
    // This ordering defines the column layout of masked measurement
    // matrices and must match on the reconstruction side.
    std::vector<std::uint32_t> pixel_indices() const;
};

}  // namespace asvd
