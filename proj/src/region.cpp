#include "asvd/region.hpp"

namespace asvd {

std::vector<std::uint8_t> RegionMask::pixel_mask() const {
    const int N = grid.scene_side, n = grid.block_side, g = grid.grid_side();
    std::vector<std::uint8_t> px(static_cast<std::size_t>(N) * N, 0);
    for (int by = 0; by < g; ++by) {
        for (int bx = 0; bx < g; ++bx) {
            if (!selected[static_cast<std::size_t>(by) * g + bx]) continue;
            for (int y = by * n; y < (by + 1) * n; ++y)
                for (int x = bx * n; x < (bx + 1) * n; ++x)
                    px[static_cast<std::size_t>(y) * N + x] = 1;
        }
    }
    return px;
}

std::vector<std::uint32_t> RegionMask::pixel_indices() const {
    const auto px = pixel_mask();
    std::vector<std::uint32_t> idx;
    idx.reserve(selected_count() * grid.block_side * grid.block_side);
    for (std::size_t i = 0; i < px.size(); ++i)
        if (px[i]) idx.push_back(static_cast<std::uint32_t>(i));
    return idx;
}

}  // namespace asvd
