#pragma once

#include <cstdint>
#include <vector>

#include "asvd/image.hpp"

namespace asvd {

// Binary bitmap representing a grayscale pattern at upscale x resolution:
// each source pixel corresponds to an upscale x upscale block of bits.
struct BinaryPattern {
    int side = 0;      // = upscale * source side
    int upscale = 1;
    std::vector<std::uint8_t> bits;  // row-major, values 0/1

    int source_side() const { return side / upscale; }
};

// Spatial dithering for binary modulators: nearest-neighbor upscale by a,
// then serpentine Floyd-Steinberg error diffusion with the kernel
// renormalized at borders so no error is dropped before the last pixel.
// Requires a square pattern with values in [0,1]; throws InvalidFactor
// for a < 1.
BinaryPattern dither(const Image& pattern, int a);

// Mean of each a x a block, i.e. the grayscale pattern the bitmap realizes.
Image block_means(const BinaryPattern& bp);

// Detector reading of the dithered pattern: <block_means(dither(pattern, a)),
// vec(object)>.
double dithered_forward(const Image& pattern, const Image& object, int a);

}  // namespace asvd
