#pragma once

#include <string>

#include "asvd/dither.hpp"
#include "asvd/image.hpp"
#include "asvd/region.hpp"
#include "asvd/sensing.hpp"

namespace asvd {

// 8-bit grayscale image I/O. Loading divides samples by 255; writers
// clamp to [0,1] and round to 8 bits. Format picked by extension
// (.pgm / .png); load_image also sniffs the magic bytes.
Image load_image(const std::string& path);
void write_pgm(const Image& img, const std::string& path);
void write_png(const Image& img, const std::string& path);
void write_image(const Image& img, const std::string& path);

// Loss-free dump: 16-byte header (magic "AIMG", u32 width, u32 height,
// u32 reserved) followed by row-major little-endian f64 pixels.
void write_image_raw(const Image& img, const std::string& path);
Image read_image_raw(const std::string& path);

// Detection record as CSV (index, reading, c1, c2) plus a JSON sidecar
// (protocol, seed, snr_db, auxiliary_reading, physical_projections).
void write_record_csv(const DetectionRecord& record, const std::string& path);
void write_record_json(const DetectionRecord& record, const std::string& protocol_name,
                       const std::string& path);

// Superpixel mask as a run-length-encoded text grid; round-trips exactly.
void write_mask(const RegionMask& mask, const std::string& path);
RegionMask read_mask(const std::string& path);

// 1-bit PBM (P4) and packed-bit blob (rows padded to byte boundary).
void write_pbm(const BinaryPattern& bp, const std::string& path);
void write_packed_bits(const BinaryPattern& bp, const std::string& path);

}  // namespace asvd
