#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "asvd/region.hpp"

namespace asvd {

enum class MatrixKind {
    random,
    svd_orthogonal,
    masked_svd,
};

// M x cols measurement matrix whose rows are flattened illumination
// patterns. For masked_svd matrices, mask_pixels lists the scene pixel
// indices carrying the pattern values (all other columns are zero).
struct MeasurementMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    MatrixKind kind = MatrixKind::random;
    std::vector<double> data;  // row-major
    std::optional<std::vector<std::uint32_t>> mask_pixels;

    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * cols, cols};
    }
    std::span<double> row(std::size_t i) {
        return {data.data() + i * cols, cols};
    }
};

// One pattern prepared for single-round projection: the [0,1]-normalized
// pattern plus the de-embedding coefficients of
//   original = c1 * projected - c2 * ones.
struct SingleRoundPattern {
    std::vector<double> projected;
    double c1 = 0.0;
    double c2 = 0.0;
};

// Measurement-count accounting for the two-step adaptive pipeline.
// m_total = m1 + m2 + 2 always counts the two auxiliary projections;
// eta_patterns excludes them, eta_total includes them.
struct SamplingBudget {
    int scene_side = 0;       // N
    int block_side = 0;       // n
    std::size_t selected = 0; // N_S
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    std::size_t m_total = 0;
    double eta_patterns = 0.0;
    double eta_total = 0.0;
};

// M x n2 matrix with i.i.d. uniform [0,1) entries, reproducible from the
// seed. Throws InvalidShape unless 1 <= m <= n2.
MeasurementMatrix random_matrix(std::size_t m, std::size_t n2, std::uint64_t seed);

// Orthonormalizes the rows of a random matrix by factorizing it and
// replacing every singular value with 1. The result spans the same row
// space and satisfies phi_svd * phi_svd^T = I to machine precision.
// Throws RankDeficient when any singular value falls below
// 1e-12 * sigma_max, and KindMismatch for non-random input.
MeasurementMatrix svd_orthogonalize(const MeasurementMatrix& phi);

// Scatters the columns of a region-sized orthogonal matrix into
// full-scene coordinates: column j of the small matrix lands on the j-th
// masked-in pixel in row-major scene order, all other columns are zero.
// Throws MaskMismatch when the mask pixel count differs from phi.cols.
MeasurementMatrix mask_columns(const MeasurementMatrix& phi_svd_small, const RegionMask& mask);

// Splits a signed pattern into its [0,1] projection and de-embedding
// coefficients: c1 = max - min, c2 = -min. Throws DegenerateInput for a
// constant pattern.
SingleRoundPattern to_single_round(std::span<const double> pattern);

// Eq.-level accounting: m1 = (N/n)^2, m2 = n^2 * N_S, m_total = m1+m2+2.
SamplingBudget sampling_budget(int scene_side, int block_side, std::size_t selected);

// Process-wide cache of orthogonalized matrices keyed by (seed, shape);
// repeated pipeline runs (k2 sweeps, compare runs) reuse the factorization.
std::shared_ptr<const MeasurementMatrix> orthogonal_matrix_cached(std::size_t m,
                                                                  std::size_t n2,
                                                                  std::uint64_t seed);

// Flat binary export: 16-byte header (magic "ASVD", u32 rows, u64 cols),
// then row-major little-endian f64 entries.
void write_matrix(const MeasurementMatrix& m, const std::string& path);
MeasurementMatrix read_matrix(const std::string& path);

}  // namespace asvd
