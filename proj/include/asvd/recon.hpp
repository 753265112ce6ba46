#pragma once

#include "asvd/image.hpp"
#include "asvd/patterns.hpp"
#include "asvd/sensing.hpp"

namespace asvd {

// All estimators return the scene reshaped row-major and min-max
// normalized to [0,1] for display; a constant (all-zero) estimate maps to
// the all-zero image instead of failing.

// Correlation ghost imaging: (1/M) * phi^T (B - mean(B)).
Image recon_gi(const MeasurementMatrix& phi, const DetectionRecord& record, int width, int height);

// Differential ghost imaging, readings normalized by the per-pattern
// total illumination S_i = sum(row_i):
//   <B*I> - (<B>/<S>) * <S*I>.
// Throws DegenerateInput when <S> == 0.
Image recon_dgi(const MeasurementMatrix& phi, const DetectionRecord& record, int width, int height);

// Pseudo-inverse ghost imaging: minimum-norm least-squares solution of
// phi * x = B with singular values below 1e-12 * sigma_max truncated.
Image recon_pgi(const MeasurementMatrix& phi, const DetectionRecord& record, int width, int height);

// SVD ghost imaging: phi_svd^T * B. Requires an orthogonalized matrix
// (svd_orthogonal or masked_svd kind); masked background pixels come out
// exactly zero. Throws KindMismatch for a random matrix.
Image recon_svdgi(const MeasurementMatrix& phi_svd, const DetectionRecord& record, int width,
                  int height);

}  // namespace asvd
