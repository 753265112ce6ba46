#pragma once

// LAPACK-backed dense routines used by pattern orthogonalization and the
// pseudo-inverse estimator. Everything here works on row-major M x N
// buffers with M <= N by reinterpreting them as their column-major
// transpose, so no layout copies are needed.

#include <cstddef>
#include <vector>

namespace asvd::linalg {

// Orthonormal-row factor of Eq.-4 form: factorize the input and rebuild
// it with every singular value replaced by 1 (the polar factor U * V1^T).
// `a` is row-major m x n (m <= n) and is consumed. Relative rank
// tolerance: sigma_min < rank_tol * sigma_max throws RankDeficient.
//
// Shapes whose divide-and-conquer SVD workspace would not fit in memory
// are routed through a Gram eigendecomposition with Newton-Schulz
// refinement; both routes produce the same factor to machine precision.
std::vector<double> orthonormal_rows(std::vector<double>&& a, std::size_t m, std::size_t n,
                                     double rank_tol = 1e-12);

// Minimum-norm least-squares solution of a * x = b with singular values
// below rcond * sigma_max truncated (LAPACK *gelsd). `a` is row-major
// m x n and left untouched.
std::vector<double> lstsq_min_norm(const std::vector<double>& a, std::size_t m, std::size_t n,
                                   const std::vector<double>& b, double rcond = 1e-12);

}  // namespace asvd::linalg
