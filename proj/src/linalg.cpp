#include "linalg.hpp"

#include <algorithm>
#include <cblas.h>
#include <cmath>
#include <cstdint>
#include <lapacke.h>
#include <stdexcept>
#include <string>

#include "asvd/errors.hpp"

namespace asvd::linalg {

namespace {

// Keep the peak dgesdd footprint (input + factors + workspace) under this
// many bytes; larger problems take the Gram route.
constexpr std::size_t kDgesddByteCap = 3000ull * 1024 * 1024;

std::size_t dgesdd_footprint_bytes(std::size_t m, std::size_t n) {
    // col-major transpose view: rows = n, cols = m, min = m (m <= n)
    const std::size_t a = n * m, u = n * m, vt = m * m;
    const std::size_t work = 3 * m + std::max(n, 4 * m * m + 4 * m);
    return 8 * (a + u + vt + work);
}

void check_lapack(lapack_int info, const char* what) {
    if (info != 0)
        throw Error(std::string(what) + " failed with info=" + std::to_string(info));
}

// Direct route: economy SVD of the transpose view, then U_b * VT_b.
// With B = A^T = U_b S V_b^T (col-major n x m), the row-major result
// A_svd = U V1^T is exactly (U_b V_b^T)^T, i.e. U_b * VT_b left in
// col-major order.
std::vector<double> polar_dgesdd(std::vector<double>&& a, std::size_t m, std::size_t n,
                                 double rank_tol) {
    const lapack_int rows = static_cast<lapack_int>(n);
    const lapack_int cols = static_cast<lapack_int>(m);
    std::vector<double> u(n * m);
    std::vector<double> vt(m * m);
    std::vector<double> s(m);
    check_lapack(LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', rows, cols, a.data(), rows, s.data(),
                                u.data(), rows, vt.data(), cols),
                 "dgesdd");
    a.clear();
    a.shrink_to_fit();
    if (s[0] <= 0.0 || s[m - 1] < rank_tol * s[0])
        throw RankDeficient("svd_orthogonalize: singular value " + std::to_string(s[m - 1]) +
                            " below tolerance " + std::to_string(rank_tol * s[0]));
    std::vector<double> out(n * m);
    cblas_dgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, rows, cols, cols, 1.0, u.data(), rows,
                vt.data(), cols, 0.0, out.data(), rows);
    return out;
}

// Memory-light route for big tall matrices: eigendecompose the m x m Gram
// matrix A A^T = V S^2 V^T, form (A A^T)^(-1/2) A, then polish with
// Newton-Schulz steps X <- X (3I - X^T X)/2 until the Gram deviation hits
// machine level. The refinement preserves the polar factor, so the result
// matches the direct route.
std::vector<double> polar_gram(std::vector<double>&& a, std::size_t m, std::size_t n,
                               double rank_tol) {
    const lapack_int mm = static_cast<lapack_int>(m);
    const lapack_int nn = static_cast<lapack_int>(n);

    // col-major view b = A^T (n x m); gram = b^T b = A A^T
    std::vector<double> gram(m * m);
    cblas_dsyrk(CblasColMajor, CblasLower, CblasTrans, mm, nn, 1.0, a.data(), nn, 0.0, gram.data(),
                mm);
    std::vector<double> evals(m);
    check_lapack(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', mm, gram.data(), mm, evals.data()),
                 "dsyevd");
    const double lam_max = evals[m - 1];
    if (lam_max <= 0.0 || evals[0] < rank_tol * rank_tol * lam_max)
        throw RankDeficient("svd_orthogonalize: rank-deficient Gram spectrum");

    // K = V diag(1/sigma) V^T
    std::vector<double> vs(gram);
    for (std::size_t j = 0; j < m; ++j) {
        const double inv = 1.0 / std::sqrt(evals[j]);
        double* col = vs.data() + j * m;
        for (std::size_t i = 0; i < m; ++i) col[i] *= inv;
    }
    std::vector<double> k(m * m);
    cblas_dgemm(CblasColMajor, CblasNoTrans, CblasTrans, mm, mm, mm, 1.0, vs.data(), mm,
                gram.data(), mm, 0.0, k.data(), mm);
    vs.clear();
    vs.shrink_to_fit();
    gram.clear();
    gram.shrink_to_fit();

    std::vector<double> out(n * m);
    cblas_dgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, nn, mm, mm, 1.0, a.data(), nn, k.data(),
                mm, 0.0, out.data(), nn);
    a.clear();
    a.shrink_to_fit();

    for (int iter = 0; iter < 6; ++iter) {
        cblas_dsyrk(CblasColMajor, CblasLower, CblasTrans, mm, nn, 1.0, out.data(), nn, 0.0,
                    k.data(), mm);
        double dev = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = j; i < m; ++i) {
                const double target = i == j ? 1.0 : 0.0;
                dev = std::max(dev, std::abs(k[j * m + i] - target));
            }
        if (dev < 1e-13) break;
        // H = (3I - G)/2, using the lower triangle computed above
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = j; i < m; ++i) {
                const double h = ((i == j ? 3.0 : 0.0) - k[j * m + i]) * 0.5;
                k[j * m + i] = h;
                k[i * m + j] = h;
            }
        }
        std::vector<double> next(n * m);
        cblas_dgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, nn, mm, mm, 1.0, out.data(), nn,
                    k.data(), mm, 0.0, next.data(), nn);
        out.swap(next);
    }
    return out;
}

}  // namespace

std::vector<double> orthonormal_rows(std::vector<double>&& a, std::size_t m, std::size_t n,
                                     double rank_tol) {
    if (m == 0 || n == 0 || m > n)
        throw InvalidShape("orthonormal_rows: need 1 <= m <= n, got " + std::to_string(m) + "x" +
                           std::to_string(n));
    if (dgesdd_footprint_bytes(m, n) <= kDgesddByteCap)
        return polar_dgesdd(std::move(a), m, n, rank_tol);
    return polar_gram(std::move(a), m, n, rank_tol);
}

std::vector<double> lstsq_min_norm(const std::vector<double>& a, std::size_t m, std::size_t n,
                                   const std::vector<double>& b, double rcond) {
    if (b.size() != m)
        throw DimensionMismatch("lstsq_min_norm: rhs length " + std::to_string(b.size()) +
                                " != rows " + std::to_string(m));
    // dgelsd destroys its inputs; work on copies. The solution of the
    // overdetermined transpose problem is not what we want, so the matrix
    // goes in as a genuine col-major copy of A.
    std::vector<double> acm(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) acm[j * m + i] = a[i * n + j];
    const std::size_t ldb = std::max(m, n);
    std::vector<double> rhs(ldb, 0.0);
    std::copy(b.begin(), b.end(), rhs.begin());
    std::vector<double> s(std::min(m, n));
    lapack_int rank = 0;
    check_lapack(LAPACKE_dgelsd(LAPACK_COL_MAJOR, static_cast<lapack_int>(m),
                                static_cast<lapack_int>(n), 1, acm.data(),
                                static_cast<lapack_int>(m), rhs.data(),
                                static_cast<lapack_int>(ldb), s.data(), rcond, &rank),
                 "dgelsd");
    rhs.resize(n);
    return rhs;
}

}  // namespace asvd::linalg
