// AVX2/FMA kernels, 4 doubles per register. This file is compiled with
// -mavx2 -mfma and must only be reached after a runtime CPU check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace asvd::kernels::detail {

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double total = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
    for (; i < n; ++i) total += a[i] * b[i];
    return total;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    double total = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) total += a[i];
    return total;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
    }
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_shift_avx2(const double* x, double alpha, double beta, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vb));
    for (; i < n; ++i) out[i] = alpha * x[i] + beta;
}

void minmax_avx2(const double* a, std::size_t n, double* lo, double* hi) {
    std::size_t i = 0;
    double mn, mx;
    if (n >= 4) {
        __m256d vmn = _mm256_loadu_pd(a);
        __m256d vmx = vmn;
        for (i = 4; i + 4 <= n; i += 4) {
            __m256d v = _mm256_loadu_pd(a + i);
            vmn = _mm256_min_pd(vmn, v);
            vmx = _mm256_max_pd(vmx, v);
        }
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, vmn);
        mn = tmp[0];
        for (int k = 1; k < 4; ++k)
            if (tmp[k] < mn) mn = tmp[k];
        _mm256_store_pd(tmp, vmx);
        mx = tmp[0];
        for (int k = 1; k < 4; ++k)
            if (tmp[k] > mx) mx = tmp[k];
    } else {
        mn = mx = a[0];
        i = 1;
    }
    for (; i < n; ++i) {
        if (a[i] < mn) mn = a[i];
        if (a[i] > mx) mx = a[i];
    }
    *lo = mn;
    *hi = mx;
}

}  // namespace

const KernelTable avx2_table = {
    dot_avx2, sum_avx2, axpy_avx2, scale_shift_avx2, minmax_avx2,
};

}  // namespace asvd::kernels::detail

#endif  // x86-64
