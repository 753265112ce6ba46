// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against.

#include "kernels_internal.hpp"

namespace asvd::kernels::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_shift_scalar(const double* x, double alpha, double beta, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i] + beta;
}

void minmax_scalar(const double* a, std::size_t n, double* lo, double* hi) {
    double mn = a[0], mx = a[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (a[i] < mn) mn = a[i];
        if (a[i] > mx) mx = a[i];
    }
    *lo = mn;
    *hi = mx;
}

}  // namespace

const KernelTable scalar_table = {
    dot_scalar, sum_scalar, axpy_scalar, scale_shift_scalar, minmax_scalar,
};

}  // namespace asvd::kernels::detail
