// NEON kernels, 2 doubles per register. aarch64 guarantees NEON, so this
// variant is installed unconditionally on that architecture.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace asvd::kernels::detail {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double total = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) total += a[i] * b[i];
    return total;
}

double sum_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(a + i));
    double total = vaddvq_f64(acc);
    for (; i < n; ++i) total += a[i];
    return total;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_shift_neon(const double* x, double alpha, double beta, double* out, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    const float64x2_t vb = vdupq_n_f64(beta);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vfmaq_f64(vb, va, vld1q_f64(x + i)));
    for (; i < n; ++i) out[i] = alpha * x[i] + beta;
}

void minmax_neon(const double* a, std::size_t n, double* lo, double* hi) {
    std::size_t i = 0;
    double mn, mx;
    if (n >= 2) {
        float64x2_t vmn = vld1q_f64(a);
        float64x2_t vmx = vmn;
        for (i = 2; i + 2 <= n; i += 2) {
            float64x2_t v = vld1q_f64(a + i);
            vmn = vminq_f64(vmn, v);
            vmx = vmaxq_f64(vmx, v);
        }
        mn = vminvq_f64(vmn);
        mx = vmaxvq_f64(vmx);
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

const KernelTable neon_table = {
    dot_neon, sum_neon, axpy_neon, scale_shift_neon, minmax_neon,
};

}  // namespace asvd::kernels::detail

#endif  // aarch64
