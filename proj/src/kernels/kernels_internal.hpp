#pragma once

#include <cstddef>

namespace asvd::kernels::detail {

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale_shift)(const double*, double, double, double*, std::size_t);
    void (*minmax)(const double*, std::size_t, double*, double*);
};

extern const KernelTable scalar_table;

#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif

}  // namespace asvd::kernels::detail
