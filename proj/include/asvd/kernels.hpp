#pragma once

// Data-parallel inner loops used by the measurement and reconstruction
// paths. Every kernel has a scalar reference implementation and SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected once at runtime
// from CPU capabilities. Variants are equivalence-tested against the
// scalar reference; reductions may differ from it only by floating-point
// summation order.

#include <cstddef>
#include <span>
#include <utility>

namespace asvd::kernels {

enum class Isa {
    scalar,
    avx2,
    neon,
};

const char* isa_name(Isa isa) noexcept;

// The variant selected for this process (never changes unless forced).
Isa active_isa() noexcept;

// Returns true if the requested variant is available on this CPU and was
// installed. Used by tests to compare variants; not meant for production
// configuration.
bool force_isa(Isa isa) noexcept;

// sum_i a[i] * b[i]
double dot(std::span<const double> a, std::span<const double> b) noexcept;

// sum_i a[i]
double sum(std::span<const double> a) noexcept;

// y[i] += alpha * x[i]
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;

// out[i] = alpha * x[i] + beta  (out may alias x)
void scale_shift(std::span<const double> x, double alpha, double beta,
                 std::span<double> out) noexcept;

// {min, max} over a; a must be non-empty
std::pair<double, double> minmax(std::span<const double> a) noexcept;

}  // namespace asvd::kernels
