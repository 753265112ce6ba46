// Runtime variant selection. The best available table is resolved once;
// force_isa exists so equivalence tests can pin a specific variant.

#include "asvd/kernels.hpp"

#include <atomic>

#include "kernels_internal.hpp"

namespace asvd::kernels {

namespace {

using detail::KernelTable;

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &detail::scalar_table;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
                return &detail::avx2_table;
#endif
            return nullptr;
        case Isa::neon:
#if defined(__aarch64__)
            return &detail::neon_table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

Isa detect_best() {
#if defined(__x86_64__) || defined(_M_X64)
    if (table_for(Isa::avx2)) return Isa::avx2;
#endif
#if defined(__aarch64__)
    return Isa::neon;
#endif
    return Isa::scalar;
}

struct Active {
    std::atomic<const KernelTable*> table;
    std::atomic<Isa> isa;
    Active() {
        Isa best = detect_best();
        isa.store(best);
        table.store(table_for(best) ? table_for(best) : &detail::scalar_table);
    }
};

Active& active() {
    static Active a;
    return a;
}

const KernelTable& tab() { return *active().table.load(std::memory_order_relaxed); }

}  // namespace

const char* isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

Isa active_isa() noexcept { return active().isa.load(std::memory_order_relaxed); }

bool force_isa(Isa isa) noexcept {
    const KernelTable* t = table_for(isa);
    if (!t) return false;
    active().table.store(t);
    active().isa.store(isa);
    return true;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return tab().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

double sum(std::span<const double> a) noexcept { return tab().sum(a.data(), a.size()); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    tab().axpy(alpha, x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

void scale_shift(std::span<const double> x, double alpha, double beta,
                 std::span<double> out) noexcept {
    tab().scale_shift(x.data(), alpha, beta, out.data(), x.size() < out.size() ? x.size() : out.size());
}

std::pair<double, double> minmax(std::span<const double> a) noexcept {
    double lo = 0.0, hi = 0.0;
    tab().minmax(a.data(), a.size(), &lo, &hi);
    return {lo, hi};
}

}  // namespace asvd::kernels
