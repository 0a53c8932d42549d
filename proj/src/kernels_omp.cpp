#include "qcolor/kernels.hpp"

#include <cstdint>

namespace qcolor::kernels::omp {

namespace {
// Below this many index pairs the thread fork costs more than the loop;
// per-pixel circuits (<= 8 qubits) always stay serial.
constexpr std::uint64_t kParallelGrain = std::uint64_t{1} << 12;
} // namespace

void apply_1q(std::span<cplx> amps, std::uint64_t target_mask, std::uint64_t control_mask,
              const Mat2& u) {
    const std::int64_t half = static_cast<std::int64_t>(amps.size() >> 1);
    const std::uint64_t lo_mask = target_mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    cplx* const a = amps.data();

#pragma omp parallel for schedule(static) if (half >= static_cast<std::int64_t>(kParallelGrain))
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t uk = static_cast<std::uint64_t>(k);
        const std::uint64_t i0 = ((uk & hi_mask) << 1) | (uk & lo_mask);
        if ((i0 & control_mask) != control_mask) continue;
        const std::uint64_t i1 = i0 | target_mask;
        const cplx t0 = a[i0];
        const cplx t1 = a[i1];
        a[i0] = u.u00 * t0 + u.u01 * t1;
        a[i1] = u.u10 * t0 + u.u11 * t1;
    }
}

void apply_swap(std::span<cplx> amps, std::uint64_t mask_a, std::uint64_t mask_b) {
    const std::int64_t n = static_cast<std::int64_t>(amps.size());
    cplx* const a = amps.data();

    // Each pair is touched exactly once, from its (a=1, b=0) member.
#pragma omp parallel for schedule(static) if (n >= static_cast<std::int64_t>(kParallelGrain))
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t ui = static_cast<std::uint64_t>(i);
        if ((ui & mask_a) == 0 || (ui & mask_b) != 0) continue;
        const std::uint64_t j = (ui ^ mask_a) | mask_b;
        const cplx tmp = a[ui];
        a[ui] = a[j];
        a[j] = tmp;
    }
}

} // namespace qcolor::kernels::omp
