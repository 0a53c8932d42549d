#include "qcolor/kernels.hpp"

namespace qcolor::kernels::serial {

// Reference loops: walk every index, act when it is the low member of a
// pair (target bit clear) and all control bits are set.

void apply_1q(std::span<cplx> amps, std::uint64_t target_mask, std::uint64_t control_mask,
              const Mat2& u) {
    const std::uint64_t n = amps.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & target_mask) != 0) continue;
        if ((i & control_mask) != control_mask) continue;
        const std::uint64_t j = i | target_mask;
        const cplx a = amps[i];
        const cplx b = amps[j];
        amps[i] = u.u00 * a + u.u01 * b;
        amps[j] = u.u10 * a + u.u11 * b;
    }
}

void apply_swap(std::span<cplx> amps, std::uint64_t mask_a, std::uint64_t mask_b) {
    const std::uint64_t n = amps.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & mask_a) == 0 || (i & mask_b) != 0) continue;
        const std::uint64_t j = (i ^ mask_a) | mask_b;
        std::swap(amps[i], amps[j]);
    }
}

} // namespace qcolor::kernels::serial
