#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace qcolor::kernels {

using cplx = std::complex<double>;

// Row-major 2x2 unitary.
struct Mat2 {
    cplx u00, u01, u10, u11;
};

// All kernels address qubits by their bit position in the basis index
// (bit 0 = least significant). Masks are single set bits except
// control_mask, which may carry zero, one or two control bits.
//
// serial:: holds the straightforward reference loops; omp:: holds the
// OpenMP kernels used by Statevector. Both produce bit-identical results
// because each amplitude pair is updated independently with the same
// arithmetic, so the serial versions double as the test oracle for the
// parallel ones.

namespace serial {

// amps[i0], amps[i1] <- u * (amps[i0], amps[i1]) for every index pair
// differing in target_mask, restricted to indices with all control bits set.
void apply_1q(std::span<cplx> amps, std::uint64_t target_mask, std::uint64_t control_mask,
              const Mat2& u);

// Exchanges amplitudes of indices that differ in exactly the two mask bits.
void apply_swap(std::span<cplx> amps, std::uint64_t mask_a, std::uint64_t mask_b);

} // namespace serial

namespace omp {

void apply_1q(std::span<cplx> amps, std::uint64_t target_mask, std::uint64_t control_mask,
              const Mat2& u);

void apply_swap(std::span<cplx> amps, std::uint64_t mask_a, std::uint64_t mask_b);

} // namespace omp

} // namespace qcolor::kernels
