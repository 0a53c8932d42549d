#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcolor/gates.hpp"

namespace qcolor {

// Cartesian expectation values of a single qubit. Pure states lie on the
// unit sphere; z = P(|0>) - P(|1>).
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Dense statevector over 2^n_qubits complex amplitudes.
//
// Bit convention: basis index bit (n_qubits - 1 - q) holds qubit q, so
// qubit 0 is the leftmost label in ket notation and |RGB> reads
// left-to-right as (R, G, B).
class Statevector {
  public:
    static constexpr std::size_t kMaxQubits = 24;

    // Constructs |0...0>. Throws CapacityError outside [1, kMaxQubits].
    explicit Statevector(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }

    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> amplitudes() { return amps_; }

    std::complex<double> amplitude(std::uint64_t basis_index) const {
        return amps_[basis_index];
    }

    // In-place gate application. Throws IndexError on invalid targets.
    void apply(const Gate& gate);

    // Applies gates in listed order. Throws ShapeError when the circuit
    // width differs from the register width.
    void apply(const Circuit& circuit);

    double norm_squared() const;

    // Basis-index bit position for a qubit label.
    std::uint64_t mask_for_qubit(std::size_t qubit) const {
        return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
    }

    bool operator==(const Statevector&) const = default;

  private:
    std::size_t n_qubits_;
    std::vector<std::complex<double>> amps_;
};

Statevector zero_state(std::size_t n_qubits);

Statevector apply_gate(Statevector state, const Gate& gate);

Statevector apply_circuit(Statevector state, const Circuit& circuit);

// Single-qubit states only; throws ShapeError otherwise.
// RY(theta)|0> maps to (sin theta, 0, cos theta).
BlochVector bloch_vector(const Statevector& state);

} // namespace qcolor
