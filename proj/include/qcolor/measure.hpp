#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qcolor/statevector.hpp"

namespace qcolor {

// Per-basis-state probabilities, exact or estimated from shots.
// probs holds only nonzero entries, keyed by basis index. Sampled
// estimates also keep the raw counts (counts sum to shots exactly).
struct ProbEstimate {
    enum class Source { exact, sampled };

    std::size_t n_qubits = 0;
    std::map<std::uint64_t, double> probs;
    std::map<std::uint64_t, std::uint64_t> counts;
    Source source = Source::exact;
    std::uint64_t shots = 0;
    std::optional<std::uint64_t> seed;

    double prob(std::uint64_t basis_index) const {
        auto it = probs.find(basis_index);
        return it == probs.end() ? 0.0 : it->second;
    }
};

// probs[k] = |amplitudes[k]|^2.
ProbEstimate exact_probabilities(const Statevector& state);

// Draws `shots` independent basis-state samples from the exact distribution
// of `state` with a generator seeded by `seed`; probs[k] = count_k / shots.
// Identical (state, shots, seed) gives identical output, bit for bit.
// Throws ArgumentError when shots == 0.
ProbEstimate sample_shots(const Statevector& state, std::uint64_t shots, std::uint64_t seed);

// Sum of probabilities over basis states whose bit for `qubit` is 0
// (bit n_qubits - 1 - qubit of the basis index). Throws IndexError when
// qubit >= est.n_qubits.
double marginal_prob0(const ProbEstimate& est, std::size_t qubit);

// Same, with the caller-supplied width checked against the estimate.
// Throws ShapeError on mismatch.
double marginal_prob0(const ProbEstimate& est, std::size_t qubit, std::size_t n_qubits);

} // namespace qcolor
