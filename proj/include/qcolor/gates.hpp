#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qcolor {

// The fixed gate set. Every member has a closed-form inverse inside the set,
// which keeps every circuit built from it restorable.
enum class GateKind { RY, RX, RZ, X, H, CNOT, CCNOT, SWAP, CRY };

const char* gate_kind_name(GateKind kind);

// Number of qubit operands the kind takes (controls included).
std::size_t gate_arity(GateKind kind);

// True for kinds that carry a rotation angle (RY, RX, RZ, CRY).
bool gate_has_angle(GateKind kind);

// One gate application. Operand order: controls first, target last
// (CNOT: control, target; CCNOT: control, control, target; CRY: control,
// target). SWAP operands are interchangeable.
struct Gate {
    GateKind kind;
    std::vector<std::size_t> targets;
    double angle = 0.0;

    static Gate ry(std::size_t q, double theta) { return {GateKind::RY, {q}, theta}; }
    static Gate rx(std::size_t q, double theta) { return {GateKind::RX, {q}, theta}; }
    static Gate rz(std::size_t q, double theta) { return {GateKind::RZ, {q}, theta}; }
    static Gate x(std::size_t q) { return {GateKind::X, {q}, 0.0}; }
    static Gate h(std::size_t q) { return {GateKind::H, {q}, 0.0}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}, 0.0};
    }
    static Gate ccnot(std::size_t control_a, std::size_t control_b, std::size_t target) {
        return {GateKind::CCNOT, {control_a, control_b, target}, 0.0};
    }
    static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, {a, b}, 0.0}; }
    static Gate cry(std::size_t control, std::size_t target, double theta) {
        return {GateKind::CRY, {control, target}, theta};
    }

    // Rotations invert by negating the angle; the rest are self-inverse.
    Gate inverse() const;

    bool operator==(const Gate&) const = default;
};

// Validates operand count, distinctness and range against n_qubits.
// Throws IndexError on violation.
void validate_gate(const Gate& gate, std::size_t n_qubits);

// An ordered gate sequence over a fixed register width.
struct Circuit {
    std::size_t n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(std::size_t n) : n_qubits(n) {}

    // Validates the gate against n_qubits before storing it.
    void append(Gate gate);

    // Appends every gate of `other` (must have the same width).
    void append(const Circuit& other);

    bool operator==(const Circuit&) const = default;
};

// Gates reversed in order, each replaced by its inverse.
Circuit inverse_circuit(const Circuit& circuit);

} // namespace qcolor
