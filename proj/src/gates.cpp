#include "qcolor/gates.hpp"

#include <algorithm>

#include "qcolor/errors.hpp"

namespace qcolor {

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::RY: return "RY";
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCNOT: return "CCNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CRY: return "CRY";
    }
    return "?";
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
    case GateKind::RY:
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::X:
    case GateKind::H: return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CRY: return 2;
    case GateKind::CCNOT: return 3;
    }
    return 0;
}

bool gate_has_angle(GateKind kind) {
    switch (kind) {
    case GateKind::RY:
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::CRY: return true;
    default: return false;
    }
}

Gate Gate::inverse() const {
    Gate inv = *this;
    if (gate_has_angle(kind)) {
        inv.angle = -angle;
    }
    return inv;
}

void validate_gate(const Gate& gate, std::size_t n_qubits) {
    const std::size_t arity = gate_arity(gate.kind);
    if (gate.targets.size() != arity) {
        throw IndexError(std::string(gate_kind_name(gate.kind)) + " takes " +
                         std::to_string(arity) + " qubit(s), got " +
                         std::to_string(gate.targets.size()));
    }
    for (std::size_t q : gate.targets) {
        if (q >= n_qubits) {
            throw IndexError(std::string(gate_kind_name(gate.kind)) + " target " +
                             std::to_string(q) + " out of range for " +
                             std::to_string(n_qubits) + " qubit(s)");
        }
    }
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
        for (std::size_t j = i + 1; j < gate.targets.size(); ++j) {
            if (gate.targets[i] == gate.targets[j]) {
                throw IndexError(std::string(gate_kind_name(gate.kind)) +
                                 " targets must be distinct, got qubit " +
                                 std::to_string(gate.targets[i]) + " twice");
            }
        }
    }
}

void Circuit::append(Gate gate) {
    validate_gate(gate, n_qubits);
    gates.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
    if (other.n_qubits != n_qubits) {
        throw ShapeError("cannot append a " + std::to_string(other.n_qubits) +
                         "-qubit circuit to a " + std::to_string(n_qubits) + "-qubit circuit");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit inverse_circuit(const Circuit& circuit) {
    Circuit inv(circuit.n_qubits);
    inv.gates.reserve(circuit.gates.size());
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        inv.gates.push_back(it->inverse());
    }
    return inv;
}

} // namespace qcolor
