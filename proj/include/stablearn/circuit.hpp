// Copyright 2025 The stablearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stablearn/pauli.hpp"

namespace stablearn {

/// Gate kinds supported by the toolkit. All but T / T_DAG are Clifford.
enum class GateKind : uint8_t {
    kH,
    kS,
    kSDag,
    kX,
    kZ,
    kCNOT,
    kCZ,
    kT,
    kTDag,
};

bool is_two_qubit(GateKind kind);
bool is_clifford_gate(GateKind kind);

/// Canonical text mnemonic ("H", "SDG", "CNOT", ...).
const char *gate_name(GateKind kind);

/// A single gate application. q1 is meaningful only for two-qubit kinds.
struct Gate {
    GateKind kind;
    uint32_t q0 = 0;
    uint32_t q1 = 0;

    bool operator==(const Gate &) const = default;
};

/// An ordered gate list restricted to Clifford kinds.
///
/// The gate at index 0 acts first. append() rejects T / T_DAG and validates
/// qubit indices, so a constructed instance always satisfies the type's
/// invariant.
struct CliffordCircuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;

    CliffordCircuit() = default;
    explicit CliffordCircuit(size_t n) : num_qubits(n) {}

    void append(GateKind kind, uint32_t q0);
    void append(GateKind kind, uint32_t q0, uint32_t q1);

    bool operator==(const CliffordCircuit &) const = default;
};

/// An ordered gate list over the full gate set {H, S, SDG, X, Z, CNOT, CZ,
/// T, TDG}. The doping level t_count() is the number of T / T_DAG gates.
struct DopedCircuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;

    DopedCircuit() = default;
    explicit DopedCircuit(size_t n) : num_qubits(n) {}

    void append(GateKind kind, uint32_t q0);
    void append(GateKind kind, uint32_t q0, uint32_t q1);

    size_t t_count() const;
    bool is_clifford() const { return t_count() == 0; }

    bool operator==(const DopedCircuit &) const = default;
};

DopedCircuit to_doped(const CliffordCircuit &c);

/// Throws UnsupportedGateError when the circuit contains T / T_DAG.
CliffordCircuit to_clifford(const DopedCircuit &c);

/// Reversed gate list with every gate replaced by its inverse.
CliffordCircuit inverse(const CliffordCircuit &c);

enum class Direction {
    kForward,  ///< returns C P C-dagger
    kInverse,  ///< returns C-dagger P C
};

/// Conjugates a signed Pauli through a Clifford circuit, tracking the sign
/// exactly. Throws DimensionError when qubit counts disagree.
SignedPauli conjugate_pauli(const CliffordCircuit &c, const SignedPauli &p, Direction dir);

/// Single-gate forward conjugation g P g-dagger applied in place to a
/// sign-tracked Pauli word. Building block for tableau manipulation.
void conjugate_pauli_inplace(const Gate &g, BitVec &x, BitVec &z, int &sign);

/// Gate-wise complex conjugate: S <-> SDG, T <-> TDG, real gates unchanged.
/// The result prepares the conjugate state elementwise in the computational
/// basis: if C|0..0> has amplitudes a_k, the output circuit yields conj(a_k).
DopedCircuit conjugate_circuit(const DopedCircuit &c);

/// Parses the text format: one gate per line ("H 0", "CNOT 0 1"), comments
/// after '#'. A "# qubits N" comment raises the qubit count above the largest
/// index used, letting idle qubits round-trip. Throws FormatError on
/// malformed lines and UnsupportedGateError on unknown mnemonics.
DopedCircuit parse_circuit(const std::string &text);

/// Deterministic serialization accepted verbatim by parse_circuit. Starts
/// with a "# qubits N" line.
std::string serialize_circuit(const DopedCircuit &c);
std::string serialize_circuit(const CliffordCircuit &c);

}  // namespace stablearn

