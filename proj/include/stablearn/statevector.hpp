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

#include <complex>
#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

/// Default qubit cap for dense simulation.
inline constexpr size_t kDefaultMaxQubits = 12;

/// Qubit cap for materializing all 4^n Pauli expectations at once.
inline constexpr size_t kMaxDenseTableQubits = 10;

/// Dense amplitudes in the computational basis. Qubit j corresponds to bit j
/// of the array index (index 0 is |0...0>).
struct StateVector {
    size_t num_qubits = 0;
    std::vector<std::complex<double>> amps;

    StateVector() = default;
    StateVector(size_t n, std::vector<std::complex<double>> a);
};

StateVector zero_state(size_t n);

/// Applies one gate in place, O(2^n).
void apply_gate(StateVector &psi, const Gate &g);

/// Runs the circuit on |0^n>. Throws ResourceError when n > max_qubits.
StateVector run_circuit(const DopedCircuit &c, size_t max_qubits = kDefaultMaxQubits);
StateVector run_circuit(const CliffordCircuit &c, size_t max_qubits = kDefaultMaxQubits);

/// Elementwise complex conjugate.
StateVector conjugate_state(const StateVector &psi);

double state_norm(const StateVector &psi);

/// Squared l2 distance accumulated exactly; used for conjugate checks.
double state_distance(const StateVector &a, const StateVector &b);

/// Re tr(P |psi><psi|), exact up to float rounding, O(2^n). The phase_exp of
/// P is honored; for Hermitian inputs (even phase) the value is the full
/// expectation.
double pauli_expectation(const StateVector &psi, const PauliString &p);

/// All 4^n expectations of the Hermitian words in one pass: entry
/// (z_mask << n) | x_mask holds tr(sigma_{x,z} |psi><psi|). Runs in
/// O(4^n n) via a Walsh-Hadamard transform per x_mask. Throws ResourceError
/// when n > kMaxDenseTableQubits.
std::vector<double> all_pauli_expectations(const StateVector &psi);

/// In-place unnormalized Walsh-Hadamard transform over n index bits:
/// g'[z] = sum_c (-1)^{popcount(c & z)} g[c].
void walsh_hadamard(std::vector<std::complex<double>> &g, size_t n);

}  // namespace stablearn
