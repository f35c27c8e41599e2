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

#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

/// Symplectic tableau: the images of X_i and Z_i under conjugation by some
/// Clifford unitary, signs included. A tableau determines the unitary up to
/// global phase.
struct Tableau {
    size_t num_qubits = 0;
    std::vector<SignedPauli> x_images;
    std::vector<SignedPauli> z_images;

    static Tableau identity(size_t n);

    /// True iff the images reproduce the commutation relations of the source
    /// generators: [image(X_i), image(Z_i)] anticommute, all other pairs
    /// commute. This implies the rows span the full Pauli group.
    bool is_valid() const;

    bool operator==(const Tableau &) const = default;
};

/// Conjugates every generator through the circuit. O(n * |gates|).
Tableau tableau_from_circuit(const CliffordCircuit &c);

/// Synthesizes a circuit whose action equals the tableau's, signs included.
/// Emits O(n^2) gates. Throws StructureError when the tableau is invalid.
CliffordCircuit circuit_from_tableau(const Tableau &t);

/// Builds a Clifford circuit D with D g_i D-dagger = +Z_i for each supplied
/// generator, i = 0..m-1. The generators must be mutually commuting and
/// independent (InvalidGroupError otherwise) and m must not exceed n.
CliffordCircuit build_diagonalizer(const std::vector<SignedPauli> &gens, size_t n);

}  // namespace stablearn

