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
#include <string_view>

#include "stablearn/bits.hpp"

namespace stablearn {

/**
 * PauliString: an n-qubit Pauli operator i^phase_exp * W, where W is the
 * Hermitian word whose letter on qubit j is determined by the bit pair
 * (x_j, z_j): 00 -> I, 10 -> X, 01 -> Z, 11 -> Y.
 *
 * phase_exp is kept mod 4. Quotient-group identity (the group with phases
 * ignored) is `same_letters`; operator== is strict and includes the phase.
 */
struct PauliString {
    size_t num_qubits = 0;
    BitVec x;
    BitVec z;
    uint8_t phase_exp = 0;

    PauliString() = default;
    explicit PauliString(size_t n) : num_qubits(n), x(n), z(n) {}

    static PauliString identity(size_t n) {
        return PauliString(n);
    }

    bool operator==(const PauliString &other) const = default;

    bool is_identity_letters() const {
        return !x.any() && !z.any();
    }

    /// Number of qubits carrying a non-identity letter.
    size_t weight() const;

    /// Letter on qubit q as one of 'I', 'X', 'Y', 'Z'.
    char letter(size_t q) const;

    /// Bare letters, e.g. "XIZY" (no sign, phase ignored).
    std::string letters() const;

    /// Copy with phase_exp forced to 0 (the canonical quotient representative).
    PauliString quotient() const {
        PauliString p = *this;
        p.phase_exp = 0;
        return p;
    }
};

/// Quotient-group equality: same letters, phase ignored.
bool same_letters(const PauliString &a, const PauliString &b);

/// Exact operator product, with the i^k bookkeeping of Hermitian letters.
PauliString mul(const PauliString &a, const PauliString &b);

/// True iff the operators commute (phases are irrelevant to this).
bool commutes(const PauliString &a, const PauliString &b);

/// Symplectic form <a,b> = x_a.z_b + z_a.x_b mod 2; 0 iff commuting.
int symplectic_form(const PauliString &a, const PauliString &b);

/// Pack into a length-2n F2 vector, x part first then z part. Phase is dropped.
BitVec to_symplectic(const PauliString &p);

/// Inverse of to_symplectic; the result has phase_exp = 0.
PauliString from_symplectic(const BitVec &v);

/// Strict parse of "[+|-]L...L" with letters in {I,X,Y,Z}; '-' maps to phase_exp 2.
PauliString pauli_from_text(std::string_view text);

/**
 * SignedPauli: a Hermitian Pauli with an explicit +/-1 sign and a phase-free
 * word. This is the shape stabilizer generators take.
 */
struct SignedPauli {
    PauliString pauli;
    int sign = +1;

    SignedPauli() = default;

    /// Folds an even phase_exp into the sign; odd phases (non-Hermitian) are rejected.
    explicit SignedPauli(const PauliString &p, int extra_sign = +1);

    bool operator==(const SignedPauli &other) const = default;
};

SignedPauli mul(const SignedPauli &a, const SignedPauli &b);

/// Text form with a mandatory sign, e.g. "+XIZY".
std::string to_text(const SignedPauli &p);

SignedPauli signed_pauli_from_text(std::string_view text);

/// Packs letters into an integer key (z bits high, x bits low). Requires n <= 32.
uint64_t pack_letters(const PauliString &p);

/// Inverse of pack_letters.
PauliString unpack_letters(uint64_t key, size_t n);

}  // namespace stablearn
