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

#include "stablearn/pauli.hpp"

namespace stablearn {

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t q = 0; q < num_qubits; q++) {
        if (x.get(q) || z.get(q)) {
            w++;
        }
    }
    return w;
}

char PauliString::letter(size_t q) const {
    bool xb = x.get(q);
    bool zb = z.get(q);
    if (xb && zb) {
        return 'Y';
    }
    if (xb) {
        return 'X';
    }
    if (zb) {
        return 'Z';
    }
    return 'I';
}

std::string PauliString::letters() const {
    std::string s;
    s.reserve(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        s.push_back(letter(q));
    }
    return s;
}

bool same_letters(const PauliString &a, const PauliString &b) {
    return a.num_qubits == b.num_qubits && a.x == b.x && a.z == b.z;
}

PauliString mul(const PauliString &a, const PauliString &b) {
    if (a.num_qubits != b.num_qubits) {
        throw DimensionError("pauli mul: qubit count mismatch");
    }
    PauliString out(a.num_qubits);
    out.x = a.x;
    out.x ^= b.x;
    out.z = a.z;
    out.z ^= b.z;
    // Per-qubit phase of Hermitian letter products, summed mod 4:
    //   s(a)s(b) = i^(xa.za + xb.zb + 2 za.xb - xo.zo) s(a^b), o = output bits.
    size_t c = BitVec::and_popcount(a.x, a.z) + BitVec::and_popcount(b.x, b.z) +
               2 * BitVec::and_popcount(a.z, b.x) + 3 * BitVec::and_popcount(out.x, out.z);
    out.phase_exp = static_cast<uint8_t>((a.phase_exp + b.phase_exp + c) & 3);
    return out;
}

bool commutes(const PauliString &a, const PauliString &b) {
    return symplectic_form(a, b) == 0;
}

int symplectic_form(const PauliString &a, const PauliString &b) {
    if (a.num_qubits != b.num_qubits) {
        throw DimensionError("symplectic form: qubit count mismatch");
    }
    return static_cast<int>((BitVec::and_popcount(a.x, b.z) + BitVec::and_popcount(a.z, b.x)) & 1);
}

BitVec to_symplectic(const PauliString &p) {
    BitVec v(2 * p.num_qubits);
    for (size_t q = 0; q < p.num_qubits; q++) {
        if (p.x.get(q)) {
            v.set(q, true);
        }
        if (p.z.get(q)) {
            v.set(p.num_qubits + q, true);
        }
    }
    return v;
}

PauliString from_symplectic(const BitVec &v) {
    if (v.size() % 2 != 0) {
        throw FormatError("symplectic vector must have even length");
    }
    size_t n = v.size() / 2;
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        if (v.get(q)) {
            p.x.set(q, true);
        }
        if (v.get(n + q)) {
            p.z.set(q, true);
        }
    }
    return p;
}

PauliString pauli_from_text(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        phase = text.front() == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw FormatError("empty Pauli string");
    }
    PauliString p(text.size());
    p.phase_exp = phase;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                p.x.set(q, true);
                break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                break;
            case 'Z':
                p.z.set(q, true);
                break;
            default:
                throw FormatError(std::string("invalid Pauli letter '") + text[q] + "'");
        }
    }
    return p;
}

SignedPauli::SignedPauli(const PauliString &p, int extra_sign) {
    if (p.phase_exp % 2 != 0) {
        throw FormatError("SignedPauli requires a Hermitian operator (even phase)");
    }
    if (extra_sign != 1 && extra_sign != -1) {
        throw FormatError("SignedPauli sign must be +1 or -1");
    }
    pauli = p.quotient();
    sign = (p.phase_exp == 2) ? -extra_sign : extra_sign;
}

SignedPauli mul(const SignedPauli &a, const SignedPauli &b) {
    PauliString p = mul(a.pauli, b.pauli);
    return SignedPauli(p, a.sign * b.sign);
}

std::string to_text(const SignedPauli &p) {
    return (p.sign > 0 ? "+" : "-") + p.pauli.letters();
}

SignedPauli signed_pauli_from_text(std::string_view text) {
    return SignedPauli(pauli_from_text(text));
}

uint64_t pack_letters(const PauliString &p) {
    if (p.num_qubits > 32) {
        throw ResourceError("pack_letters supports at most 32 qubits");
    }
    uint64_t xbits = 0;
    uint64_t zbits = 0;
    for (size_t q = 0; q < p.num_qubits; q++) {
        xbits |= static_cast<uint64_t>(p.x.get(q)) << q;
        zbits |= static_cast<uint64_t>(p.z.get(q)) << q;
    }
    return xbits | (zbits << p.num_qubits);
}

PauliString unpack_letters(uint64_t key, size_t n) {
    if (n > 32) {
        throw ResourceError("unpack_letters supports at most 32 qubits");
    }
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        if ((key >> q) & 1) {
            p.x.set(q, true);
        }
        if ((key >> (n + q)) & 1) {
            p.z.set(q, true);
        }
    }
    return p;
}

}  // namespace stablearn
