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

#include "stablearn/tableau.hpp"

#include <algorithm>

#include "stablearn/errors.hpp"
#include "stablearn/f2.hpp"

namespace stablearn {

namespace {

SignedPauli single_letter(size_t n, size_t q, bool x_bit, bool z_bit) {
    PauliString w = PauliString::identity(n);
    w.x.set(q, x_bit);
    w.z.set(q, z_bit);
    return SignedPauli(w);
}

void apply_to_row(const Gate &g, SignedPauli &row) {
    conjugate_pauli_inplace(g, row.pauli.x, row.pauli.z, row.sign);
}

/// Shared reduction: drives `r` to +Z_i by appending gates via `emit`.
/// Touches qubits >= i with H/S/CNOT; positions below i are only ever
/// targets of CZ from the pivot, which fixes every Z_k exactly. `emit` must
/// both record the gate and conjugate `r` by it.
template <typename Emit>
void reduce_row_to_z(SignedPauli &r, size_t i, size_t n, Emit &&emit) {
    PauliString target = PauliString::identity(n);
    target.z.set(i, true);
    if (r.pauli == target && r.sign == +1) {
        return;
    }
    for (size_t j = 0; j < i; j++) {
        if (r.pauli.x.get(j)) {
            throw ConsistencyError("reduce_row_to_z: X support below current pivot");
        }
    }
    for (size_t j = i; j < n; j++) {
        if (r.pauli.z.get(j)) {
            emit(Gate{r.pauli.x.get(j) ? GateKind::kS : GateKind::kH, static_cast<uint32_t>(j), 0});
        }
    }
    size_t pivot = r.pauli.x.first_set();
    if (pivot == BitVec::npos) {
        throw ConsistencyError("reduce_row_to_z: no X support after conversion");
    }
    for (size_t q = pivot + 1; q < n; q++) {
        if (r.pauli.x.get(q)) {
            emit(Gate{GateKind::kCNOT, static_cast<uint32_t>(pivot), static_cast<uint32_t>(q)});
        }
    }
    for (size_t k = 0; k < n; k++) {
        if (r.pauli.z.get(k)) {
            emit(Gate{GateKind::kCZ, static_cast<uint32_t>(pivot), static_cast<uint32_t>(k)});
        }
    }
    if (pivot != i) {
        emit(Gate{GateKind::kCNOT, static_cast<uint32_t>(i), static_cast<uint32_t>(pivot)});
        emit(Gate{GateKind::kCNOT, static_cast<uint32_t>(pivot), static_cast<uint32_t>(i)});
        emit(Gate{GateKind::kCNOT, static_cast<uint32_t>(i), static_cast<uint32_t>(pivot)});
    }
    emit(Gate{GateKind::kH, static_cast<uint32_t>(i), 0});
    if (r.sign < 0) {
        emit(Gate{GateKind::kX, static_cast<uint32_t>(i), 0});
    }
    if (!(r.pauli == target) || r.sign != +1) {
        throw ConsistencyError("reduce_row_to_z: reduction failed");
    }
}

}  // namespace

Tableau Tableau::identity(size_t n) {
    Tableau t;
    t.num_qubits = n;
    t.x_images.reserve(n);
    t.z_images.reserve(n);
    for (size_t i = 0; i < n; i++) {
        t.x_images.push_back(single_letter(n, i, true, false));
        t.z_images.push_back(single_letter(n, i, false, true));
    }
    return t;
}

bool Tableau::is_valid() const {
    size_t n = num_qubits;
    if (x_images.size() != n || z_images.size() != n) {
        return false;
    }
    for (size_t i = 0; i < n; i++) {
        if (x_images[i].pauli.num_qubits != n || z_images[i].pauli.num_qubits != n) {
            return false;
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (commutes(x_images[i].pauli, z_images[j].pauli) != (i != j)) {
                return false;
            }
            if (!commutes(x_images[i].pauli, x_images[j].pauli) ||
                !commutes(z_images[i].pauli, z_images[j].pauli)) {
                return false;
            }
        }
    }
    return true;
}

Tableau tableau_from_circuit(const CliffordCircuit &c) {
    Tableau t = Tableau::identity(c.num_qubits);
    for (const Gate &g : c.gates) {
        for (SignedPauli &row : t.x_images) {
            apply_to_row(g, row);
        }
        for (SignedPauli &row : t.z_images) {
            apply_to_row(g, row);
        }
    }
    return t;
}

CliffordCircuit circuit_from_tableau(const Tableau &t) {
    if (!t.is_valid()) {
        throw StructureError("circuit_from_tableau: broken commutation relations");
    }
    size_t n = t.num_qubits;
    Tableau work = t;
    std::vector<Gate> applied;
    auto emit = [&](const Gate &g) {
        applied.push_back(g);
        for (SignedPauli &row : work.x_images) {
            apply_to_row(g, row);
        }
        for (SignedPauli &row : work.z_images) {
            apply_to_row(g, row);
        }
    };
    for (size_t i = 0; i < n; i++) {
        // Fix image(Z_i) to +Z_i using gates supported on qubits >= i.
        reduce_row_to_z(work.z_images[i], i, n, emit);
        // Fix image(X_i) to +X_i while preserving +Z_i. The row has X at
        // position i (it anticommutes with the fixed Z_i) and identity below.
        SignedPauli &r = work.x_images[i];
        if (r.pauli.z.get(i)) {
            emit(Gate{GateKind::kS, static_cast<uint32_t>(i), 0});
        }
        for (size_t j = i + 1; j < n; j++) {
            if (r.pauli.x.get(j) && r.pauli.z.get(j)) {
                emit(Gate{GateKind::kS, static_cast<uint32_t>(j), 0});
            }
        }
        for (size_t j = i + 1; j < n; j++) {
            if (r.pauli.x.get(j)) {
                emit(Gate{GateKind::kCNOT, static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
            }
        }
        for (size_t j = i + 1; j < n; j++) {
            if (r.pauli.z.get(j)) {
                emit(Gate{GateKind::kCZ, static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
            }
        }
        if (r.sign < 0) {
            emit(Gate{GateKind::kZ, static_cast<uint32_t>(i), 0});
        }
    }
    if (!(work == Tableau::identity(n))) {
        throw ConsistencyError("circuit_from_tableau: reduction did not reach identity");
    }
    // The applied gates map the tableau's action to the identity, so the
    // tableau's unitary is the inverse of their product: reverse and invert.
    CliffordCircuit reducer(n);
    reducer.gates = std::move(applied);
    return inverse(reducer);
}

CliffordCircuit build_diagonalizer(const std::vector<SignedPauli> &gens, size_t n) {
    size_t m = gens.size();
    if (m > n) {
        throw InvalidGroupError("build_diagonalizer: more generators than qubits");
    }
    for (const SignedPauli &g : gens) {
        if (g.pauli.num_qubits != n) {
            throw DimensionError("build_diagonalizer: qubit counts differ");
        }
    }
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (!commutes(gens[i].pauli, gens[j].pauli)) {
                throw InvalidGroupError("build_diagonalizer: generators do not commute");
            }
        }
    }
    IncrementalSpan span(2 * n);
    for (const SignedPauli &g : gens) {
        if (!span.try_insert(to_symplectic(g.pauli))) {
            throw InvalidGroupError("build_diagonalizer: generators are dependent");
        }
    }
    CliffordCircuit d(n);
    for (size_t i = 0; i < m; i++) {
        SignedPauli r = conjugate_pauli(d, gens[i], Direction::kForward);
        auto emit = [&](const Gate &g) {
            if (is_two_qubit(g.kind)) {
                d.append(g.kind, g.q0, g.q1);
            } else {
                d.append(g.kind, g.q0);
            }
            apply_to_row(g, r);
        };
        // r has no X support below i: it commutes with the already-fixed
        // +Z_k images because the generators commute with each other.
        reduce_row_to_z(r, i, n, emit);
    }
    for (size_t i = 0; i < m; i++) {
        SignedPauli check = conjugate_pauli(d, gens[i], Direction::kForward);
        if (!(check == single_letter(n, i, false, true))) {
            throw ConsistencyError("build_diagonalizer: generator not mapped to +Z");
        }
    }
    return d;
}

}  // namespace stablearn
