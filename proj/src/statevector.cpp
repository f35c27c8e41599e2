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

#include "stablearn/statevector.hpp"

#include <bit>
#include <cmath>

#include "stablearn/errors.hpp"

namespace stablearn {

namespace {

using cplx = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Lower n bits of a BitVec as a mask; callers guarantee n <= 63.
uint64_t low_mask(const BitVec &v, size_t n) {
    uint64_t mask = 0;
    for (size_t i = 0; i < n; i++) {
        if (v.get(i)) {
            mask |= uint64_t{1} << i;
        }
    }
    return mask;
}

/// Re(i^k * s) for k mod 4.
double real_of_phase(unsigned k, cplx s) {
    switch (k & 3u) {
        case 0:
            return s.real();
        case 1:
            return -s.imag();
        case 2:
            return -s.real();
        default:
            return s.imag();
    }
}

}  // namespace

StateVector::StateVector(size_t n, std::vector<cplx> a) : num_qubits(n), amps(std::move(a)) {
    if (amps.size() != (size_t{1} << n)) {
        throw DimensionError("StateVector: amplitude count is not 2^n");
    }
}

StateVector zero_state(size_t n) {
    if (n > 24) {
        throw ResourceError("zero_state: too many qubits for dense simulation");
    }
    StateVector psi;
    psi.num_qubits = n;
    psi.amps.assign(size_t{1} << n, cplx{0.0, 0.0});
    psi.amps[0] = cplx{1.0, 0.0};
    return psi;
}

void apply_gate(StateVector &psi, const Gate &g) {
    size_t d = psi.amps.size();
    size_t b0 = size_t{1} << g.q0;
    switch (g.kind) {
        case GateKind::kH:
            for (size_t i = 0; i < d; i++) {
                if (!(i & b0)) {
                    cplx a = psi.amps[i];
                    cplx b = psi.amps[i | b0];
                    psi.amps[i] = (a + b) * kInvSqrt2;
                    psi.amps[i | b0] = (a - b) * kInvSqrt2;
                }
            }
            break;
        case GateKind::kS:
            for (size_t i = 0; i < d; i++) {
                if (i & b0) {
                    psi.amps[i] *= cplx{0.0, 1.0};
                }
            }
            break;
        case GateKind::kSDag:
            for (size_t i = 0; i < d; i++) {
                if (i & b0) {
                    psi.amps[i] *= cplx{0.0, -1.0};
                }
            }
            break;
        case GateKind::kX:
            for (size_t i = 0; i < d; i++) {
                if (!(i & b0)) {
                    std::swap(psi.amps[i], psi.amps[i | b0]);
                }
            }
            break;
        case GateKind::kZ:
            for (size_t i = 0; i < d; i++) {
                if (i & b0) {
                    psi.amps[i] = -psi.amps[i];
                }
            }
            break;
        case GateKind::kT:
            for (size_t i = 0; i < d; i++) {
                if (i & b0) {
                    psi.amps[i] *= cplx{kInvSqrt2, kInvSqrt2};
                }
            }
            break;
        case GateKind::kTDag:
            for (size_t i = 0; i < d; i++) {
                if (i & b0) {
                    psi.amps[i] *= cplx{kInvSqrt2, -kInvSqrt2};
                }
            }
            break;
        case GateKind::kCNOT: {
            size_t b1 = size_t{1} << g.q1;
            for (size_t i = 0; i < d; i++) {
                if ((i & b0) && !(i & b1)) {
                    std::swap(psi.amps[i], psi.amps[i | b1]);
                }
            }
            break;
        }
        case GateKind::kCZ: {
            size_t b1 = size_t{1} << g.q1;
            for (size_t i = 0; i < d; i++) {
                if ((i & b0) && (i & b1)) {
                    psi.amps[i] = -psi.amps[i];
                }
            }
            break;
        }
    }
}

StateVector run_circuit(const DopedCircuit &c, size_t max_qubits) {
    if (c.num_qubits > max_qubits) {
        throw ResourceError("run_circuit: circuit exceeds the qubit cap");
    }
    StateVector psi = zero_state(c.num_qubits);
    for (const Gate &g : c.gates) {
        apply_gate(psi, g);
    }
    return psi;
}

StateVector run_circuit(const CliffordCircuit &c, size_t max_qubits) {
    return run_circuit(to_doped(c), max_qubits);
}

StateVector conjugate_state(const StateVector &psi) {
    StateVector out = psi;
    for (cplx &a : out.amps) {
        a = std::conj(a);
    }
    return out;
}

double state_norm(const StateVector &psi) {
    double s = 0.0;
    for (const cplx &a : psi.amps) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

double state_distance(const StateVector &a, const StateVector &b) {
    if (a.num_qubits != b.num_qubits) {
        throw DimensionError("state_distance: qubit counts differ");
    }
    double s = 0.0;
    for (size_t i = 0; i < a.amps.size(); i++) {
        s += std::norm(a.amps[i] - b.amps[i]);
    }
    return std::sqrt(s);
}

void walsh_hadamard(std::vector<cplx> &g, size_t n) {
    size_t d = size_t{1} << n;
    for (size_t bit = 0; bit < n; bit++) {
        size_t step = size_t{1} << bit;
        for (size_t base = 0; base < d; base += 2 * step) {
            for (size_t i = base; i < base + step; i++) {
                cplx a = g[i];
                cplx b = g[i + step];
                g[i] = a + b;
                g[i + step] = a - b;
            }
        }
    }
}

double pauli_expectation(const StateVector &psi, const PauliString &p) {
    if (psi.num_qubits != p.num_qubits) {
        throw DimensionError("pauli_expectation: qubit counts differ");
    }
    size_t n = psi.num_qubits;
    uint64_t xm = low_mask(p.x, n);
    uint64_t zm = low_mask(p.z, n);
    size_t d = psi.amps.size();
    cplx s{0.0, 0.0};
    for (size_t c = 0; c < d; c++) {
        cplx term = psi.amps[c] * std::conj(psi.amps[c ^ xm]);
        if (std::popcount(static_cast<uint64_t>(c) & zm) & 1) {
            term = -term;
        }
        s += term;
    }
    unsigned k = static_cast<unsigned>(std::popcount(xm & zm)) + p.phase_exp;
    return real_of_phase(k, s);
}

std::vector<double> all_pauli_expectations(const StateVector &psi) {
    size_t n = psi.num_qubits;
    if (n > kMaxDenseTableQubits) {
        throw ResourceError("all_pauli_expectations: too many qubits");
    }
    size_t d = size_t{1} << n;
    std::vector<double> table(d * d);
    std::vector<cplx> g(d);
    for (size_t x = 0; x < d; x++) {
        for (size_t c = 0; c < d; c++) {
            g[c] = psi.amps[c] * std::conj(psi.amps[c ^ x]);
        }
        walsh_hadamard(g, n);
        for (size_t z = 0; z < d; z++) {
            unsigned k = static_cast<unsigned>(std::popcount(x & z));
            table[(z << n) | x] = real_of_phase(k, g[z]);
        }
    }
    return table;
}

}  // namespace stablearn
