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

#include "stablearn/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "stablearn/errors.hpp"

namespace stablearn {

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::kCNOT || kind == GateKind::kCZ;
}

bool is_clifford_gate(GateKind kind) {
    return kind != GateKind::kT && kind != GateKind::kTDag;
}

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kS:
            return "S";
        case GateKind::kSDag:
            return "SDG";
        case GateKind::kX:
            return "X";
        case GateKind::kZ:
            return "Z";
        case GateKind::kCNOT:
            return "CNOT";
        case GateKind::kCZ:
            return "CZ";
        case GateKind::kT:
            return "T";
        case GateKind::kTDag:
            return "TDG";
    }
    throw UnsupportedGateError("unknown gate kind");
}

namespace {

void check_targets(GateKind kind, size_t num_qubits, uint32_t q0, uint32_t q1, bool two_given) {
    if (is_two_qubit(kind) != two_given) {
        throw DimensionError(std::string(gate_name(kind)) + ": wrong number of targets");
    }
    if (q0 >= num_qubits || (two_given && q1 >= num_qubits)) {
        throw DimensionError(std::string(gate_name(kind)) + ": target out of range");
    }
    if (two_given && q0 == q1) {
        throw DimensionError(std::string(gate_name(kind)) + ": targets must be distinct");
    }
}

GateKind inverse_kind(GateKind kind) {
    switch (kind) {
        case GateKind::kS:
            return GateKind::kSDag;
        case GateKind::kSDag:
            return GateKind::kS;
        case GateKind::kT:
            return GateKind::kTDag;
        case GateKind::kTDag:
            return GateKind::kT;
        default:
            return kind;
    }
}

GateKind conjugate_kind(GateKind kind) {
    // Entrywise complex conjugation in the computational basis. H, X, Z,
    // CNOT, CZ have real matrices; S and T are diagonal with conjugate equal
    // to their inverse.
    return inverse_kind(kind);
}

/// In-place forward conjugation g P g-dagger of a sign-tracked Pauli word.
void conj_gate_forward(const Gate &g, BitVec &x, BitVec &z, int &sign) {
    size_t a = g.q0;
    size_t b = g.q1;
    bool xa = x.get(a);
    bool za = z.get(a);
    switch (g.kind) {
        case GateKind::kH:
            if (xa && za) {
                sign = -sign;
            }
            x.set(a, za);
            z.set(a, xa);
            break;
        case GateKind::kS:
            if (xa && za) {
                sign = -sign;
            }
            z.set(a, za ^ xa);
            break;
        case GateKind::kSDag:
            z.set(a, za ^ xa);
            if (xa && z.get(a)) {
                sign = -sign;
            }
            break;
        case GateKind::kX:
            if (za) {
                sign = -sign;
            }
            break;
        case GateKind::kZ:
            if (xa) {
                sign = -sign;
            }
            break;
        case GateKind::kCNOT: {
            bool xb = x.get(b);
            bool zb = z.get(b);
            if (xa && zb && !(xb ^ za)) {
                sign = -sign;
            }
            x.set(b, xb ^ xa);
            z.set(a, za ^ zb);
            break;
        }
        case GateKind::kCZ: {
            bool xb = x.get(b);
            bool zb = z.get(b);
            if (xa && xb && (za ^ zb)) {
                sign = -sign;
            }
            z.set(a, za ^ xb);
            z.set(b, zb ^ xa);
            break;
        }
        case GateKind::kT:
        case GateKind::kTDag:
            throw UnsupportedGateError("cannot conjugate a Pauli through a T gate");
    }
}

}  // namespace

void CliffordCircuit::append(GateKind kind, uint32_t q0) {
    if (!is_clifford_gate(kind)) {
        throw UnsupportedGateError("CliffordCircuit rejects T gates");
    }
    check_targets(kind, num_qubits, q0, 0, false);
    gates.push_back({kind, q0, 0});
}

void CliffordCircuit::append(GateKind kind, uint32_t q0, uint32_t q1) {
    if (!is_clifford_gate(kind)) {
        throw UnsupportedGateError("CliffordCircuit rejects T gates");
    }
    check_targets(kind, num_qubits, q0, q1, true);
    gates.push_back({kind, q0, q1});
}

void DopedCircuit::append(GateKind kind, uint32_t q0) {
    check_targets(kind, num_qubits, q0, 0, false);
    gates.push_back({kind, q0, 0});
}

void DopedCircuit::append(GateKind kind, uint32_t q0, uint32_t q1) {
    check_targets(kind, num_qubits, q0, q1, true);
    gates.push_back({kind, q0, q1});
}

size_t DopedCircuit::t_count() const {
    size_t t = 0;
    for (const Gate &g : gates) {
        if (!is_clifford_gate(g.kind)) {
            t++;
        }
    }
    return t;
}

DopedCircuit to_doped(const CliffordCircuit &c) {
    DopedCircuit out(c.num_qubits);
    out.gates = c.gates;
    return out;
}

CliffordCircuit to_clifford(const DopedCircuit &c) {
    if (c.t_count() != 0) {
        throw UnsupportedGateError("circuit contains T gates");
    }
    CliffordCircuit out(c.num_qubits);
    out.gates = c.gates;
    return out;
}

CliffordCircuit inverse(const CliffordCircuit &c) {
    CliffordCircuit out(c.num_qubits);
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        out.gates.push_back({inverse_kind(it->kind), it->q0, it->q1});
    }
    return out;
}

void conjugate_pauli_inplace(const Gate &g, BitVec &x, BitVec &z, int &sign) {
    conj_gate_forward(g, x, z, sign);
}

SignedPauli conjugate_pauli(const CliffordCircuit &c, const SignedPauli &p, Direction dir) {
    if (c.num_qubits != p.pauli.num_qubits) {
        throw DimensionError("conjugate_pauli: qubit counts differ");
    }
    BitVec x = p.pauli.x;
    BitVec z = p.pauli.z;
    int sign = p.sign;
    if (dir == Direction::kForward) {
        for (const Gate &g : c.gates) {
            conj_gate_forward(g, x, z, sign);
        }
    } else {
        for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
            Gate g{inverse_kind(it->kind), it->q0, it->q1};
            conj_gate_forward(g, x, z, sign);
        }
    }
    PauliString word = PauliString::identity(c.num_qubits);
    word.x = std::move(x);
    word.z = std::move(z);
    return SignedPauli(word, sign);
}

DopedCircuit conjugate_circuit(const DopedCircuit &c) {
    DopedCircuit out(c.num_qubits);
    out.gates.reserve(c.gates.size());
    for (const Gate &g : c.gates) {
        out.gates.push_back({conjugate_kind(g.kind), g.q0, g.q1});
    }
    return out;
}

namespace {

GateKind kind_from_name(const std::string &name) {
    if (name == "H") return GateKind::kH;
    if (name == "S") return GateKind::kS;
    if (name == "SDG" || name == "S_DAG") return GateKind::kSDag;
    if (name == "X") return GateKind::kX;
    if (name == "Z") return GateKind::kZ;
    if (name == "CNOT") return GateKind::kCNOT;
    if (name == "CZ") return GateKind::kCZ;
    if (name == "T") return GateKind::kT;
    if (name == "TDG" || name == "T_DAG") return GateKind::kTDag;
    throw UnsupportedGateError("unknown gate mnemonic: " + name);
}

}  // namespace

DopedCircuit parse_circuit(const std::string &text) {
    std::vector<Gate> staged;
    size_t declared_qubits = 0;
    size_t max_index_plus_one = 0;
    size_t line_no = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line_no++;
        std::string code = line;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            code = line.substr(0, hash);
            std::istringstream comment(line.substr(hash + 1));
            std::string word;
            if (comment >> word && word == "qubits") {
                size_t n = 0;
                if (!(comment >> n)) {
                    throw FormatError("line " + std::to_string(line_no) +
                                      ": malformed qubits directive");
                }
                declared_qubits = std::max(declared_qubits, n);
            }
        }
        std::istringstream tokens(code);
        std::string name;
        if (!(tokens >> name)) {
            continue;
        }
        GateKind kind = kind_from_name(name);
        int64_t q0 = -1;
        int64_t q1 = -1;
        if (!(tokens >> q0) || q0 < 0 || (is_two_qubit(kind) && (!(tokens >> q1) || q1 < 0))) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                              (is_two_qubit(kind) ? "two qubit indices" : "one qubit index"));
        }
        std::string extra;
        if (tokens >> extra) {
            throw FormatError("line " + std::to_string(line_no) + ": trailing token: " + extra);
        }
        Gate g{kind, static_cast<uint32_t>(q0), static_cast<uint32_t>(std::max<int64_t>(q1, 0))};
        staged.push_back(g);
        max_index_plus_one = std::max<size_t>(max_index_plus_one, static_cast<size_t>(q0) + 1);
        if (is_two_qubit(kind)) {
            max_index_plus_one =
                std::max<size_t>(max_index_plus_one, static_cast<size_t>(q1) + 1);
        }
    }
    if (declared_qubits > 0 && declared_qubits < max_index_plus_one) {
        throw FormatError("qubits directive smaller than largest target index");
    }
    if (declared_qubits == 0 && max_index_plus_one == 0) {
        throw FormatError("empty circuit description: no qubits directive and no gates");
    }
    DopedCircuit out(std::max(declared_qubits, max_index_plus_one));
    for (const Gate &g : staged) {
        if (is_two_qubit(g.kind)) {
            out.append(g.kind, g.q0, g.q1);
        } else {
            out.append(g.kind, g.q0);
        }
    }
    return out;
}

std::string serialize_circuit(const DopedCircuit &c) {
    std::string out = "# qubits " + std::to_string(c.num_qubits) + "\n";
    for (const Gate &g : c.gates) {
        out += gate_name(g.kind);
        out += ' ';
        out += std::to_string(g.q0);
        if (is_two_qubit(g.kind)) {
            out += ' ';
            out += std::to_string(g.q1);
        }
        out += '\n';
    }
    return out;
}

std::string serialize_circuit(const CliffordCircuit &c) {
    return serialize_circuit(to_doped(c));
}

}  // namespace stablearn
