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
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stablearn/grid.hpp"
#include "stablearn/oracle.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/statevector.hpp"

namespace stablearn {

/// A coset representative outside the stabilizer group, together with its
/// exact expectation value on the state.
struct BadGenerator {
    PauliString pauli;
    GridValue expectation;

    bool operator==(const BadGenerator &) const = default;
};

/**
 * Compact classical description of a T-doped stabilizer state:
 *
 *   rho = (1/2^n) * sum_i c_i h_i * prod_j (1 + phi_j g_j)
 *
 * where the g_j are the m signed stabilizer generators, the h_i are the k
 * coset representatives carried in bad_generators (plus the implicit
 * identity with c_0 = 1), and c_i are the exact grid expectations.
 */
struct DopedDescription {
    size_t num_qubits = 0;
    size_t t = 0;
    std::vector<SignedPauli> generators;
    std::vector<BadGenerator> bad_generators;

    size_t m() const { return generators.size(); }
    size_t k() const { return bad_generators.size(); }

    bool operator==(const DopedDescription &) const = default;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// One line per check: "PASS <name>" or "FAIL <name>: <detail>".
    std::string summary() const;
};

/// Checks every structural invariant of the description; never throws on a
/// bad description, the report carries the failures. Check names:
/// shape, generators-commute, generators-independent, rank-bound,
/// coset-commutant, coset-distinct, coset-count, support-size,
/// expectation-range, purity-exact.
ValidationReport validate(const DopedDescription &desc);

/// Dense density matrix of the description (n <= 10, ResourceError beyond).
Eigen::MatrixXcd reconstruct_density(const DopedDescription &desc);

Eigen::MatrixXcd density_from_state(const StateVector &psi);

/// 0.5 * sum of absolute eigenvalues of (a - b); both must be Hermitian.
double trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// The coset-mass distribution chi: the identity representative first with
/// mass 2^{m-n}, then each bad generator with mass expectation^2 * 2^{m-n}.
/// Exact grid arithmetic; masses sum to exactly 1 for valid descriptions.
std::vector<std::pair<PauliString, GridValue>> chi_distribution(const DopedDescription &desc);

/**
 * Samples the Pauli-measurement distribution of the described state without
 * touching any statevector: pick a coset by its chi mass, then multiply in a
 * uniformly random subset of the generators. Validates once on construction
 * (StructureError when the description is invalid).
 */
class StructuralSampler {
   public:
    explicit StructuralSampler(const DopedDescription &desc);

    PauliString sample(std::mt19937_64 &rng) const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliString> reps_;
    std::vector<double> cumulative_;
    std::vector<PauliString> gen_words_;
};

/// One-shot convenience wrapper over StructuralSampler.
PauliString structural_sample_xi(const DopedDescription &desc, std::mt19937_64 &rng);

/// The full measurement distribution implied by the description, enumerated
/// exactly: every word of every coset with probability expectation^2 / 2^n.
PauliDistribution structural_xi_distribution(const DopedDescription &desc);

/// Renyi entropy (base 2) of a probability vector; alpha = 0 counts the
/// support, alpha = 1 is Shannon.
double renyi_entropy(const std::vector<double> &probs, double alpha);

/// Magic monotone M_alpha = S_alpha(Xi) - n, computed from the description's
/// exact measurement distribution.
double stabilizer_entropy(const DopedDescription &desc, double alpha);

/// n - m, the number of missing stabilizer generators.
size_t nullity(const DopedDescription &desc);

/// Exact expectation of every support word, keyed by packed letters. Words
/// absent from the map have expectation exactly 0 under the description.
std::unordered_map<uint64_t, GridValue> exact_expectation_table(const DopedDescription &desc);

/**
 * Ground-truth extraction from a dense state: collects the stabilizer group
 * from unit-magnitude expectations, partitions the remaining support into
 * cosets greedily (smallest packed key becomes the representative), and
 * snaps every expectation onto the level-t grid. Throws ConsistencyError
 * when a value does not snap, which cannot happen for a state prepared with
 * at most t T gates.
 */
DopedDescription extract_description(const StateVector &psi, size_t t);

/// JSON round trip, bit-exact: signs, letters and (a, b, t) triples.
std::string description_to_json(const DopedDescription &desc);
DopedDescription description_from_json(const std::string &text);

}  // namespace stablearn
