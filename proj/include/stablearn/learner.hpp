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
#include <optional>
#include <random>
#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/description.hpp"
#include "stablearn/grid.hpp"
#include "stablearn/oracle.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

/// Shot counts and sampling budgets for one learning run. defaults() derives
/// every count from (n, t): M = 2^{3t+1} (n + t) membership shots and an
/// estimation count calibrated so a mean of N shots lands within half the
/// true grid gap with high probability, union-bounded over up to 4^t values.
struct LearnerConfig {
    size_t n = 0;
    size_t t = 0;
    uint64_t membership_shots = 1;    ///< M: shots per membership test
    uint64_t estimate_shots = 1;      ///< N: shots per expectation estimate
    uint64_t group_sample_budget = 1;
    uint64_t bad_gen_sample_budget = 1;
    uint64_t pair_budget = 1;
    uint64_t seed = 0;

    static LearnerConfig defaults(size_t n, size_t t, uint64_t seed);
};

enum class LearnStatus {
    kSuccess,
    kBudgetExhausted,
    kAmbiguousEstimate,
};

const char *status_name(LearnStatus status);

/// Copies and shots consumed by a run; matches the QueryModel counters when
/// the run started on a fresh model. elimination_steps counts F2 row
/// operations spent in basis extraction.
struct LearnResources {
    uint64_t xi_samples = 0;
    uint64_t xi_tilde_samples = 0;
    uint64_t measurement_shots = 0;
    uint64_t elimination_steps = 0;
};

struct LearnOutcome {
    DopedDescription description;
    LearnResources resources;
    LearnStatus status = LearnStatus::kSuccess;
};

/**
 * Measures P up to M times, stopping at the first disagreement. Returns the
 * common sign when all M outcomes agree (P is claimed to stabilize the state
 * with that phase) and nullopt otherwise. A true stabilizer always yields
 * its phase; a non-member with expectation h slips through with probability
 * at most (h/2 + 1/2)^M + (1/2 - h/2)^M.
 */
std::optional<int> test_membership(QueryModel &q, const PauliString &p, uint64_t m_shots,
                                   std::mt19937_64 &rng);

struct GroupLearnResult {
    std::vector<SignedPauli> generators;
    uint64_t samples_used = 0;
    uint64_t elimination_steps = 0;
    bool budget_exhausted = false;
};

/**
 * Extracts a stabilizer generating set from measurement-distribution
 * samples: draws words, keeps membership-accepted ones, and inserts them
 * into an F2 span. Stops once at least 2n accepts have been seen and the
 * span rank has reached n - t (the described state guarantees m >= n - t,
 * so waiting for that rank only consumes a few extra samples and removes
 * the ~2^-n chance of stopping on a rank-deficient draw).
 */
GroupLearnResult learn_group_xi(QueryModel &q, const LearnerConfig &cfg, std::mt19937_64 &rng);

/**
 * True iff P's letters lie in G union h_1 G union ... union h_k G, decided
 * through the diagonalizer: D maps the group onto <Z_0..Z_{m-1}>, so
 * membership is a qubit-wise inspection of D (h_i P) D-dagger, O(n) per
 * coset. Throws ConsistencyError when diag does not map generator i to +Z_i.
 */
bool coset_check(const PauliString &p, const std::vector<SignedPauli> &generators,
                 const std::vector<BadGenerator> &bad_gens, const CliffordCircuit &diag);

/// Same predicate via Gaussian elimination over F2^{2n} (no diagonalizer);
/// the two paths agree on every input.
bool coset_check_gaussian(const PauliString &p, const std::vector<SignedPauli> &generators,
                          const std::vector<BadGenerator> &bad_gens);

/// Mean of N shots snapped onto the level-t grid; nullopt when the mean is
/// not within half the true grid gap of any point (ambiguous estimate).
std::optional<GridValue> estimate_expectation_exact(QueryModel &q, const PauliString &p, size_t t,
                                                    uint64_t n_shots, std::mt19937_64 &rng);

struct BadGenResult {
    std::vector<BadGenerator> bad_generators;
    uint64_t samples_used = 0;
    LearnStatus status = LearnStatus::kSuccess;
};

/**
 * Finds one representative per remaining support coset: repeatedly samples
 * the measurement distribution, discards words inside already-known cosets,
 * and estimates the expectation of each new representative. Terminates with
 * success exactly when the purity identity 1 + sum est^2 = 2^{n-m} closes in
 * exact grid arithmetic (a certificate that every coset was found).
 */
BadGenResult learn_bad_generators(QueryModel &q, const std::vector<SignedPauli> &generators,
                                  const CliffordCircuit &diag, const LearnerConfig &cfg,
                                  std::mt19937_64 &rng);

/// Conjugate-access algorithm: group from Xi samples, then coset hunt.
LearnOutcome learn_algorithm1(QueryModel &q, size_t n, size_t t, const LearnerConfig &cfg);

/// Two-copy algorithm: group from products of Xi-tilde sample pairs, then
/// residual tomography of the <= 4^{n-m} - 1 candidate words carried to the
/// last n - m qubits through the diagonalizer.
LearnOutcome learn_algorithm2(QueryModel &q, size_t n, size_t t, const LearnerConfig &cfg);

}  // namespace stablearn
