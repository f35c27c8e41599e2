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
#include <unordered_map>
#include <vector>

#include "stablearn/pauli.hpp"
#include "stablearn/statevector.hpp"

namespace stablearn {

/// A probability distribution over phase-free Pauli words. Support entries
/// are distinct, sorted by packed letter key, with probabilities >= 0
/// summing to 1 (tolerance 1e-10, checked by finalize).
struct PauliDistribution {
    size_t num_qubits = 0;
    std::vector<PauliString> support;
    std::vector<double> probs;
    std::vector<double> cumulative;

    /// Validates the invariants and builds the cumulative table.
    /// Throws ConsistencyError on violation.
    void finalize();

    const PauliString &sample(std::mt19937_64 &rng) const;

    /// Probability of the word (0 when absent). Phase is ignored.
    double prob_of(const PauliString &p) const;
};

/// Distribution of Bell measurements on psi (x) psi*:
/// Pr(P) = tr(P psi)^2 / 2^n. Support keeps entries above 1e-12.
/// Throws ResourceError above the qubit cap.
PauliDistribution exact_xi(const StateVector &psi, size_t max_qubits = kDefaultMaxQubits);

/// Distribution of Bell measurements on psi (x) psi:
/// Pr(P) = |<psi|P|psi*>|^2 / 2^n. psi_conj must equal conj(psi) within
/// 1e-10 (ConsistencyError otherwise).
PauliDistribution exact_xi_tilde(const StateVector &psi, const StateVector &psi_conj,
                                 size_t max_qubits = kDefaultMaxQubits);

/**
 * QueryModel: the only interface the learner touches. It simulates copy
 * access to an unknown state: Bell samples of either distribution and
 * single-Pauli measurement shots, with exact copy accounting:
 *   - one xi sample costs one copy of psi and one of psi*;
 *   - one xi-tilde sample costs two copies of psi;
 *   - one measurement shot costs one copy of psi.
 * Exact distributions are computed lazily on first use; per-word
 * expectations are cached so repeated shots cost O(1).
 */
class QueryModel {
   public:
    explicit QueryModel(StateVector psi);

    size_t num_qubits() const { return psi_.num_qubits; }

    PauliString sample_xi(std::mt19937_64 &rng);
    PauliString sample_xi_tilde(std::mt19937_64 &rng);

    /// One projective measurement of the Hermitian word: +1 with probability
    /// (1 + tr(P psi))/2. P must carry an even phase_exp.
    int measure_pauli_shot(const PauliString &p, std::mt19937_64 &rng);

    uint64_t xi_samples() const { return xi_samples_; }
    uint64_t xi_tilde_samples() const { return xi_tilde_samples_; }
    uint64_t measurement_shots() const { return measurement_shots_; }
    uint64_t copies_of_psi() const {
        return xi_samples_ + 2 * xi_tilde_samples_ + measurement_shots_;
    }
    uint64_t copies_of_psi_conj() const { return xi_samples_; }

    /// Ground-truth access for tests and verification; the learner must not
    /// call this.
    const StateVector &state() const { return psi_; }

   private:
    StateVector psi_;
    StateVector psi_conj_;
    std::optional<PauliDistribution> xi_;
    std::optional<PauliDistribution> xi_tilde_;
    std::unordered_map<uint64_t, double> expectation_cache_;
    uint64_t xi_samples_ = 0;
    uint64_t xi_tilde_samples_ = 0;
    uint64_t measurement_shots_ = 0;
};

}  // namespace stablearn
