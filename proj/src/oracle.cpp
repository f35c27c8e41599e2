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

#include "stablearn/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "stablearn/errors.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

namespace {

using cplx = std::complex<double>;

constexpr double kSupportThreshold = 1e-12;

/// Shared Bell-distribution builder. For every word sigma_{x,z} the squared
/// overlap |<psi| sigma |phi>|^2 equals |sum_c (-1)^{c.z} f_x[c]|^2 with
/// f_x[c] = conj(psi[c]) phi[c xor x]; phase prefactors drop under the
/// modulus. One Walsh-Hadamard transform per x mask covers all z at once.
PauliDistribution bell_distribution(const StateVector &psi, const StateVector &phi) {
    size_t n = psi.num_qubits;
    size_t d = size_t{1} << n;
    PauliDistribution dist;
    dist.num_qubits = n;
    std::vector<cplx> f(d);
    for (size_t x = 0; x < d; x++) {
        for (size_t c = 0; c < d; c++) {
            f[c] = std::conj(psi.amps[c]) * phi.amps[c ^ x];
        }
        walsh_hadamard(f, n);
        for (size_t z = 0; z < d; z++) {
            double prob = std::norm(f[z]) / static_cast<double>(d);
            if (prob > kSupportThreshold) {
                dist.support.push_back(unpack_letters((z << n) | x, n));
                dist.probs.push_back(prob);
            }
        }
    }
    // The x-major scan above emits keys in a mixed order; restore the packed
    // letter-key order the type promises.
    std::vector<size_t> order(dist.support.size());
    for (size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return pack_letters(dist.support[a]) < pack_letters(dist.support[b]);
    });
    PauliDistribution sorted;
    sorted.num_qubits = n;
    sorted.support.reserve(order.size());
    sorted.probs.reserve(order.size());
    for (size_t i : order) {
        sorted.support.push_back(std::move(dist.support[i]));
        sorted.probs.push_back(dist.probs[i]);
    }
    sorted.finalize();
    return sorted;
}

}  // namespace

void PauliDistribution::finalize() {
    if (support.size() != probs.size()) {
        throw ConsistencyError("PauliDistribution: support/probability size mismatch");
    }
    double sum = 0.0;
    uint64_t prev_key = 0;
    for (size_t i = 0; i < support.size(); i++) {
        if (support[i].num_qubits != num_qubits) {
            throw ConsistencyError("PauliDistribution: wrong word width");
        }
        if (probs[i] < 0.0) {
            throw ConsistencyError("PauliDistribution: negative probability");
        }
        uint64_t key = pack_letters(support[i]);
        if (i > 0 && key <= prev_key) {
            throw ConsistencyError("PauliDistribution: support not sorted/distinct");
        }
        prev_key = key;
        sum += probs[i];
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw ConsistencyError("PauliDistribution: probabilities sum to " + std::to_string(sum));
    }
    cumulative.resize(probs.size());
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); i++) {
        acc += probs[i];
        cumulative[i] = acc;
    }
    if (!cumulative.empty()) {
        cumulative.back() = 1.0;
    }
}

const PauliString &PauliDistribution::sample(std::mt19937_64 &rng) const {
    if (cumulative.empty()) {
        throw ConsistencyError("PauliDistribution: sample before finalize");
    }
    double u = random_unit(rng);
    size_t i = static_cast<size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    if (i >= support.size()) {
        i = support.size() - 1;
    }
    return support[i];
}

double PauliDistribution::prob_of(const PauliString &p) const {
    if (p.num_qubits != num_qubits) {
        throw DimensionError("prob_of: qubit counts differ");
    }
    uint64_t key = pack_letters(p);
    size_t lo = 0;
    size_t hi = support.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        uint64_t k = pack_letters(support[mid]);
        if (k == key) {
            return probs[mid];
        }
        if (k < key) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return 0.0;
}

PauliDistribution exact_xi(const StateVector &psi, size_t max_qubits) {
    if (psi.num_qubits > max_qubits) {
        throw ResourceError("exact_xi: too many qubits");
    }
    return bell_distribution(psi, psi);
}

PauliDistribution exact_xi_tilde(const StateVector &psi, const StateVector &psi_conj,
                                 size_t max_qubits) {
    if (psi.num_qubits > max_qubits) {
        throw ResourceError("exact_xi_tilde: too many qubits");
    }
    if (state_distance(psi_conj, conjugate_state(psi)) > 1e-10) {
        throw ConsistencyError("exact_xi_tilde: second state is not the conjugate of the first");
    }
    return bell_distribution(psi, psi_conj);
}

QueryModel::QueryModel(StateVector psi)
    : psi_(std::move(psi)), psi_conj_(conjugate_state(psi_)) {
    double norm = state_norm(psi_);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw ConsistencyError("QueryModel: state is not normalized");
    }
}

PauliString QueryModel::sample_xi(std::mt19937_64 &rng) {
    if (!xi_) {
        xi_ = exact_xi(psi_);
    }
    xi_samples_++;
    return xi_->sample(rng);
}

PauliString QueryModel::sample_xi_tilde(std::mt19937_64 &rng) {
    if (!xi_tilde_) {
        xi_tilde_ = exact_xi_tilde(psi_, psi_conj_);
    }
    xi_tilde_samples_++;
    return xi_tilde_->sample(rng);
}

int QueryModel::measure_pauli_shot(const PauliString &p, std::mt19937_64 &rng) {
    if (p.num_qubits != psi_.num_qubits) {
        throw DimensionError("measure_pauli_shot: qubit counts differ");
    }
    if (p.phase_exp % 2 != 0) {
        throw FormatError("measure_pauli_shot: operator is not Hermitian");
    }
    uint64_t key = pack_letters(p);
    auto it = expectation_cache_.find(key);
    double word_expectation;
    if (it != expectation_cache_.end()) {
        word_expectation = it->second;
    } else {
        word_expectation = pauli_expectation(psi_, p.quotient());
        expectation_cache_.emplace(key, word_expectation);
    }
    double e = p.phase_exp == 2 ? -word_expectation : word_expectation;
    measurement_shots_++;
    double p_plus = 0.5 * (1.0 + e);
    return random_unit(rng) < p_plus ? +1 : -1;
}

}  // namespace stablearn
