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

#include "stablearn/learner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "stablearn/errors.hpp"
#include "stablearn/f2.hpp"
#include "stablearn/tableau.hpp"

namespace stablearn {

namespace {

void validate_config(const LearnerConfig &cfg) {
    if (cfg.membership_shots == 0 || cfg.estimate_shots == 0 || cfg.group_sample_budget == 0 ||
        cfg.bad_gen_sample_budget == 0 || cfg.pair_budget == 0) {
        throw FormatError("learner config: all shot counts and budgets must be positive");
    }
}

/// D w D-dagger lies in <Z_0..Z_{m-1}> iff its image carries no X letter and
/// no Z letter past qubit m.
bool image_in_diagonal_group(const PauliString &img, size_t m) {
    if (img.x.any()) {
        return false;
    }
    for (size_t j = m; j < img.num_qubits; ++j) {
        if (img.z.get(j)) {
            return false;
        }
    }
    return true;
}

void require_diagonalized(const std::vector<SignedPauli> &generators,
                          const CliffordCircuit &diag) {
    const size_t n = diag.num_qubits;
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].pauli.num_qubits != n) {
            throw DimensionError("coset_check: generator width does not match diagonalizer");
        }
        const SignedPauli img = conjugate_pauli(diag, generators[i], Direction::kForward);
        const bool is_plus_zi = img.sign == +1 && !img.pauli.x.any() &&
                                img.pauli.z.popcount() == 1 && img.pauli.z.get(i);
        if (!is_plus_zi) {
            throw ConsistencyError("coset_check: circuit does not map generator " +
                                   std::to_string(i) + " to +Z_i");
        }
    }
}

PauliString letters_product(const PauliString &a, const PauliString &b) {
    PauliString prod(a.num_qubits);
    prod.x = a.x;
    prod.x ^= b.x;
    prod.z = a.z;
    prod.z ^= b.z;
    return prod;
}

}  // namespace

LearnerConfig LearnerConfig::defaults(size_t n, size_t t, uint64_t seed) {
    if (t > kMaxGridLevel) {
        throw ResourceError("LearnerConfig::defaults: t exceeds the grid enumeration cap");
    }
    LearnerConfig cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.seed = seed;
    cfg.membership_shots = (uint64_t(1) << (3 * t + 1)) * static_cast<uint64_t>(n + t);
    const double gap = grid_min_gap(t);
    cfg.estimate_shots = static_cast<uint64_t>(
        std::ceil(8.0 * std::log(std::pow(4.0, static_cast<double>(t)) * 100.0) / (gap * gap)));
    cfg.group_sample_budget = 16 * (uint64_t(1) << t) * static_cast<uint64_t>(2 * n + 4);
    // Coupon collector over <= 4^t cosets, each hit with chance at least
    // min_positive^2 / 2^t per sample; factor 4 of headroom.
    const double minp = grid_min_positive(t);
    const double harmonic = 0.5772156649 + std::log(std::pow(4.0, static_cast<double>(t)));
    cfg.bad_gen_sample_budget =
        256 + static_cast<uint64_t>(std::ceil(
                  4.0 * static_cast<double>(uint64_t(1) << t) * harmonic / (minp * minp)));
    // A pair is accepted with probability at least 2^-6t; clamp the shift so
    // large t degrades to a finite (still enormous) budget instead of UB.
    const size_t shift = std::min<size_t>(6 * t, 40);
    cfg.pair_budget = 64 + 4 * (uint64_t(1) << shift) * static_cast<uint64_t>(2 * n + 4);
    return cfg;
}

const char *status_name(LearnStatus status) {
    switch (status) {
        case LearnStatus::kSuccess:
            return "success";
        case LearnStatus::kBudgetExhausted:
            return "budget-exhausted";
        case LearnStatus::kAmbiguousEstimate:
            return "ambiguous-estimate";
    }
    throw ConsistencyError("status_name: unknown status");
}

std::optional<int> test_membership(QueryModel &q, const PauliString &p, uint64_t m_shots,
                                   std::mt19937_64 &rng) {
    if (m_shots == 0) {
        throw FormatError("test_membership: shot count must be positive");
    }
    const PauliString word = p.quotient();
    const int first = q.measure_pauli_shot(word, rng);
    for (uint64_t i = 1; i < m_shots; ++i) {
        if (q.measure_pauli_shot(word, rng) != first) {
            return std::nullopt;  // early exit; only consumed shots are billed
        }
    }
    return first;
}

GroupLearnResult learn_group_xi(QueryModel &q, const LearnerConfig &cfg, std::mt19937_64 &rng) {
    validate_config(cfg);
    const size_t n = q.num_qubits();
    const size_t rank_target = n > cfg.t ? n - cfg.t : 0;
    IncrementalSpan span(2 * n);
    GroupLearnResult res;
    uint64_t accepts = 0;
    while (!(accepts >= 2 * n && span.rank() >= rank_target)) {
        if (res.samples_used >= cfg.group_sample_budget) {
            res.budget_exhausted = true;
            break;
        }
        const PauliString p = q.sample_xi(rng);
        ++res.samples_used;
        const auto sign = test_membership(q, p, cfg.membership_shots, rng);
        if (!sign) {
            continue;
        }
        ++accepts;
        if (span.try_insert(to_symplectic(p))) {
            res.generators.emplace_back(p, *sign);
        }
    }
    res.elimination_steps = span.elimination_steps();
    return res;
}

bool coset_check(const PauliString &p, const std::vector<SignedPauli> &generators,
                 const std::vector<BadGenerator> &bad_gens, const CliffordCircuit &diag) {
    if (p.num_qubits != diag.num_qubits) {
        throw DimensionError("coset_check: word width does not match diagonalizer");
    }
    require_diagonalized(generators, diag);
    const size_t m = generators.size();
    const SignedPauli img = conjugate_pauli(diag, SignedPauli(p.quotient()), Direction::kForward);
    if (image_in_diagonal_group(img.pauli, m)) {
        return true;
    }
    for (const BadGenerator &bg : bad_gens) {
        const SignedPauli himg =
            conjugate_pauli(diag, SignedPauli(bg.pauli.quotient()), Direction::kForward);
        if (image_in_diagonal_group(letters_product(himg.pauli, img.pauli), m)) {
            return true;
        }
    }
    return false;
}

bool coset_check_gaussian(const PauliString &p, const std::vector<SignedPauli> &generators,
                          const std::vector<BadGenerator> &bad_gens) {
    BitMatrix basis(0, 2 * p.num_qubits);
    for (const SignedPauli &g : generators) {
        if (g.pauli.num_qubits != p.num_qubits) {
            throw DimensionError("coset_check_gaussian: generator width mismatch");
        }
        basis.append_row(to_symplectic(g.pauli));
    }
    if (in_span(to_symplectic(p), basis)) {
        return true;
    }
    for (const BadGenerator &bg : bad_gens) {
        if (in_span(to_symplectic(letters_product(bg.pauli, p)), basis)) {
            return true;
        }
    }
    return false;
}

std::optional<GridValue> estimate_expectation_exact(QueryModel &q, const PauliString &p, size_t t,
                                                    uint64_t n_shots, std::mt19937_64 &rng) {
    if (n_shots == 0) {
        throw FormatError("estimate_expectation_exact: shot count must be positive");
    }
    const PauliString word = p.quotient();
    int64_t sum = 0;
    for (uint64_t i = 0; i < n_shots; ++i) {
        sum += q.measure_pauli_shot(word, rng);
    }
    const double mean = static_cast<double>(sum) / static_cast<double>(n_shots);
    return nearest_grid(mean, t);
}

BadGenResult learn_bad_generators(QueryModel &q, const std::vector<SignedPauli> &generators,
                                  const CliffordCircuit &diag, const LearnerConfig &cfg,
                                  std::mt19937_64 &rng) {
    validate_config(cfg);
    const size_t n = q.num_qubits();
    if (diag.num_qubits != n) {
        throw DimensionError("learn_bad_generators: diagonalizer width mismatch");
    }
    require_diagonalized(generators, diag);
    const size_t m = generators.size();
    if (m > n) {
        throw InvalidGroupError("learn_bad_generators: more generators than qubits");
    }
    const GridValue target = GridValue::pow2(n - m);
    GridValue total = GridValue::one();
    BadGenResult res;
    // Diagonalized images of the accepted representatives; sampling a word
    // from an already-covered coset then needs one conjugation, not k.
    std::vector<PauliString> rep_images;
    while (!(total == target)) {
        if (res.samples_used >= cfg.bad_gen_sample_budget) {
            res.status = LearnStatus::kBudgetExhausted;
            break;
        }
        const PauliString p = q.sample_xi(rng);
        ++res.samples_used;
        const SignedPauli img = conjugate_pauli(diag, SignedPauli(p), Direction::kForward);
        bool known = image_in_diagonal_group(img.pauli, m);
        for (size_t i = 0; !known && i < rep_images.size(); ++i) {
            known = image_in_diagonal_group(letters_product(rep_images[i], img.pauli), m);
        }
        if (known) {
            continue;
        }
        const auto est = estimate_expectation_exact(q, p, cfg.t, cfg.estimate_shots, rng);
        // A sampled word has expectation^2 / 2^n mass, so a zero (or
        // unresolvable) estimate contradicts the sample itself.
        if (!est || est->is_zero()) {
            res.status = LearnStatus::kAmbiguousEstimate;
            break;
        }
        const GridValue next = total + est->squared();
        if ((target - next).sign() < 0) {
            res.status = LearnStatus::kAmbiguousEstimate;
            break;
        }
        res.bad_generators.push_back(BadGenerator{p, *est});
        rep_images.push_back(img.pauli);
        total = next;
    }
    return res;
}

LearnOutcome learn_algorithm1(QueryModel &q, size_t n, size_t t, const LearnerConfig &cfg) {
    if (q.num_qubits() != n) {
        throw DimensionError("learn_algorithm1: model width does not match n");
    }
    if (cfg.n != n || cfg.t != t) {
        throw DimensionError("learn_algorithm1: config was derived for different (n, t)");
    }
    validate_config(cfg);
    std::mt19937_64 rng(cfg.seed);
    const uint64_t xi0 = q.xi_samples();
    const uint64_t xt0 = q.xi_tilde_samples();
    const uint64_t ms0 = q.measurement_shots();

    LearnOutcome out;
    out.description.num_qubits = n;
    out.description.t = t;

    const GroupLearnResult group = learn_group_xi(q, cfg, rng);
    out.description.generators = group.generators;
    out.resources.elimination_steps = group.elimination_steps;
    if (group.budget_exhausted) {
        out.status = LearnStatus::kBudgetExhausted;
    } else {
        const CliffordCircuit diag = build_diagonalizer(group.generators, n);
        const BadGenResult bad = learn_bad_generators(q, group.generators, diag, cfg, rng);
        out.description.bad_generators = bad.bad_generators;
        out.status = bad.status;
    }
    out.resources.xi_samples = q.xi_samples() - xi0;
    out.resources.xi_tilde_samples = q.xi_tilde_samples() - xt0;
    out.resources.measurement_shots = q.measurement_shots() - ms0;
    return out;
}

LearnOutcome learn_algorithm2(QueryModel &q, size_t n, size_t t, const LearnerConfig &cfg) {
    if (q.num_qubits() != n) {
        throw DimensionError("learn_algorithm2: model width does not match n");
    }
    if (cfg.n != n || cfg.t != t) {
        throw DimensionError("learn_algorithm2: config was derived for different (n, t)");
    }
    validate_config(cfg);
    std::mt19937_64 rng(cfg.seed);
    const uint64_t xi0 = q.xi_samples();
    const uint64_t xt0 = q.xi_tilde_samples();
    const uint64_t ms0 = q.measurement_shots();

    LearnOutcome out;
    out.description.num_qubits = n;
    out.description.t = t;

    // Group recovery: the product of two two-copy Bell samples lies in the
    // stabilizer group with probability at least 2^-6t.
    const size_t rank_target = n > t ? n - t : 0;
    IncrementalSpan span(2 * n);
    std::vector<SignedPauli> gens;
    uint64_t accepts = 0;
    uint64_t pairs = 0;
    bool exhausted = false;
    while (!(accepts >= 2 * n && span.rank() >= rank_target)) {
        if (pairs >= cfg.pair_budget) {
            exhausted = true;
            break;
        }
        const PauliString p1 = q.sample_xi_tilde(rng);
        const PauliString p2 = q.sample_xi_tilde(rng);
        ++pairs;
        const PauliString prod = letters_product(p1, p2);
        const auto sign = test_membership(q, prod, cfg.membership_shots, rng);
        if (!sign) {
            continue;
        }
        ++accepts;
        if (span.try_insert(to_symplectic(prod))) {
            gens.emplace_back(prod, *sign);
        }
    }
    out.description.generators = gens;
    out.resources.elimination_steps = span.elimination_steps();
    if (exhausted) {
        out.status = LearnStatus::kBudgetExhausted;
    } else {
        // Residual tomography: conjugating by the diagonalizer maps every
        // remaining coset representative to a unique word on the last n - m
        // qubits, so sweeping all 4^{n-m} - 1 candidates finds each coset
        // exactly once. The rank target above caps this at 4^t - 1.
        const size_t m = gens.size();
        const CliffordCircuit diag = build_diagonalizer(gens, n);
        const size_t r = n - m;
        const GridValue target = GridValue::pow2(r);
        GridValue total = GridValue::one();
        LearnStatus status = LearnStatus::kSuccess;
        for (uint64_t key = 1; key < (uint64_t(1) << (2 * r)); ++key) {
            PauliString cand(n);
            for (size_t j = 0; j < r; ++j) {
                cand.x.set(m + j, (key >> j) & 1);
                cand.z.set(m + j, (key >> (r + j)) & 1);
            }
            const SignedPauli rep = conjugate_pauli(diag, SignedPauli(cand), Direction::kInverse);
            const auto est = estimate_expectation_exact(q, rep.pauli, t, cfg.estimate_shots, rng);
            if (!est) {
                status = LearnStatus::kAmbiguousEstimate;
                break;
            }
            if (est->is_zero()) {
                continue;  // candidate coset is outside the support
            }
            const GridValue next = total + est->squared();
            if ((target - next).sign() < 0) {
                status = LearnStatus::kAmbiguousEstimate;
                break;
            }
            out.description.bad_generators.push_back(BadGenerator{rep.pauli, *est});
            total = next;
        }
        if (status == LearnStatus::kSuccess && !(total == target)) {
            status = LearnStatus::kAmbiguousEstimate;
        }
        out.status = status;
    }
    out.resources.xi_samples = q.xi_samples() - xi0;
    out.resources.xi_tilde_samples = q.xi_tilde_samples() - xt0;
    out.resources.measurement_shots = q.measurement_shots() - ms0;
    return out;
}

}  // namespace stablearn
