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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "dense_reference.hpp"
#include "stablearn/errors.hpp"
#include "stablearn/oracle.hpp"
#include "stablearn/statevector.hpp"

using namespace stablearn;

namespace {

StateVector t_on_plus() {
    DopedCircuit c(1);
    c.append(GateKind::kH, 0);
    c.append(GateKind::kT, 0);
    return run_circuit(c);
}

/// Bell-sampling probability from the dense algebra: |<psi|P|phi>|^2 / 2^n.
double dense_bell_prob(const StateVector &psi, const StateVector &phi, const PauliString &p) {
    const auto v = dense_ref::to_eigen(psi);
    const auto w = dense_ref::to_eigen(phi);
    const std::complex<double> amp = v.adjoint() * dense_ref::dense_pauli(p) * w;
    return std::norm(amp) / static_cast<double>(psi.amps.size());
}

}  // namespace

TEST_CASE("distribution invariants are enforced by finalize") {
    const StateVector psi = t_on_plus();
    PauliDistribution d = exact_xi(psi);
    CHECK_NOTHROW(d.finalize());

    PauliDistribution unsorted = d;
    std::swap(unsorted.support[0], unsorted.support[1]);
    CHECK_THROWS_AS(unsorted.finalize(), ConsistencyError);

    PauliDistribution negative = d;
    negative.probs[0] = -negative.probs[0];
    CHECK_THROWS_AS(negative.finalize(), ConsistencyError);

    PauliDistribution off_sum = d;
    off_sum.probs[0] += 1e-3;
    CHECK_THROWS_AS(off_sum.finalize(), ConsistencyError);

    PauliDistribution mismatch = d;
    mismatch.probs.pop_back();
    CHECK_THROWS_AS(mismatch.finalize(), ConsistencyError);
}

TEST_CASE("the T-on-plus measurement distribution is the textbook one") {
    const PauliDistribution xi = exact_xi(t_on_plus());
    REQUIRE(xi.support.size() == 3);
    CHECK(xi.support[0].letters() == "I");
    CHECK(xi.support[1].letters() == "X");
    CHECK(xi.support[2].letters() == "Y");
    CHECK(xi.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(xi.probs[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(xi.probs[2] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(xi.prob_of(pauli_from_text("Z")) == 0.0);
    CHECK(xi.prob_of(pauli_from_text("X")) == doctest::Approx(0.25));
}

TEST_CASE("the two-copy distribution of T-on-plus, worked by hand") {
    // psi = (|0> + e^{i pi/4}|1>)/sqrt(2):
    //   |<psi|I|psi*>|^2 = 1/2, X -> 1, Y -> 0, Z -> 1/2; each divided by 2.
    const StateVector psi = t_on_plus();
    const PauliDistribution xt = exact_xi_tilde(psi, conjugate_state(psi));
    REQUIRE(xt.support.size() == 3);
    CHECK(xt.support[0].letters() == "I");
    CHECK(xt.support[1].letters() == "X");
    CHECK(xt.support[2].letters() == "Z");
    CHECK(xt.probs[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(xt.probs[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(xt.probs[2] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("exact distributions match the dense Bell probabilities") {
    std::mt19937_64 rng(10001);
    for (int it = 0; it < 15; ++it) {
        const size_t n = 1 + rng() % 3;
        const DopedCircuit c = dense_ref::random_circuit(n, 60, true, rng);
        const StateVector psi = run_circuit(c);
        const StateVector psi_conj = conjugate_state(psi);
        const PauliDistribution xi = exact_xi(psi);
        const PauliDistribution xt = exact_xi_tilde(psi, psi_conj);
        double sum_xi = 0;
        double sum_xt = 0;
        for (uint64_t key = 0; key < (uint64_t(1) << (2 * n)); ++key) {
            const PauliString p = unpack_letters(key, n);
            const double want_xi = dense_bell_prob(psi, psi, p);
            const double want_xt = dense_bell_prob(psi, psi_conj, p);
            CHECK(xi.prob_of(p) == doctest::Approx(want_xi).epsilon(1e-10));
            CHECK(xt.prob_of(p) == doctest::Approx(want_xt).epsilon(1e-10));
            sum_xi += want_xi;
            sum_xt += want_xt;
        }
        CHECK(sum_xi == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(sum_xt == doctest::Approx(1.0).epsilon(1e-10));
        // Support is sorted by packed key with no duplicates.
        for (size_t i = 1; i < xi.support.size(); ++i) {
            CHECK(pack_letters(xi.support[i]) > pack_letters(xi.support[i - 1]));
        }
    }
}

TEST_CASE("xi-tilde validates its conjugate argument") {
    const StateVector psi = t_on_plus();
    CHECK_THROWS_AS(exact_xi_tilde(psi, psi), ConsistencyError);
}

TEST_CASE("distribution caps") {
    const StateVector psi = t_on_plus();
    CHECK_THROWS_AS(exact_xi(psi, 0), ResourceError);
}

TEST_CASE("sampling frequencies converge to the exact probabilities") {
    const PauliDistribution xi = exact_xi(t_on_plus());
    std::mt19937_64 rng(10002);
    std::map<std::string, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        counts[xi.sample(rng).letters()]++;
    }
    // Three-sigma binomial bands.
    for (size_t i = 0; i < xi.support.size(); ++i) {
        const double p = xi.probs[i];
        const double sigma = std::sqrt(p * (1 - p) * draws);
        CHECK(std::abs(counts[xi.support[i].letters()] - p * draws) < 3.5 * sigma);
    }
    // Identical seeds replay identical streams.
    std::mt19937_64 r1(42);
    std::mt19937_64 r2(42);
    for (int i = 0; i < 50; ++i) {
        CHECK(xi.sample(r1) == xi.sample(r2));
    }
}

TEST_CASE("query model accounts copies exactly") {
    QueryModel q(t_on_plus());
    std::mt19937_64 rng(10003);
    CHECK(q.num_qubits() == 1);
    for (int i = 0; i < 5; ++i) {
        q.sample_xi(rng);
    }
    for (int i = 0; i < 3; ++i) {
        q.sample_xi_tilde(rng);
    }
    for (int i = 0; i < 7; ++i) {
        q.measure_pauli_shot(pauli_from_text("X"), rng);
    }
    CHECK(q.xi_samples() == 5);
    CHECK(q.xi_tilde_samples() == 3);
    CHECK(q.measurement_shots() == 7);
    CHECK(q.copies_of_psi() == 5 + 2 * 3 + 7);
    CHECK(q.copies_of_psi_conj() == 5);
}

TEST_CASE("measurement shots follow the Born rule") {
    DopedCircuit c(1);
    c.append(GateKind::kH, 0);
    QueryModel q(run_circuit(c));
    std::mt19937_64 rng(10004);

    // <X> = 1 on |+>: every shot is +1. A negated word always gives -1.
    PauliString minus_x = pauli_from_text("X");
    minus_x.phase_exp = 2;
    for (int i = 0; i < 50; ++i) {
        CHECK(q.measure_pauli_shot(pauli_from_text("X"), rng) == 1);
        CHECK(q.measure_pauli_shot(minus_x, rng) == -1);
    }

    // <Z> = 0 on |+>: shots are a fair coin.
    int plus = 0;
    const int shots = 20000;
    for (int i = 0; i < shots; ++i) {
        plus += q.measure_pauli_shot(pauli_from_text("Z"), rng) == 1 ? 1 : 0;
    }
    CHECK(std::abs(plus - shots / 2) < 3.5 * std::sqrt(0.25 * shots));

    PauliString odd = pauli_from_text("X");
    odd.phase_exp = 1;
    CHECK_THROWS_AS(q.measure_pauli_shot(odd, rng), FormatError);
}

TEST_CASE("query model samples follow their distributions") {
    std::mt19937_64 rng(10005);
    const DopedCircuit c = dense_ref::random_circuit(2, 40, true, rng);
    const StateVector psi = run_circuit(c);
    QueryModel q(psi);
    const PauliDistribution xi = exact_xi(psi);
    const PauliDistribution xt = exact_xi_tilde(psi, conjugate_state(psi));
    std::map<uint64_t, int> xi_counts;
    std::map<uint64_t, int> xt_counts;
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) {
        xi_counts[pack_letters(q.sample_xi(rng))]++;
        xt_counts[pack_letters(q.sample_xi_tilde(rng))]++;
    }
    for (size_t i = 0; i < xi.support.size(); ++i) {
        const double p = xi.probs[i];
        if (p < 1e-6) {
            continue;
        }
        const double sigma = std::sqrt(p * (1 - p) * draws);
        CHECK(std::abs(xi_counts[pack_letters(xi.support[i])] - p * draws) < 4 * sigma);
    }
    for (size_t i = 0; i < xt.support.size(); ++i) {
        const double p = xt.probs[i];
        if (p < 1e-6) {
            continue;
        }
        const double sigma = std::sqrt(p * (1 - p) * draws);
        CHECK(std::abs(xt_counts[pack_letters(xt.support[i])] - p * draws) < 4 * sigma);
    }
}

TEST_CASE("query model rejects unnormalized states") {
    StateVector bad = t_on_plus();
    bad.amps[0] *= 2.0;
    CHECK_THROWS_AS(QueryModel{bad}, ConsistencyError);
}
