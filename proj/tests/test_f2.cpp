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

#include <random>
#include <vector>

#include "dense_reference.hpp"
#include "stablearn/bits.hpp"
#include "stablearn/errors.hpp"
#include "stablearn/f2.hpp"

using namespace stablearn;

namespace {

BitVec make_vec(const std::vector<int> &bits) {
    BitVec v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        v.set(i, bits[i] != 0);
    }
    return v;
}

std::vector<int> to_ints(const BitVec &v) {
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v.get(i) ? 1 : 0;
    }
    return out;
}

BitVec random_vec(size_t n, std::mt19937_64 &rng) {
    BitVec v(n);
    for (size_t i = 0; i < n; ++i) {
        v.set(i, rng() & 1);
    }
    return v;
}

}  // namespace

TEST_CASE("bit vectors work across word boundaries") {
    BitVec v(130);
    CHECK(v.size() == 130);
    CHECK_FALSE(v.any());
    CHECK(v.first_set() == BitVec::npos);
    v.set(0, true);
    v.set(63, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.any());
    CHECK(v.popcount() == 4);
    CHECK(v.get(63));
    CHECK(v.get(64));
    CHECK_FALSE(v.get(65));
    CHECK(v.first_set() == 0);
    v.toggle(0);
    CHECK(v.first_set() == 63);
    CHECK(v.popcount() == 3);

    BitVec w(130);
    w.set(64, true);
    w.set(100, true);
    CHECK(BitVec::and_popcount(v, w) == 1);
    v ^= w;
    CHECK(v.popcount() == 3);
    CHECK_FALSE(v.get(64));
    CHECK(v.get(100));
}

TEST_CASE("rref matches a hand-worked example") {
    // rows: 110, 011, 101 -> rank 2 (third row is the sum of the others)
    BitMatrix m(3, 3);
    m.row(0) = make_vec({1, 1, 0});
    m.row(1) = make_vec({0, 1, 1});
    m.row(2) = make_vec({1, 0, 1});
    const RrefResult r = rref(m);
    CHECK(r.rank == 2);
    REQUIRE(r.pivot_cols.size() == 2);
    CHECK(r.pivot_cols[0] == 0);
    CHECK(r.pivot_cols[1] == 1);
    CHECK(to_ints(r.reduced.row(0)) == std::vector<int>{1, 0, 1});
    CHECK(to_ints(r.reduced.row(1)) == std::vector<int>{0, 1, 1});
}

TEST_CASE("rref rank agrees with the independent elimination oracle") {
    std::mt19937_64 rng(8101);
    for (int it = 0; it < 100; ++it) {
        const size_t rows = 1 + rng() % 8;
        const size_t cols = 1 + rng() % 90;
        BitMatrix m(rows, cols);
        std::vector<std::vector<int>> ints;
        for (size_t r = 0; r < rows; ++r) {
            m.row(r) = random_vec(cols, rng);
            ints.push_back(to_ints(m.row(r)));
        }
        const RrefResult res = rref(m);
        CHECK(res.rank == dense_ref::rank_oracle(ints));
        // Pivot columns are strictly increasing and each holds a single 1.
        for (size_t i = 0; i < res.pivot_cols.size(); ++i) {
            if (i > 0) {
                CHECK(res.pivot_cols[i] > res.pivot_cols[i - 1]);
            }
            size_t ones = 0;
            for (size_t r = 0; r < rows; ++r) {
                ones += res.reduced.get(r, res.pivot_cols[i]) ? 1 : 0;
            }
            CHECK(ones == 1);
            CHECK(res.reduced.get(i, res.pivot_cols[i]));
        }
    }
}

TEST_CASE("in_span accepts exactly the row combinations") {
    std::mt19937_64 rng(8102);
    for (int it = 0; it < 50; ++it) {
        const size_t cols = 4 + rng() % 40;
        const size_t rows = 1 + rng() % 5;
        BitMatrix basis(rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            basis.row(r) = random_vec(cols, rng);
        }
        // Random combination of rows must lie in the span.
        BitVec combo(cols);
        for (size_t r = 0; r < rows; ++r) {
            if (rng() & 1) {
                combo ^= basis.row(r);
            }
        }
        CHECK(in_span(combo, basis));
    }

    // A vector with support outside every row cannot be in the span.
    BitMatrix basis(2, 4);
    basis.row(0) = make_vec({1, 1, 0, 0});
    basis.row(1) = make_vec({0, 1, 1, 0});
    CHECK_FALSE(in_span(make_vec({0, 0, 0, 1}), basis));
    CHECK(in_span(make_vec({1, 0, 1, 0}), basis));
    CHECK(in_span(make_vec({0, 0, 0, 0}), basis));
}

TEST_CASE("extract_basis keeps the first-seen representative") {
    const BitVec a = make_vec({1, 0, 0});
    const BitVec b = make_vec({0, 1, 0});
    const BitVec ab = make_vec({1, 1, 0});
    const BitMatrix basis = extract_basis({a, ab, b});
    REQUIRE(basis.num_rows() == 2);
    CHECK(basis.row(0) == a);
    CHECK(basis.row(1) == ab);  // b = a + ab is dependent by then

    CHECK(extract_basis({}).num_rows() == 0);
    CHECK(extract_basis({BitVec(5)}).num_rows() == 0);
}

TEST_CASE("incremental span mirrors batch extraction on random streams") {
    std::mt19937_64 rng(8103);
    for (int it = 0; it < 50; ++it) {
        const size_t cols = 2 + rng() % 70;
        IncrementalSpan span(cols);
        std::vector<BitVec> seen;
        std::vector<std::vector<int>> ints;
        uint64_t last_ops = 0;
        for (int step = 0; step < 30; ++step) {
            BitVec v = random_vec(cols, rng);
            if (!seen.empty() && (rng() & 1)) {
                // Half the time feed a dependent vector on purpose.
                v = seen[rng() % seen.size()];
            }
            seen.push_back(v);
            ints.push_back(to_ints(v));
            const size_t oracle_rank = dense_ref::rank_oracle(ints);
            const size_t rank_before = span.rank();
            const bool grew = span.try_insert(v);
            CHECK(span.rank() == oracle_rank);
            CHECK(grew == (span.rank() == rank_before + 1));
            CHECK(span.contains(v));
            CHECK(span.elimination_steps() >= last_ops);
            last_ops = span.elimination_steps();
        }
        // contains() agrees with in_span on fresh vectors.
        BitMatrix basis(0, cols);
        for (const BitVec &v : seen) {
            basis.append_row(v);
        }
        for (int probe = 0; probe < 20; ++probe) {
            const BitVec v = random_vec(cols, rng);
            CHECK(span.contains(v) == in_span(v, basis));
        }
    }
}

TEST_CASE("incremental span rejects the zero vector and width mismatches") {
    IncrementalSpan span(6);
    CHECK_FALSE(span.try_insert(BitVec(6)));
    CHECK(span.rank() == 0);
    CHECK(span.contains(BitVec(6)));  // zero vector is always in the span
    CHECK_THROWS_AS(span.try_insert(BitVec(5)), DimensionError);
    CHECK_THROWS_AS(span.contains(BitVec(7)), DimensionError);
}
