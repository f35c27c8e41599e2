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
#include <string>
#include <vector>

namespace stablearn {

/// Largest supported scale exponent for exact values and grid enumeration.
constexpr size_t kMaxGridLevel = 12;

/**
 * GridValue: the exact number (a + b*sqrt(2)) / sqrt(2)^t with integer a, b.
 *
 * Every Pauli expectation of a state prepared by a Clifford circuit doped
 * with t single-qubit pi/8-phase gates lands on such a value. The canonical
 * form strips factors of sqrt(2): whenever t > 0 and a is even, the triple
 * (a, b, t) reduces to (b, a/2, t-1). Equality compares canonical triples.
 */
class GridValue {
  public:
    GridValue() = default;
    GridValue(int64_t a, int64_t b, size_t t);

    static GridValue zero() {
        return GridValue();
    }
    static GridValue one() {
        return GridValue(1, 0, 0);
    }
    static GridValue from_int(int64_t v) {
        return GridValue(v, 0, 0);
    }
    /// 2^k as a GridValue.
    static GridValue pow2(size_t k);

    int64_t a() const {
        return a_;
    }
    int64_t b() const {
        return b_;
    }
    size_t t() const {
        return t_;
    }

    bool is_zero() const {
        return a_ == 0 && b_ == 0;
    }

    double value() const;

    GridValue operator+(const GridValue &o) const;
    GridValue operator-(const GridValue &o) const;
    GridValue operator-() const;
    GridValue operator*(const GridValue &o) const;
    GridValue squared() const {
        return *this * *this;
    }

    /// Exact value divided by sqrt(2).
    GridValue div_sqrt2() const {
        return GridValue(a_, b_, t_ + 1);
    }

    bool operator==(const GridValue &o) const = default;

    /// Exact sign of the value: -1, 0, or +1.
    int sign() const;

    /// Exact |value| <= 1 test.
    bool abs_leq_one() const;

    /// "(a+b*sqrt2)/sqrt2^t" rendering for diagnostics.
    std::string str() const;

  private:
    void canonicalize();
    void raise_to(size_t t);

    int64_t a_ = 0;
    int64_t b_ = 0;
    size_t t_ = 0;
};

/**
 * All values a t-doped preparation can give as a Pauli expectation, sorted
 * ascending. Built by the splitting recursion: level 0 is {-1, 0, +1} and
 * level k+1 adds (u + v)/sqrt(2) for u, v at level k, clipped to [-1, 1].
 * The result is a superset of the achievable values and contains level t-1.
 */
const std::vector<GridValue> &enumerate_grid(size_t t);

/// Minimum spacing between adjacent grid values at level t.
double grid_min_gap(size_t t);

/// Smallest strictly positive grid value at level t.
double grid_min_positive(size_t t);

/// Proven lower bound on the spacing: (sqrt(2)/6) * (1/sqrt(2) - 1/2)^t.
double delta_lower_bound(size_t t);

/**
 * The unique grid point within half the true grid gap of x, or nullopt when
 * x is not that close to any point (an ambiguous estimate).
 */
std::optional<GridValue> nearest_grid(double x, size_t t);

}  // namespace stablearn
