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

#include "stablearn/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <set>

#include "stablearn/errors.hpp"

namespace stablearn {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

/// Exact sign of u + v*sqrt(2).
int sign_zroot2(int64_t u, int64_t v) {
    if (u == 0 && v == 0) {
        return 0;
    }
    if (u >= 0 && v >= 0) {
        return +1;
    }
    if (u <= 0 && v <= 0) {
        return -1;
    }
    // Mixed signs: compare u^2 against 2 v^2. Equality is impossible for
    // nonzero integers since sqrt(2) is irrational.
    __int128 uu = static_cast<__int128>(u) * u;
    __int128 vv2 = 2 * static_cast<__int128>(v) * v;
    if (u > 0) {
        return uu > vv2 ? +1 : -1;
    }
    return vv2 > uu ? +1 : -1;
}

}  // namespace

GridValue::GridValue(int64_t a, int64_t b, size_t t) : a_(a), b_(b), t_(t) {
    canonicalize();
}

GridValue GridValue::pow2(size_t k) {
    return GridValue(int64_t{1} << k, 0, 0);
}

void GridValue::canonicalize() {
    while (t_ > 0 && a_ % 2 == 0) {
        int64_t half = a_ / 2;
        a_ = b_;
        b_ = half;
        t_--;
    }
    if (a_ == 0 && b_ == 0) {
        t_ = 0;
    }
}

void GridValue::raise_to(size_t t) {
    while (t_ < t) {
        int64_t na = 2 * b_;
        b_ = a_;
        a_ = na;
        t_++;
    }
}

double GridValue::value() const {
    double num = static_cast<double>(a_) + static_cast<double>(b_) * kSqrt2;
    double v = std::ldexp(num, -static_cast<int>(t_ / 2));
    if (t_ % 2 == 1) {
        v /= kSqrt2;
    }
    return v;
}

GridValue GridValue::operator+(const GridValue &o) const {
    GridValue x = *this;
    GridValue y = o;
    size_t t = std::max(x.t_, y.t_);
    x.raise_to(t);
    y.raise_to(t);
    return GridValue(x.a_ + y.a_, x.b_ + y.b_, t);
}

GridValue GridValue::operator-(const GridValue &o) const {
    return *this + (-o);
}

GridValue GridValue::operator-() const {
    GridValue v = *this;
    v.a_ = -v.a_;
    v.b_ = -v.b_;
    return v;
}

GridValue GridValue::operator*(const GridValue &o) const {
    return GridValue(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_, t_ + o.t_);
}

int GridValue::sign() const {
    return sign_zroot2(a_, b_);
}

bool GridValue::abs_leq_one() const {
    // |v| <= 1  <=>  (a + b sqrt2)^2 <= 2^t.
    if (t_ > 62) {
        throw ResourceError("GridValue::abs_leq_one: scale too large");
    }
    int64_t u = a_ * a_ + 2 * b_ * b_ - (int64_t{1} << t_);
    return sign_zroot2(u, 2 * a_ * b_) <= 0;
}

std::string GridValue::str() const {
    return "(" + std::to_string(a_) + (b_ >= 0 ? "+" : "") + std::to_string(b_) + "*sqrt2)/sqrt2^" +
           std::to_string(t_);
}

const std::vector<GridValue> &enumerate_grid(size_t t) {
    static std::mutex mu;
    static std::vector<std::vector<GridValue>> cache;
    if (t > kMaxGridLevel) {
        throw ResourceError("enumerate_grid: level exceeds cap");
    }
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= t) {
        size_t level = cache.size();
        std::set<std::array<int64_t, 3>> seen;
        auto add = [&seen](const GridValue &v) {
            seen.insert({v.a(), v.b(), static_cast<int64_t>(v.t())});
        };
        if (level == 0) {
            add(GridValue::from_int(-1));
            add(GridValue::zero());
            add(GridValue::one());
        } else {
            const std::vector<GridValue> &prev = cache[level - 1];
            for (const GridValue &v : prev) {
                add(v);
            }
            for (size_t i = 0; i < prev.size(); i++) {
                for (size_t j = i; j < prev.size(); j++) {
                    GridValue w = (prev[i] + prev[j]).div_sqrt2();
                    if (w.abs_leq_one()) {
                        add(w);
                    }
                }
            }
        }
        std::vector<GridValue> values;
        values.reserve(seen.size());
        for (const auto &key : seen) {
            values.emplace_back(key[0], key[1], static_cast<size_t>(key[2]));
        }
        std::sort(values.begin(), values.end(), [](const GridValue &a, const GridValue &b) {
            return (a - b).sign() < 0;
        });
        cache.push_back(std::move(values));
    }
    return cache[t];
}

double grid_min_gap(size_t t) {
    const std::vector<GridValue> &grid = enumerate_grid(t);
    double gap = 2.0;
    for (size_t i = 1; i < grid.size(); i++) {
        gap = std::min(gap, grid[i].value() - grid[i - 1].value());
    }
    return gap;
}

double grid_min_positive(size_t t) {
    const std::vector<GridValue> &grid = enumerate_grid(t);
    for (const GridValue &v : grid) {
        if (v.sign() > 0) {
            return v.value();
        }
    }
    return 1.0;
}

double delta_lower_bound(size_t t) {
    return (kSqrt2 / 6.0) * std::pow(1.0 / kSqrt2 - 0.5, static_cast<double>(t));
}

std::optional<GridValue> nearest_grid(double x, size_t t) {
    const std::vector<GridValue> &grid = enumerate_grid(t);
    double radius = grid_min_gap(t) / 2;
    size_t best = 0;
    double best_dist = 4.0;
    // Grids stay small (hundreds of points through level 12), so a linear
    // scan is simpler than keeping a parallel array of doubles for search.
    for (size_t i = 0; i < grid.size(); i++) {
        double d = std::abs(grid[i].value() - x);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    if (best_dist < radius) {
        return grid[best];
    }
    return std::nullopt;
}

}  // namespace stablearn
