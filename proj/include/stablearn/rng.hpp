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

#include <cmath>
#include <cstdint>
#include <random>

namespace stablearn {

// Draws are implemented with plain arithmetic on raw mt19937_64 words instead
// of std::uniform_*_distribution so that a fixed seed reproduces the same
// stream on every standard library.

/// Uniform double in [0, 1).
inline double random_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). bound must be positive.
inline uint64_t random_below(std::mt19937_64 &rng, uint64_t bound) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

inline bool random_bit(std::mt19937_64 &rng) {
    return rng() & 1;
}

/// Standard normal via Box-Muller.
inline double random_gaussian(std::mt19937_64 &rng) {
    double u1 = random_unit(rng);
    double u2 = random_unit(rng);
    while (u1 <= 0.0) {
        u1 = random_unit(rng);
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace stablearn
