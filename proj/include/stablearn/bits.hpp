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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stablearn/errors.hpp"

namespace stablearn {

/**
 * BitVec: a fixed-length vector over F2, packed into 64-bit words.
 *
 * Bits past the logical length are kept zero so that word-wise popcounts
 * and comparisons never see garbage.
 */
class BitVec {
  public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    size_t size() const {
        return num_bits_;
    }

    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void toggle(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVec &operator^=(const BitVec &other) {
        if (other.num_bits_ != num_bits_) {
            throw DimensionError("BitVec xor: length mismatch");
        }
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    bool operator==(const BitVec &other) const = default;

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }

    /// Index of the lowest set bit, or npos when all bits are clear.
    size_t first_set() const {
        for (size_t w = 0; w < words_.size(); w++) {
            if (words_[w]) {
                return w * 64 + std::countr_zero(words_[w]);
            }
        }
        return npos;
    }

    static size_t and_popcount(const BitVec &a, const BitVec &b) {
        if (a.num_bits_ != b.num_bits_) {
            throw DimensionError("BitVec and_popcount: length mismatch");
        }
        size_t total = 0;
        for (size_t w = 0; w < a.words_.size(); w++) {
            total += std::popcount(a.words_[w] & b.words_[w]);
        }
        return total;
    }

    const std::vector<uint64_t> &words() const {
        return words_;
    }

  private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace stablearn
