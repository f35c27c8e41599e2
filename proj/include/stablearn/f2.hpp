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
#include <vector>

#include "stablearn/bits.hpp"

namespace stablearn {

/** BitMatrix: a dense matrix over F2 stored as one BitVec per row. */
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool v) {
        rows_[r].set(c, v);
    }

    BitVec &row(size_t r) {
        return rows_[r];
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }

    void append_row(const BitVec &v) {
        if (v.size() != cols_ && num_rows() > 0) {
            throw DimensionError("append_row: column count mismatch");
        }
        if (num_rows() == 0) {
            cols_ = v.size();
        }
        rows_.push_back(v);
    }

    bool operator==(const BitMatrix &other) const = default;

  private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix reduced;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

/// Reduced row echelon form by Gaussian elimination, O(rows^2 * cols / 64).
RrefResult rref(const BitMatrix &m);

/// True iff v is an F2 combination of the rows of basis.
bool in_span(const BitVec &v, const BitMatrix &basis);

/// Maximal independent subset of the input rows, keeping the first-seen
/// representative of each new dimension. Deterministic in the input order.
BitMatrix extract_basis(const std::vector<BitVec> &vectors);

/**
 * IncrementalSpan: an echelonized basis that supports O(rank * cols / 64)
 * membership queries and insertions. Rows are kept fully reduced so a query
 * is a single sweep over the stored pivots.
 */
class IncrementalSpan {
  public:
    explicit IncrementalSpan(size_t cols) : cols_(cols) {}

    size_t num_cols() const {
        return cols_;
    }
    size_t rank() const {
        return rows_.size();
    }

    bool contains(const BitVec &v) const;

    /// Adds v to the span. Returns true iff the rank grew.
    bool try_insert(const BitVec &v);

    /// Number of row xor operations performed so far (a work counter).
    uint64_t elimination_steps() const {
        return ops_;
    }

  private:
    BitVec reduce(const BitVec &v) const;

    size_t cols_;
    std::vector<BitVec> rows_;
    std::vector<size_t> pivots_;
    mutable uint64_t ops_ = 0;
};

}  // namespace stablearn
