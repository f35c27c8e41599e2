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

#include "stablearn/f2.hpp"

#include <utility>

namespace stablearn {

RrefResult rref(const BitMatrix &m) {
    RrefResult out;
    out.reduced = m;
    size_t r = 0;
    for (size_t c = 0; c < m.num_cols() && r < m.num_rows(); c++) {
        size_t pivot = BitVec::npos;
        for (size_t i = r; i < m.num_rows(); i++) {
            if (out.reduced.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == BitVec::npos) {
            continue;
        }
        std::swap(out.reduced.row(pivot), out.reduced.row(r));
        for (size_t i = 0; i < m.num_rows(); i++) {
            if (i != r && out.reduced.get(i, c)) {
                out.reduced.row(i) ^= out.reduced.row(r);
            }
        }
        out.pivot_cols.push_back(c);
        r++;
    }
    out.rank = r;
    return out;
}

bool in_span(const BitVec &v, const BitMatrix &basis) {
    IncrementalSpan span(v.size());
    for (size_t r = 0; r < basis.num_rows(); r++) {
        span.try_insert(basis.row(r));
    }
    return span.contains(v);
}

BitMatrix extract_basis(const std::vector<BitVec> &vectors) {
    BitMatrix out;
    if (vectors.empty()) {
        return out;
    }
    IncrementalSpan span(vectors.front().size());
    for (const BitVec &v : vectors) {
        if (span.try_insert(v)) {
            out.append_row(v);
        }
    }
    return out;
}

BitVec IncrementalSpan::reduce(const BitVec &v) const {
    BitVec w = v;
    for (size_t i = 0; i < rows_.size(); i++) {
        if (w.get(pivots_[i])) {
            w ^= rows_[i];
            ops_++;
        }
    }
    return w;
}

bool IncrementalSpan::contains(const BitVec &v) const {
    if (v.size() != cols_) {
        throw DimensionError("IncrementalSpan: vector length mismatch");
    }
    return !reduce(v).any();
}

bool IncrementalSpan::try_insert(const BitVec &v) {
    if (v.size() != cols_) {
        throw DimensionError("IncrementalSpan: vector length mismatch");
    }
    BitVec w = reduce(v);
    size_t p = w.first_set();
    if (p == BitVec::npos) {
        return false;
    }
    // Back-substitute to keep earlier rows reduced against the new pivot.
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].get(p)) {
            rows_[i] ^= w;
            ops_++;
        }
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) {
        at++;
    }
    rows_.insert(rows_.begin() + at, std::move(w));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
}

}  // namespace stablearn
