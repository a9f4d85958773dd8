// Copyright 2026 The pmdkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PMDKIT_F2_H
#define PMDKIT_F2_H

#include <optional>
#include <vector>

#include "pmdkit/bits.h"

namespace pmdkit {

/// Linear algebra over F2 on row lists. All rows of a matrix share one length.
namespace f2 {

/// Row-reduced echelon form with lowest-index pivoting. Zero rows are dropped.
/// `pivots` (if given) receives the pivot column of each returned row.
std::vector<BitVec> rref(std::vector<BitVec> rows, std::vector<size_t> *pivots = nullptr);

size_t rank(const std::vector<BitVec> &rows);

/// Basis of {v : row . v = 0 for every row}, vectors of length `ncols`.
std::vector<BitVec> kernel(const std::vector<BitVec> &rows, size_t ncols);

/// Some x with row_i . x = b_i for all i, or nullopt when inconsistent.
std::optional<BitVec> solve(const std::vector<BitVec> &rows, const BitVec &b, size_t ncols);

/// Coefficients c with sum_i c_i basis_i = v, or nullopt when v is outside the span.
std::optional<BitVec> span_coefficients(const std::vector<BitVec> &basis, const BitVec &v);

bool in_span(const std::vector<BitVec> &basis, const BitVec &v);

/// Reduce v against an rref basis (as returned by rref) so that v is zero on every pivot.
/// The result is the lexicographically smallest element of v + span(basis).
BitVec reduce(BitVec v, const std::vector<BitVec> &rref_rows, const std::vector<size_t> &pivots);

/// All 2^k combinations of the given basis, in binary counting order of the coefficients.
std::vector<BitVec> enumerate_span(const std::vector<BitVec> &basis, size_t ncols);

}  // namespace f2
}  // namespace pmdkit

#endif
