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

#include "pmdkit/f2.h"

#include <stdexcept>

namespace pmdkit {
namespace f2 {

std::vector<BitVec> rref(std::vector<BitVec> rows, std::vector<size_t> *pivots) {
    if (pivots) pivots->clear();
    if (rows.empty()) return rows;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); c++) {
        size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) p++;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        }
        if (pivots) pivots->push_back(c);
        r++;
    }
    rows.resize(r);
    return rows;
}

size_t rank(const std::vector<BitVec> &rows) { return rref(rows).size(); }

std::vector<BitVec> kernel(const std::vector<BitVec> &rows, size_t ncols) {
    std::vector<size_t> piv;
    auto red = rref(rows, &piv);
    std::vector<bool> is_piv(ncols, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<BitVec> out;
    for (size_t f = 0; f < ncols; f++) {
        if (is_piv[f]) continue;
        BitVec v(ncols);
        v.set(f, true);
        for (size_t i = 0; i < red.size(); i++) {
            if (red[i].get(f)) v.set(piv[i], true);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<BitVec> solve(const std::vector<BitVec> &rows, const BitVec &b, size_t ncols) {
    if (rows.size() != b.size()) throw std::invalid_argument("f2::solve: rhs length mismatch");
    // Augment each row with its rhs bit in column ncols.
    std::vector<BitVec> aug;
    aug.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        BitVec a(ncols + 1);
        a.assign_slice(0, rows[i]);
        a.set(ncols, b.get(i));
        aug.push_back(std::move(a));
    }
    std::vector<size_t> piv;
    auto red = rref(aug, &piv);
    BitVec x(ncols);
    for (size_t i = 0; i < red.size(); i++) {
        if (piv[i] == ncols) return std::nullopt;
        if (red[i].get(ncols)) x.set(piv[i], true);
    }
    return x;
}

std::optional<BitVec> span_coefficients(const std::vector<BitVec> &basis, const BitVec &v) {
    // Solve sum_i c_i basis_i = v: one equation per coordinate of v.
    size_t k = basis.size();
    size_t n = v.size();
    std::vector<BitVec> eq(n, BitVec(k));
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < n; j++) {
            if (basis[i].get(j)) eq[j].set(i, true);
        }
    }
    return solve(eq, v, k);
}

bool in_span(const std::vector<BitVec> &basis, const BitVec &v) {
    if (v.none()) return true;
    if (basis.empty()) return false;
    std::vector<size_t> piv;
    auto red = rref(basis, &piv);
    return reduce(v, red, piv).none();
}

BitVec reduce(BitVec v, const std::vector<BitVec> &rref_rows, const std::vector<size_t> &pivots) {
    for (size_t i = 0; i < rref_rows.size(); i++) {
        if (v.get(pivots[i])) v ^= rref_rows[i];
    }
    return v;
}

std::vector<BitVec> enumerate_span(const std::vector<BitVec> &basis, size_t ncols) {
    if (basis.size() > 30) throw std::length_error("f2::enumerate_span: span too large");
    std::vector<BitVec> out;
    out.reserve(size_t{1} << basis.size());
    out.emplace_back(ncols);
    for (const auto &b : basis) {
        size_t m = out.size();
        for (size_t i = 0; i < m; i++) out.push_back(out[i] ^ b);
    }
    // Index c holds the combination selected by the bits of c.
    return out;
}

}  // namespace f2
}  // namespace pmdkit
