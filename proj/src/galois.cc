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

#include "pmdkit/galois.h"

#include <bit>
#include <cstdio>
#include <regex>
#include <stdexcept>

namespace pmdkit {

namespace {

int degree(uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

uint32_t poly_mod(uint32_t a, uint32_t b) {
    int db = degree(b);
    while (degree(a) >= db) a ^= b << (degree(a) - db);
    return a;
}

// Lowest-weight irreducible per degree; each entry is re-checked by is_irreducible.
constexpr uint32_t kModulusTable[17] = {
    0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11B,
    0x211,  0x409,  0x805,  0x1009, 0x201B, 0x4021, 0x8003, 0x1002B,
};

}  // namespace

bool is_irreducible(uint32_t poly) {
    int d = degree(poly);
    if (d < 1) return false;
    for (uint32_t q = 2; degree(q) <= d / 2; q++) {
        if (poly_mod(poly, q) == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(int m_, uint32_t modulus_) : m(m_), modulus(modulus_) {
    if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in [1, 16]");
    if (degree(modulus) != m) throw std::invalid_argument("modulus degree does not match m");
    if (!is_irreducible(modulus)) throw std::invalid_argument("modulus is reducible");
}

std::string FieldSpec::str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "m:%d, modulus:0x%X", m, modulus);
    return buf;
}

FieldSpec FieldSpec::parse(const std::string &line) {
    static const std::regex re(R"(^\s*m\s*:\s*(\d+)\s*,\s*modulus\s*:\s*(0[xX])?([0-9a-fA-F]+)\s*$)");
    std::smatch mt;
    if (!std::regex_match(line, mt, re)) throw std::invalid_argument("bad field spec line: '" + line + "'");
    return FieldSpec(std::stoi(mt[1]), static_cast<uint32_t>(std::stoul(mt[3], nullptr, 16)));
}

FieldSpec default_field(int m) {
    if (m < 1 || m > 16) throw std::invalid_argument("no table modulus for this degree");
    return FieldSpec(m, kModulusTable[m]);
}

FieldElement::FieldElement(uint32_t c, const FieldSpec &f) : coeffs(c), field(f) {
    if (c >> f.m) throw std::invalid_argument("field element has too many coefficient bits");
}

static void check_same(const FieldElement &a, const FieldElement &b) {
    if (a.field != b.field) throw std::invalid_argument("field elements from different fields");
}

FieldElement gf_add(const FieldElement &a, const FieldElement &b) {
    check_same(a, b);
    return FieldElement(a.coeffs ^ b.coeffs, a.field);
}

uint32_t gf_mul_raw(uint32_t a, uint32_t b, const FieldSpec &f) {
    uint32_t r = 0;
    uint32_t top = uint32_t{1} << f.m;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= f.modulus;
    }
    return r;
}

FieldElement gf_mul(const FieldElement &a, const FieldElement &b) {
    check_same(a, b);
    return FieldElement(gf_mul_raw(a.coeffs, b.coeffs, a.field), a.field);
}

FieldElement gf_pow(const FieldElement &a, uint64_t e) {
    FieldElement result = FieldElement::one(a.field);
    FieldElement base = a;
    while (e) {
        if (e & 1) result = gf_mul(result, base);
        base = gf_mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement gf_inv(const FieldElement &a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return gf_pow(a, a.field.size() - 2);
}

bool gf_trace(const FieldElement &a) {
    uint32_t acc = 0;
    uint32_t c = a.coeffs;
    for (int i = 0; i < a.field.m; i++) {
        acc ^= c;
        c = gf_mul_raw(c, c, a.field);
    }
    // acc lies in the prime subfield, so it is 0 or 1.
    return acc & 1;
}

std::vector<FieldElement> polynomial_basis(const FieldSpec &field) {
    std::vector<FieldElement> b;
    for (int i = 0; i < field.m; i++) b.emplace_back(uint32_t{1} << i, field);
    return b;
}

DualBasisPair compute_dual_basis(const FieldSpec &field, const std::vector<FieldElement> &alpha) {
    int m = field.m;
    if (static_cast<int>(alpha.size()) != m) throw std::invalid_argument("basis must have m elements");
    for (const auto &a : alpha) {
        if (a.field != field) throw std::invalid_argument("basis element from another field");
    }
    // beta_j = sum_l C[l][j] x^l must satisfy sum_l tr(alpha_i x^l) C[l][j] = delta_ij,
    // i.e. C = G^{-1} with G[i][l] = tr(alpha_i x^l). Gauss-Jordan on [G | I].
    std::vector<uint64_t> aug(m);
    for (int i = 0; i < m; i++) {
        uint64_t row = 0;
        for (int l = 0; l < m; l++) {
            if (gf_trace(gf_mul(alpha[i], FieldElement(uint32_t{1} << l, field)))) row |= uint64_t{1} << l;
        }
        row |= uint64_t{1} << (m + i);
        aug[i] = row;
    }
    for (int c = 0; c < m; c++) {
        int p = c;
        while (p < m && !((aug[p] >> c) & 1)) p++;
        if (p == m) throw std::invalid_argument("alpha is not linearly independent over F2");
        std::swap(aug[c], aug[p]);
        for (int i = 0; i < m; i++) {
            if (i != c && ((aug[i] >> c) & 1)) aug[i] ^= aug[c];
        }
    }
    // Row l of the right half is row l of G^{-1}; column j of G^{-1} gives beta_j.
    DualBasisPair out;
    out.alpha = alpha;
    for (int j = 0; j < m; j++) {
        uint32_t coeffs = 0;
        for (int l = 0; l < m; l++) {
            if ((aug[l] >> (m + j)) & 1) coeffs |= uint32_t{1} << l;
        }
        out.beta.emplace_back(coeffs, field);
    }
    return out;
}

uint32_t coordinates(const FieldElement &a, const std::vector<FieldElement> &basis) {
    int m = a.field.m;
    // Solve sum_i c_i basis_i = a over F2 by Gaussian elimination on coefficient words.
    std::vector<uint64_t> rows(m, 0);  // equation per polynomial coefficient l
    for (int l = 0; l < m; l++) {
        uint64_t row = 0;
        for (int i = 0; i < m; i++) {
            if (basis[i].bit(l)) row |= uint64_t{1} << i;
        }
        if (a.bit(l)) row |= uint64_t{1} << m;
        rows[l] = row;
    }
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < m && r < m; c++) {
        int p = r;
        while (p < m && !((rows[p] >> c) & 1)) p++;
        if (p == m) continue;
        std::swap(rows[r], rows[p]);
        for (int i = 0; i < m; i++) {
            if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
        }
        piv.push_back(c);
        r++;
    }
    if (r != m) throw std::invalid_argument("coordinates: not a basis");
    uint32_t out = 0;
    for (int i = 0; i < m; i++) {
        if ((rows[i] >> m) & 1) out |= uint32_t{1} << piv[i];
    }
    return out;
}

uint32_t dual_coordinates(const FieldElement &a, const DualBasisPair &pair) {
    uint32_t out = 0;
    for (size_t i = 0; i < pair.alpha.size(); i++) {
        if (gf_trace(gf_mul(a, pair.alpha[i]))) out |= uint32_t{1} << i;
    }
    return out;
}

}  // namespace pmdkit
