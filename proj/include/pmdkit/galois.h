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

#ifndef PMDKIT_GALOIS_H
#define PMDKIT_GALOIS_H

#include <cstdint>
#include <string>
#include <vector>

namespace pmdkit {

/// GF(2^m) described by a degree-m irreducible modulus (bit i = coefficient of x^i).
struct FieldSpec {
    int m = 1;
    uint32_t modulus = 0x3;

    FieldSpec() = default;
    /// Validates degree and irreducibility; throws std::invalid_argument otherwise.
    FieldSpec(int m, uint32_t modulus);

    uint32_t size() const { return uint32_t{1} << m; }
    bool operator==(const FieldSpec &o) const { return m == o.m && modulus == o.modulus; }
    bool operator!=(const FieldSpec &o) const { return !(*this == o); }

    /// `m:<int>, modulus:<hex>`
    std::string str() const;
    static FieldSpec parse(const std::string &line);
};

/// Table modulus for m in [1, 16].
FieldSpec default_field(int m);

/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(uint32_t poly);

struct FieldElement {
    uint32_t coeffs = 0;
    FieldSpec field;

    FieldElement() = default;
    FieldElement(uint32_t c, const FieldSpec &f);

    static FieldElement zero(const FieldSpec &f) { return FieldElement(0, f); }
    static FieldElement one(const FieldSpec &f) { return FieldElement(1, f); }

    bool is_zero() const { return coeffs == 0; }
    bool operator==(const FieldElement &o) const { return coeffs == o.coeffs && field == o.field; }
    bool operator!=(const FieldElement &o) const { return !(*this == o); }
    bool bit(int i) const { return (coeffs >> i) & 1; }
};

FieldElement gf_add(const FieldElement &a, const FieldElement &b);
FieldElement gf_mul(const FieldElement &a, const FieldElement &b);
FieldElement gf_pow(const FieldElement &a, uint64_t e);
/// Multiplicative inverse; throws on zero.
FieldElement gf_inv(const FieldElement &a);
/// Sum of the m Frobenius conjugates, returned as a bit.
bool gf_trace(const FieldElement &a);

/// Raw multiply on coefficient words, for inner loops.
uint32_t gf_mul_raw(uint32_t a, uint32_t b, const FieldSpec &f);

struct DualBasisPair {
    std::vector<FieldElement> alpha;
    std::vector<FieldElement> beta;
};

/// beta with tr(alpha_i beta_j) = [i == j]. Throws if alpha is not a basis.
DualBasisPair compute_dual_basis(const FieldSpec &field, const std::vector<FieldElement> &alpha);
std::vector<FieldElement> polynomial_basis(const FieldSpec &field);

/// Coordinates of a in the given basis (bit i = coefficient of basis_i).
uint32_t coordinates(const FieldElement &a, const std::vector<FieldElement> &basis);
/// Coordinates of a w.r.t. beta when (alpha, beta) is dual: bit i = tr(a alpha_i).
uint32_t dual_coordinates(const FieldElement &a, const DualBasisPair &pair);

}  // namespace pmdkit

#endif
