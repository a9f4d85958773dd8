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

#ifndef PMDKIT_PAULI_H
#define PMDKIT_PAULI_H

#include <cstdint>
#include <string>

#include "pmdkit/bits.h"

namespace pmdkit {

/// i^phase * X^x Z^z on n qubits.
///
/// The Hermitian operator written as a tensor product of I/X/Y/Z has
/// phase = (number of Y positions) mod 4, because Y = i X Z.
struct PauliOperator {
    size_t n = 0;
    BitVec x;
    BitVec z;
    uint8_t phase = 0;

    PauliOperator() = default;
    explicit PauliOperator(size_t n_) : n(n_), x(n_), z(n_) {}
    PauliOperator(BitVec x_, BitVec z_, uint8_t phase_);

    static PauliOperator identity(size_t n) { return PauliOperator(n); }
    /// Hermitian, sign + product of single-qubit Paulis with the given exponents.
    static PauliOperator hermitian(BitVec x, BitVec z);
    /// Hermitian from the 2n-bit vector (x|z).
    static PauliOperator from_symplectic(const BitVec &xz);
    static PauliOperator single(size_t n, size_t q, char symbol);

    /// Parses an optional sign prefix (+, -, i, -i, +i) followed by I/X/Y/Z symbols.
    static PauliOperator from_string(const std::string &s);
    /// Inverse of from_string; the sign prefix is omitted when it is +.
    std::string str() const;
    /// Symbols only, ignoring phase.
    std::string symbols() const;

    BitVec symplectic() const { return x.concat(z); }
    size_t weight() const { return (x | z).popcount(); }
    bool is_identity_mod_phase() const { return x.none() && z.none(); }
    bool equal_mod_phase(const PauliOperator &o) const { return x == o.x && z == o.z; }
    bool operator==(const PauliOperator &o) const { return equal_mod_phase(o) && phase == o.phase; }

    /// Phase exponent relative to the Hermitian form: 0 -> +, 1 -> i, 2 -> -, 3 -> -i.
    uint8_t sign_exponent() const;
    char symbol(size_t q) const;
};

/// <x_P, z_Q> xor <x_Q, z_P>; 1 iff P and Q anticommute.
bool symplectic_product(const PauliOperator &p, const PauliOperator &q);
PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q);
PauliOperator pauli_inverse(const PauliOperator &p);

/// Symplectic form on (x|z) vectors of length 2n.
bool symplectic_form(const BitVec &a, const BitVec &b);
/// (x|z) -> (z|x), so that ordinary dot product with it gives the symplectic form.
BitVec symplectic_swap(const BitVec &v);

}  // namespace pmdkit

#endif
