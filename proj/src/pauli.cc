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

#include "pmdkit/pauli.h"

#include <stdexcept>

namespace pmdkit {

PauliOperator::PauliOperator(BitVec x_, BitVec z_, uint8_t phase_)
    : n(x_.size()), x(std::move(x_)), z(std::move(z_)), phase(phase_ & 3) {
    if (x.size() != z.size()) throw std::invalid_argument("Pauli x/z length mismatch");
}

PauliOperator PauliOperator::hermitian(BitVec x, BitVec z) {
    uint8_t ph = static_cast<uint8_t>((x & z).popcount() & 3);
    return PauliOperator(std::move(x), std::move(z), ph);
}

PauliOperator PauliOperator::from_symplectic(const BitVec &xz) {
    if (xz.size() % 2) throw std::invalid_argument("symplectic vector must have even length");
    size_t n = xz.size() / 2;
    return hermitian(xz.slice(0, n), xz.slice(n, n));
}

PauliOperator PauliOperator::single(size_t n, size_t q, char symbol) {
    BitVec x(n), z(n);
    if (symbol == 'X' || symbol == 'Y') x.set(q, true);
    if (symbol == 'Z' || symbol == 'Y') z.set(q, true);
    if (symbol != 'I' && symbol != 'X' && symbol != 'Y' && symbol != 'Z') {
        throw std::invalid_argument(std::string("bad Pauli symbol '") + symbol + "'");
    }
    return hermitian(std::move(x), std::move(z));
}

PauliOperator PauliOperator::from_string(const std::string &s) {
    size_t pos = 0;
    uint8_t sign = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = 2;
        pos++;
    }
    if (pos < s.size() && s[pos] == 'i') {
        sign = (sign + 1) & 3;
        pos++;
    }
    size_t n = s.size() - pos;
    BitVec x(n), z(n);
    for (size_t q = 0; q < n; q++) {
        char c = s[pos + q];
        switch (c) {
            case 'I':
            case '_':
                break;
            case 'X':
                x.set(q, true);
                break;
            case 'Z':
                z.set(q, true);
                break;
            case 'Y':
                x.set(q, true);
                z.set(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli string '" + s + "'");
        }
    }
    PauliOperator p = hermitian(std::move(x), std::move(z));
    p.phase = (p.phase + sign) & 3;
    return p;
}

uint8_t PauliOperator::sign_exponent() const {
    return static_cast<uint8_t>((phase - (x & z).popcount()) & 3);
}

char PauliOperator::symbol(size_t q) const {
    bool a = x.get(q), b = z.get(q);
    return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
}

std::string PauliOperator::symbols() const {
    std::string s(n, 'I');
    for (size_t q = 0; q < n; q++) s[q] = symbol(q);
    return s;
}

std::string PauliOperator::str() const {
    static const char *prefix[4] = {"", "i", "-", "-i"};
    return prefix[sign_exponent()] + symbols();
}

bool symplectic_product(const PauliOperator &p, const PauliOperator &q) {
    if (p.n != q.n) throw std::invalid_argument("symplectic_product: size mismatch");
    return p.x.dot(q.z) ^ q.x.dot(p.z);
}

PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q) {
    if (p.n != q.n) throw std::invalid_argument("pauli_mul: size mismatch");
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}.
    uint8_t ph = static_cast<uint8_t>((p.phase + q.phase + 2 * (q.x.dot(p.z) ? 1 : 0)) & 3);
    return PauliOperator(p.x ^ q.x, p.z ^ q.z, ph);
}

PauliOperator pauli_inverse(const PauliOperator &p) {
    // (i^k X^x Z^z)^{-1} = i^{-k} Z^z X^x = i^{-k} (-1)^{x.z} X^x Z^z.
    uint8_t ph = static_cast<uint8_t>((4 - p.phase + 2 * (p.x.dot(p.z) ? 1 : 0)) & 3);
    return PauliOperator(p.x, p.z, ph);
}

bool symplectic_form(const BitVec &a, const BitVec &b) {
    return a.dot(symplectic_swap(b));
}

BitVec symplectic_swap(const BitVec &v) {
    size_t n = v.size() / 2;
    BitVec r(v.size());
    r.assign_slice(0, v.slice(n, n));
    r.assign_slice(n, v.slice(0, n));
    return r;
}

}  // namespace pmdkit
