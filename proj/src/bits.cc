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

#include "pmdkit/bits.h"

#include <stdexcept>

namespace pmdkit {

BitVec BitVec::from_string(const std::string &s) {
    BitVec v(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '1') {
            v.set(i, true);
        } else if (s[i] != '0') {
            throw std::invalid_argument("bit string may only contain 0 and 1: '" + s + "'");
        }
    }
    return v;
}

BitVec BitVec::from_u64(uint64_t value, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n && i < 64; i++) v.set(i, (value >> i) & 1);
    return v;
}

bool BitVec::lex_less(const BitVec &o) const {
    for (size_t k = 0; k < w_.size(); k++) {
        uint64_t d = w_[k] ^ o.w_[k];
        if (d) {
            int p = std::countr_zero(d);
            return ((w_[k] >> p) & 1) == 0;
        }
    }
    return false;
}

size_t BitVec::first_one() const {
    for (size_t k = 0; k < w_.size(); k++) {
        if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    }
    return n_;
}

BitVec BitVec::slice(size_t start, size_t len) const {
    BitVec r(len);
    for (size_t i = 0; i < len; i++) {
        if (get(start + i)) r.set(i, true);
    }
    return r;
}

void BitVec::assign_slice(size_t start, const BitVec &src) {
    for (size_t i = 0; i < src.size(); i++) set(start + i, src.get(i));
}

BitVec BitVec::concat(const BitVec &o) const {
    BitVec r(n_ + o.n_);
    r.assign_slice(0, *this);
    r.assign_slice(n_, o);
    return r;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

}  // namespace pmdkit
