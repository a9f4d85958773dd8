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

#ifndef PMDKIT_BITS_H
#define PMDKIT_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pmdkit {

/// Dense bit vector packed into 64-bit words. Bits past `size()` are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_string(const std::string &s);  // "0110" -> bit 0 is s[0]
    static BitVec from_u64(uint64_t v, size_t n);     // bit i = (v >> i) & 1

    size_t size() const { return n_; }
    size_t num_words() const { return w_.size(); }
    const uint64_t *words() const { return w_.data(); }
    uint64_t *words() { return w_.data(); }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &o) {
        for (size_t k = 0; k < w_.size(); k++) w_[k] ^= o.w_[k];
        return *this;
    }
    BitVec &operator&=(const BitVec &o) {
        for (size_t k = 0; k < w_.size(); k++) w_[k] &= o.w_[k];
        return *this;
    }
    BitVec &operator|=(const BitVec &o) {
        for (size_t k = 0; k < w_.size(); k++) w_[k] |= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }

    bool operator==(const BitVec &o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec &o) const { return !(*this == o); }

    /// Lexicographic order reading bit 0 first (bit 0 is the most significant position).
    bool lex_less(const BitVec &o) const;

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Parity of the bitwise AND.
    bool dot(const BitVec &o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w_.size(); k++) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1;
    }

    /// Index of lowest set bit, or size() if none.
    size_t first_one() const;

    BitVec slice(size_t start, size_t len) const;
    void assign_slice(size_t start, const BitVec &src);
    BitVec concat(const BitVec &o) const;

    uint64_t to_u64() const { return w_.empty() ? 0 : w_[0]; }
    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (size_t k = 0; k < v.num_words(); k++) {
            h ^= v.words()[k] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace pmdkit

#endif
