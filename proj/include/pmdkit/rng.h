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

#ifndef PMDKIT_RNG_H
#define PMDKIT_RNG_H

#include <cstdint>

namespace pmdkit {

/// Counter-based generator: output i is a SplitMix64 finalizer applied to (seed, i).
/// Every sampling routine takes one of these by reference; there is no global state.
class Rng {
   public:
    explicit Rng(uint64_t seed = 0) : seed_(seed) {}

    uint64_t next_u64() { return mix(seed_ * 0xD1342543DE82EF95ULL + (counter_++) * 0x9E3779B97F4A7C15ULL); }

    /// Uniform in [0, bound) by rejection, so results do not depend on the standard library.
    uint64_t uniform(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal();

    bool bit() { return next_u64() >> 63; }

    /// Independent stream derived from this generator's seed and a label.
    Rng fork(uint64_t label) const { return Rng(mix(seed_ ^ mix(label + 0x632BE59BD9B4E019ULL))); }

    uint64_t seed() const { return seed_; }
    uint64_t counter() const { return counter_; }

   private:
    static uint64_t mix(uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t seed_;
    uint64_t counter_ = 0;
};

}  // namespace pmdkit

#endif
