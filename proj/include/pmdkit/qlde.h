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

#ifndef PMDKIT_QLDE_H
#define PMDKIT_QLDE_H

#include <cstdint>
#include <vector>

#include "pmdkit/rng.h"
#include "pmdkit/stabilizer.h"

namespace pmdkit {

/// Erased qubit positions, sorted and distinct.
struct ErasurePattern {
    size_t n = 0;
    std::vector<size_t> erased;

    ErasurePattern() = default;
    ErasurePattern(size_t n, std::vector<size_t> erased);  // sorts, validates
    bool contains(size_t q) const;
    /// Erased qubits as a comma-separated string, "-" when empty.
    std::string str() const;
    static ErasurePattern parse(const std::string &text, size_t n);
};

/// Logically distinct candidate corrections sharing one syndrome, ordered by (x|z).
struct CorrectionList {
    std::vector<PauliOperator> entries;
    size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
};

/// Largest list the solver will materialize.
constexpr uint64_t kMaxListSize = uint64_t{1} << 20;

/// All e supported on `erased` with H e = s, in increasing order of the erased-coordinate word.
std::vector<BitVec> classical_erasure_list_decode(const std::vector<BitVec> &h, size_t n,
                                                  const ErasurePattern &erased, const BitVec &s);

/// One representative per logical class of Paulis supported on `erased` with syndrome s.
/// Each representative is the lexicographically smallest (x|z) vector of its class.
CorrectionList erasure_list_decode(const StabilizerCode &code, const ErasurePattern &erased, const SyndromeVector &s);

/// |N_E / S_E| = 2^{dim N_E - dim S_E} for Paulis supported on the erased set.
uint64_t quotient_size(const StabilizerCode &code, const ErasurePattern &erased);

struct ProfileResult {
    uint64_t list_size = 1;
    ErasurePattern worst;
    size_t max_erased = 0;  // floor(delta * n)
};

/// Max of quotient_size over erased sets of size <= floor(delta * n). Guarded at n <= 12.
ProfileResult list_size_profile(const StabilizerCode &code, double delta);
/// Max over erased sets of 2^{|E| - rank H_E}, the classical list size for a consistent syndrome.
ProfileResult classical_list_profile(const std::vector<BitVec> &h, size_t n, double delta);

struct RandomCss {
    StabilizerCode code;
    std::vector<BitVec> g;   // the k1 sampled generator vectors of C1
    std::vector<BitVec> h1;  // parity checks of C1 (Z stabilizers)
    std::vector<BitVec> h2;  // first k2 = n - k1 vectors (X stabilizers, parity checks of C2)
    size_t attempts = 0;     // vector draws including rejected ones
    bool rate_ok = false;
};

/// CSS(C1, C2) from k1 = (n + k)/2 independent uniform vectors. Resamples dependent draws.
RandomCss sample_random_css(size_t n, size_t k, Rng &rng);

/// Realized number of logical qubits when the k1 vectors are drawn once without the independence
/// check; equals k exactly when the draw is full rank.
size_t random_css_raw_logicals(size_t n, size_t k, Rng &rng);

}  // namespace pmdkit

#endif
