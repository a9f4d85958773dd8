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

#ifndef PMDKIT_PTC_H
#define PMDKIT_PTC_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmdkit/galois.h"
#include "pmdkit/rng.h"
#include "pmdkit/stabilizer.h"

namespace pmdkit {

/// Exact probability num/den.
struct Fraction {
    uint64_t num = 0;
    uint64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    bool operator==(const Fraction &o) const { return num * o.den == o.num * den; }
};

/// Keyed family of [[n, n - lambda]] codes, key alpha in GF(2^lambda) indexed by its coefficient word.
struct PtcFamily {
    size_t n = 0;
    int lambda = 0;
    size_t r = 0;
    FieldSpec field;
    DualBasisPair basis;
    std::vector<StabilizerCode> codes;

    size_t num_keys() const { return codes.size(); }
    const StabilizerCode &code(uint32_t key) const { return codes.at(key); }
};

/// The polynomial-vector family v_alpha = (1, alpha, ..., alpha^{2r-1}). Generators of Q_alpha are
/// E_{x,z} with x = phi1(gamma * v_alpha[0..r)) and z = phi2(gamma * v_alpha[r..2r)), gamma over
/// the polynomial basis. Qubit t of block i carries coordinate t of field entry i.
PtcFamily build_bcgst_family(size_t n, int lambda, EncoderConvention conv = EncoderConvention::kLowestPivot);
/// Same with an explicit alpha basis for phi1 (phi2 uses its dual).
PtcFamily build_bcgst_family(size_t n, int lambda, const std::vector<FieldElement> &alpha_basis,
                             EncoderConvention conv = EncoderConvention::kLowestPivot);

/// Field vector v_alpha of length 2r.
std::vector<FieldElement> bcgst_vector(const FieldElement &alpha, size_t r);

/// Guard for exhaustive loops (4^n * 2^lambda iterations).
constexpr uint64_t kExhaustiveGuard = 100000000ULL;

struct PtcErrorResult {
    Fraction epsilon;
    PauliOperator argmax;
};

/// max over E != I of Pr_k[E in N(Q_k)]. Throws std::length_error past the guard.
PtcErrorResult measure_strong_ptc_error(const PtcFamily &family);

struct PtcSampleResult {
    double max_observed = 0;  // lower bound on the true maximum
    PauliOperator argmax;
    uint64_t samples = 0;
    /// 95% upper confidence bound on the fraction of Paulis whose key fraction exceeds max_observed
    /// (rule of three), i.e. how much of the Pauli group the sample could have missed.
    double missed_mass_upper95 = 0;
};
PtcSampleResult sample_strong_ptc_error(const PtcFamily &family, uint64_t samples, Rng &rng);

struct PairwiseResult {
    Fraction delta;
    uint32_t worst_shift = 0;
};

/// max over s != 0 of Pr_k[S(Q_k) has a nonidentity element in N(Q_{k+s})].
PairwiseResult measure_pairwise_detectability(const PtcFamily &family);

/// True iff some nonidentity element of S(Q_a) commutes with every generator of Q_b.
bool stabilizer_meets_normalizer(const PtcFamily &family, uint32_t a, uint32_t b);

/// All alpha with ((alpha+beta)^r - alpha^r)(alpha^{r+1}(alpha+beta)^{r+1} - 1) = 0.
std::vector<FieldElement> pbeta_roots(const FieldElement &beta, size_t r);

}  // namespace pmdkit

#endif
