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

#ifndef PMDKIT_PMD_H
#define PMDKIT_PMD_H

#include <vector>

#include "pmdkit/densesim.h"
#include "pmdkit/ptc.h"

namespace pmdkit {

/// Key-superposed PTC encoding.
///
/// Register layout on n + lambda qubits: [message (n - lambda) | PTC ancilla (lambda) | key (lambda)].
/// Key qubit t holds coefficient bit t of the field element, so X^a Z^b on the key register acts as
/// |k> -> (-1)^{b.k} |k + a>.
struct PmdCode {
    PtcFamily family;
    size_t n = 0;       // code qubits
    size_t lambda = 0;  // key qubits
    size_t message = 0;
    size_t total = 0;
    /// blocks[k] = Enc_k restricted to |m>|0^lambda>, 2^n x 2^message, indexed by key word.
    std::vector<CMat> blocks;
    /// Full encoder unitaries Enc_k on n qubits, indexed by key word.
    std::vector<CMat> unitaries;
    /// 2^-lambda/2 sum_k blocks[k] (x) |k>, 2^total x 2^message.
    DenseOperator encoder;

    /// Basis index of the key register holding key word k.
    uint64_t key_index(uint32_t k) const;
    /// B B^dag; guarded at total <= 10.
    DenseOperator projector() const;
};

PmdCode build_pmd(const PtcFamily &family);

struct PmdEpsilonResult {
    double epsilon = 0;
    PauliOperator argmax;  // on total qubits, Hermitian form
};

/// ||B^dag E B|| for one Pauli on the total register.
double pmd_restricted_norm(const PmdCode &pmd, const PauliOperator &e);
/// Exhaustive max over all E != I (mod phase). Uses the key-shift block structure; feasible to
/// 4^n * 4^lambda operators with total <= 10.
PmdEpsilonResult measure_pmd_epsilon(const PmdCode &pmd);
/// Same quantity by multiplying dense Pauli matrices directly (total <= 6); used as a cross-check.
PmdEpsilonResult measure_pmd_epsilon_dense(const PmdCode &pmd);
/// Uniform non-identity samples; returns a lower bound on epsilon.
PmdEpsilonResult sample_pmd_epsilon(const PmdCode &pmd, uint64_t samples, Rng &rng);

/// max(eps_ptc, sqrt(2^-lambda + delta)).
double pmd_epsilon_bound(double ptc_epsilon, double delta, size_t lambda);

/// Auth = C(Enc^dag) (Pi (x) X_F + (1 - Pi) (x) Z_F) applied in place to a vector on total + 1
/// qubits, flag last. Enc is the full unitary (sum_k Enc_k (x) |k><k|)(I (x) H^lambda).
void apply_auth(const PmdCode &pmd, CVec &v);
/// Dense Auth matrix; guarded at total + 1 <= 10.
DenseOperator auth_unitary(const PmdCode &pmd);
/// Enc^dag on a total-qubit vector (or on the leading total qubits of a larger register).
void apply_pmd_decode(const PmdCode &pmd, CVec &v, size_t nreg, size_t offset = 0);
void apply_pmd_encode(const PmdCode &pmd, CVec &v, size_t nreg, size_t offset = 0);

}  // namespace pmdkit

#endif
