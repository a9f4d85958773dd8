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

#ifndef PMDKIT_AQEC_H
#define PMDKIT_AQEC_H

#include <string>
#include <vector>

#include "pmdkit/densesim.h"
#include "pmdkit/pmd.h"
#include "pmdkit/qlde.h"

namespace pmdkit {

/// Outer stabilizer code around a PMD.
///
/// Register layout on outer.n() physical qubits after Enc_Q^dag:
///   [message (k) | PMD ancilla (lambda) | key (lambda) | outer ancilla (outer.r())]
/// Decoder flags F_1..F_L are appended after the code register.
struct ComposedCode {
    PmdCode pmd;
    StabilizerCode outer;
    DenseOperator encoder;  // 2^n x 2^k isometry

    size_t n() const { return outer.n(); }
    size_t k() const { return pmd.message; }
    std::string layout() const;
};

ComposedCode compose(const PmdCode &pmd, const StabilizerCode &outer);
/// Enc_Q (Enc_PMD x I) in place on an n-qubit vector.
void apply_composed_encode(const ComposedCode &code, CVec &v);

/// One Kraus operator of an erasure adversary: a local matrix on `support`, which is also the set
/// of qubits erased in this branch.
struct AdversaryKraus {
    std::vector<size_t> support;
    CMat op;
};

struct ErasureAdversary {
    size_t n = 0;
    bool adaptive = false;
    std::vector<AdversaryKraus> kraus;

    /// sum K^dag K - I (Frobenius) on the full register.
    double cptp_defect() const;
    size_t max_support() const;
    /// Throws unless CPTP (1e-10) and every support has size <= budget.
    void validate(size_t budget) const;

    static ErasureAdversary identity(size_t n);
    static ErasureAdversary non_adaptive(const QuantumChannel &ch);
    /// Measure q0 in the Z basis, then apply per_outcome[o]; branch supports are {q0} u support(o).
    static ErasureAdversary measure_then_act(size_t n, size_t q0, const QuantumChannel &on_zero,
                                             const QuantumChannel &on_one);
    /// Random adversary with every support of size <= budget.
    static ErasureAdversary random(size_t n, size_t budget, bool adaptive, Rng &rng);

    /// JSON: either a channel record {"support", "kraus"} or {"branches": [{"support", "kraus"}, ...]}
    /// where each branch "kraus" is a single matrix.
    std::string str() const;
    static ErasureAdversary parse(const std::string &text, size_t n);
};

struct ErasedBranch {
    CVec state;  // unnormalized
    std::vector<size_t> erased;
};

/// One branch per (input branch, Kraus operator). With `refill`, each erased set is replaced by
/// maximally mixed qubits, realized as 4^t equally weighted Pauli branches on the erased qubits.
std::vector<ErasedBranch> apply_adversary(const std::vector<ErasedBranch> &in, const ErasureAdversary &adv,
                                          bool refill = true);

/// Sequential list correction: for each candidate, undo it, test the inner PMD and record the verdict
/// in a flag qubit. Applied to |phi>|0^L>; returns the state on n + L qubits.
CVec list_correct_apply(const ComposedCode &code, const CorrectionList &list, const CVec &phi);
/// Dense matrix of the list-correction unitary; guarded at n + L <= 10.
DenseOperator list_correct_unitary(const ComposedCode &code, const CorrectionList &list);

/// Flags after list correction when the i-th candidate (0-based) is the accepted one: 0^i 1^{L-i}.
uint64_t accepted_flags(size_t i, size_t list_size);

struct DecodedBranch {
    SyndromeVector syndrome;
    CorrectionList list;
    CVec state;  // on n + L qubits, unnormalized
};

/// Composed decoder: every syndrome outcome of the outer code, its correction list, and the corrected
/// state. Outcomes of zero probability are kept (with zero state) so the branch structure does not
/// depend on the input. Throws std::logic_error when a nonzero outcome has an empty list.
std::vector<DecodedBranch> composed_decode(const ComposedCode &code, const ErasedBranch &branch);

struct HarnessReport {
    double fidelity = 0;
    double epsilon = 0;
    size_t list_max = 0;  // realized L
    double bound = 0;     // 1 - 3 eps^{1/2} L^{3/4}
    double weight = 0;    // total output weight for a normalized input
    bool pass = false;
};

/// Entanglement fidelity of Dec o A o Enc on the k message qubits.
HarnessReport erasure_harness(const ComposedCode &code, const ErasureAdversary &adv, double epsilon);

}  // namespace pmdkit

#endif
