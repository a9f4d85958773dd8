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

#ifndef PMDKIT_STABILIZER_H
#define PMDKIT_STABILIZER_H

#include <string>
#include <vector>

#include "pmdkit/bits.h"
#include "pmdkit/circuit.h"
#include "pmdkit/pauli.h"

namespace pmdkit {

/// Which end of the candidate order wins when the encoder derivation has a free choice.
enum class EncoderConvention { kLowestPivot, kHighestPivot };

using SyndromeVector = BitVec;

/// [[n, k]] stabilizer code. Generators are Hermitian with sign +1.
///
/// Derived data is computed at construction:
///   - normalizer basis: 2n - r vectors spanning N(Q) mod phase;
///   - logical pairs (Xbar_i, Zbar_i) with <Xbar_i, Zbar_j> = delta_ij;
///   - destabilizers d_j with <d_i, g_j> = delta_ij;
///   - an encoder circuit U with U Z_{k+j} U^dag = g_j, U X_i U^dag = Xbar_i, U Z_i U^dag = Zbar_i.
/// Qubit layout of the encoder input is [message (k) | ancilla (r)].
class StabilizerCode {
   public:
    StabilizerCode() = default;
    StabilizerCode(size_t n, std::vector<PauliOperator> gens,
                   EncoderConvention conv = EncoderConvention::kLowestPivot);

    size_t n() const { return n_; }
    size_t r() const { return gens_.size(); }
    size_t k() const { return n_ - gens_.size(); }
    const std::vector<PauliOperator> &gens() const { return gens_; }
    const std::vector<PauliOperator> &normalizer_basis() const { return normalizer_; }
    /// [Xbar_0 .. Xbar_{k-1}, Zbar_0 .. Zbar_{k-1}].
    const std::vector<PauliOperator> &logical_representatives() const { return logicals_; }
    const std::vector<PauliOperator> &destabilizers() const { return destabilizers_; }
    const Circuit &encoder() const { return encoder_; }
    EncoderConvention convention() const { return conv_; }

    /// Generator rows as (x|z) vectors.
    std::vector<BitVec> generator_rows() const;

    /// Text format: header "n=<int> k=<int>" then one generator per line.
    std::string str() const;
    static StabilizerCode parse(const std::string &text);

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> gens_;
    std::vector<PauliOperator> normalizer_;
    std::vector<PauliOperator> logicals_;
    std::vector<PauliOperator> destabilizers_;
    Circuit encoder_;
    EncoderConvention conv_ = EncoderConvention::kLowestPivot;
};

SyndromeVector syndrome(const StabilizerCode &code, const PauliOperator &e);
std::vector<PauliOperator> normalizer_basis(const StabilizerCode &code);
std::vector<PauliOperator> logical_representatives(const StabilizerCode &code);
/// True iff P Q^{-1} lies in S(Q) up to phase.
bool is_logically_equivalent(const StabilizerCode &code, const PauliOperator &p, const PauliOperator &q);
/// Membership in the stabilizer group modulo phase.
bool in_stabilizer_group(const StabilizerCode &code, const PauliOperator &p);
/// Zero syndrome.
bool in_normalizer(const StabilizerCode &code, const PauliOperator &p);

/// CSS code from parity-check matrices (rows of length n). X checks span C2^perp = rowspace(H2),
/// Z checks span C1^perp = rowspace(H1). Throws if C2^perp is not inside C1.
StabilizerCode css_from_classical(const std::vector<BitVec> &h1, const std::vector<BitVec> &h2, size_t n);

/// Symplectic Gaussian elimination encoder (see StabilizerCode).
Circuit standard_form_encoder(const StabilizerCode &code);

/// Minimum weight over nonidentity normalizer elements (stabilizers included). Brute force.
size_t pure_distance(const StabilizerCode &code);

/// All 2^r stabilizer group elements with exact signs, index bits selecting generators.
std::vector<PauliOperator> stabilizer_group(const StabilizerCode &code);

}  // namespace pmdkit

#endif
