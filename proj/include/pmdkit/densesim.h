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

#ifndef PMDKIT_DENSESIM_H
#define PMDKIT_DENSESIM_H

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "pmdkit/circuit.h"
#include "pmdkit/pauli.h"
#include "pmdkit/rng.h"
#include "pmdkit/stabilizer.h"

namespace pmdkit {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Qubit q of an n-qubit register is bit (n - 1 - q) of the basis index, so the
/// first-listed qubit is the most significant and kron(A, B) puts A on the low qubit indices.

/// Global size guard (default 14, overridden by PMDKIT_MAX_QUBITS).
size_t max_qubits();
void check_qubits(size_t n, const char *what);

struct DenseState {
    size_t n = 0;
    CVec amps;

    static DenseState basis(size_t n, uint64_t index);
    double norm() const { return amps.norm(); }
};

struct DenseOperator {
    CMat m;
    size_t rows() const { return m.rows(); }
    size_t cols() const { return m.cols(); }
};

DenseOperator pauli_matrix(const PauliOperator &p);
/// v <- P v on an n-qubit vector; `offset` shifts P onto qubits [offset, offset + P.n).
void apply_pauli(const PauliOperator &p, CVec &v, size_t n, size_t offset = 0);
void apply_gate(const Gate &g, CVec &v, size_t n, size_t offset = 0);
void apply_circuit(const Circuit &c, CVec &v, size_t n, size_t offset = 0);
/// Applies a 2^s x 2^s matrix to the listed qubits (first listed = most significant local bit).
void apply_local(const CMat &m, const std::vector<size_t> &qubits, CVec &v, size_t n);
/// Calls fn(slice, rest) for every assignment `rest` of the qubits outside `qubits`, where slice holds
/// the amplitudes over the listed qubits (first listed = most significant local bit); writes it back.
void for_each_slice(CVec &v, size_t n, const std::vector<size_t> &qubits,
                    const std::function<void(CVec &slice, uint64_t rest)> &fn);
/// Dense unitary of a circuit (n <= 10).
DenseOperator circuit_unitary(const Circuit &c);

/// Columns U|m>|0^r> for each message basis state m.
DenseOperator codespace_isometry(const StabilizerCode &code);
/// 2^-r sum over the stabilizer group.
DenseOperator stabilizer_projector(const StabilizerCode &code);

/// Largest singular value.
double operator_norm(const CMat &m);

/// Kraus channel on `support` (qubit indices of an n-qubit system). Matrices are local (2^|support|).
struct QuantumChannel {
    size_t n = 0;
    std::vector<size_t> support;
    std::vector<CMat> kraus;

    QuantumChannel() = default;
    QuantumChannel(size_t n, std::vector<size_t> support, std::vector<CMat> kraus);  // validates CPTP

    /// sum K^dag K - I in Frobenius norm.
    double cptp_defect() const;
    /// JSON record {"support": [...], "kraus": [[[re, im], ...], ...]}. `n` is not stored.
    std::string str() const;
    static QuantumChannel parse(const std::string &text, size_t n);
    QuantumChannel on(size_t n, std::vector<size_t> support) const;

    static QuantumChannel identity(size_t n, size_t q);
    static QuantumChannel unitary(size_t n, std::vector<size_t> support, const CMat &u);
    static QuantumChannel depolarizing(size_t n, size_t q, double p);
    /// Off-diagonal terms scaled by 1 - p: Kraus sqrt(1 - p/2) I, sqrt(p/2) Z.
    static QuantumChannel dephasing(size_t n, size_t q, double p);
    static QuantumChannel amplitude_damping(size_t n, size_t q, double gamma);
    static QuantumChannel measure_z(size_t n, size_t q);
    /// rho -> tr(rho) sigma on the support.
    static QuantumChannel replace(size_t n, std::vector<size_t> support, const CMat &sigma);
    /// Haar-like random channel from a random isometry with `count` Kraus operators.
    static QuantumChannel random(size_t n, std::vector<size_t> support, size_t count, Rng &rng);
};

struct Branch {
    double weight = 1;
    CVec state;  // normalized unless weight == 0
};

/// One output branch per Kraus operator per input branch.
std::vector<Branch> apply_channel(const QuantumChannel &ch, const std::vector<Branch> &in);

/// Linear map from a message state to a fixed-length list of unnormalized outputs on
/// (message qubits first) x auxiliary qubits. The list length and each entry's dimension must not
/// depend on the input; different entries may have different auxiliary sizes.
using Pipeline = std::function<std::vector<CVec>(const CVec &)>;

/// <Phi| (pipeline x I_R)(Phi) |Phi> with Phi maximally entangled on k message qubits.
double entanglement_fidelity(const Pipeline &pipeline, size_t k);
/// 2 sqrt(1 - F).
double fidelity_distance_bound(double f);

/// Random complex matrix with iid normal entries.
CMat random_gaussian(size_t rows, size_t cols, Rng &rng);
CVec random_state(size_t n, Rng &rng);

}  // namespace pmdkit

#endif
