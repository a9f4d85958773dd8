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

#include "pmdkit/pmd.h"

#include <cmath>
#include <stdexcept>

namespace pmdkit {

namespace {

struct Best {
    double value = -1;
    uint64_t index = 0;
    void offer(double v, uint64_t i) {
        if (v > value + 1e-12 || (std::abs(v - value) <= 1e-12 && i < index)) {
            value = v;
            index = i;
        }
    }
};

// E_C (on n code qubits) applied to each column of a 2^n x c block, Hermitian form.
CMat apply_code_pauli(uint64_t xm, uint64_t zm, const CMat &b) {
    cplx p = 1;
    CMat out(b.rows(), b.cols());
    for (int64_t row = 0; row < b.rows(); row++) {
        uint64_t r = static_cast<uint64_t>(row);
        cplx s = (std::popcount(r & zm) & 1) ? -p : p;
        out.row(r ^ xm) = s * b.row(r);
    }
    return out;
}

// Bit mask (qubit 0 most significant) from a per-qubit word (qubit q = bit q).
uint64_t qubit_mask(uint64_t word, size_t n) {
    uint64_t m = 0;
    for (size_t q = 0; q < n; q++)
        if ((word >> q) & 1) m |= uint64_t{1} << (n - 1 - q);
    return m;
}

PauliOperator total_pauli(const PmdCode &pmd, uint64_t xc, uint64_t zc, uint32_t a, uint32_t b) {
    BitVec x(pmd.total), z(pmd.total);
    for (size_t q = 0; q < pmd.n; q++) {
        x.set(q, (xc >> q) & 1);
        z.set(q, (zc >> q) & 1);
    }
    for (size_t t = 0; t < pmd.lambda; t++) {
        x.set(pmd.n + t, (a >> t) & 1);
        z.set(pmd.n + t, (b >> t) & 1);
    }
    return PauliOperator::hermitian(x, z);
}

// Applies mats[k] to the code qubits for each key word k, on a register of nreg qubits with the
// PMD occupying [offset, offset + total).
void apply_keyed(const PmdCode &pmd, const std::vector<CMat> &mats, bool adjoint, CVec &v, size_t nreg,
                 size_t offset) {
    if (offset + pmd.total > nreg) throw std::invalid_argument("PMD register does not fit");
    auto pos = [&](size_t q) { return uint64_t{1} << (nreg - 1 - offset - q); };
    uint64_t dc = uint64_t{1} << pmd.n;
    std::vector<uint64_t> cspread(dc), kspread(pmd.family.num_keys());
    uint64_t used = 0;
    for (uint64_t l = 0; l < dc; l++) {
        uint64_t idx = 0;
        for (size_t q = 0; q < pmd.n; q++)
            if ((l >> (pmd.n - 1 - q)) & 1) idx |= pos(q);
        cspread[l] = idx;
    }
    for (uint64_t k = 0; k < kspread.size(); k++) {
        uint64_t idx = 0;
        for (size_t t = 0; t < pmd.lambda; t++)
            if ((k >> t) & 1) idx |= pos(pmd.n + t);
        kspread[k] = idx;
    }
    used = cspread[dc - 1] | kspread[kspread.size() - 1];
    CVec loc(dc), res(dc);
    for (uint64_t base = 0; base < static_cast<uint64_t>(v.size()); base++) {
        if (base & used) continue;
        for (uint64_t k = 0; k < kspread.size(); k++) {
            uint64_t b = base | kspread[k];
            for (uint64_t l = 0; l < dc; l++) loc[l] = v[b | cspread[l]];
            if (adjoint) {
                res.noalias() = mats[k].adjoint() * loc;
            } else {
                res.noalias() = mats[k] * loc;
            }
            for (uint64_t l = 0; l < dc; l++) v[b | cspread[l]] = res[l];
        }
    }
}

void hadamard_keys(const PmdCode &pmd, CVec &v, size_t nreg, size_t offset) {
    for (size_t t = 0; t < pmd.lambda; t++) {
        apply_gate(Gate{GateType::H, static_cast<uint32_t>(offset + pmd.n + t)}, v, nreg);
    }
}

}  // namespace

uint64_t PmdCode::key_index(uint32_t k) const { return qubit_mask(k, lambda); }

DenseOperator PmdCode::projector() const {
    if (total > 10) throw std::length_error("PmdCode::projector: dense projector limited to 10 qubits");
    DenseOperator p;
    p.m = encoder.m * encoder.m.adjoint();
    return p;
}

PmdCode build_pmd(const PtcFamily &family) {
    PmdCode pmd;
    pmd.family = family;
    pmd.n = family.n;
    pmd.lambda = static_cast<size_t>(family.lambda);
    pmd.message = pmd.n - pmd.lambda;
    pmd.total = pmd.n + pmd.lambda;
    if (pmd.total > 12) {
        throw std::length_error("build_pmd: n + lambda = " + std::to_string(pmd.total) + " exceeds 12");
    }
    check_qubits(pmd.total, "build_pmd");
    size_t nk = family.num_keys();
    double norm = 1 / std::sqrt(static_cast<double>(nk));
    pmd.encoder.m = CMat::Zero(uint64_t{1} << pmd.total, uint64_t{1} << pmd.message);
    for (uint32_t k = 0; k < nk; k++) {
        const StabilizerCode &c = family.code(k);
        pmd.blocks.push_back(codespace_isometry(c).m);
        pmd.unitaries.push_back(circuit_unitary(c.encoder()).m);
        uint64_t ki = pmd.key_index(k);
        const CMat &b = pmd.blocks.back();
        for (int64_t row = 0; row < b.rows(); row++) {
            pmd.encoder.m.row((static_cast<uint64_t>(row) << pmd.lambda) | ki) = norm * b.row(row);
        }
    }
    return pmd;
}

double pmd_restricted_norm(const PmdCode &pmd, const PauliOperator &e) {
    if (e.n != pmd.total) throw std::invalid_argument("pmd_restricted_norm: operator size mismatch");
    uint64_t xc = 0, zc = 0;
    uint32_t a = 0, b = 0;
    for (size_t q = 0; q < pmd.n; q++) {
        xc |= uint64_t{e.x.get(q)} << q;
        zc |= uint64_t{e.z.get(q)} << q;
    }
    for (size_t t = 0; t < pmd.lambda; t++) {
        a |= uint32_t{e.x.get(pmd.n + t)} << t;
        b |= uint32_t{e.z.get(pmd.n + t)} << t;
    }
    size_t nk = pmd.family.num_keys();
    uint64_t xm = qubit_mask(xc, pmd.n), zm = qubit_mask(zc, pmd.n);
    CMat s = CMat::Zero(uint64_t{1} << pmd.message, uint64_t{1} << pmd.message);
    for (uint32_t k = 0; k < nk; k++) {
        CMat eb = apply_code_pauli(xm, zm, pmd.blocks[k]);
        double sign = (std::popcount(b & k) & 1) ? -1 : 1;
        s += sign * (pmd.blocks[k ^ a].adjoint() * eb);
    }
    return operator_norm(s) / static_cast<double>(nk);
}

PmdEpsilonResult measure_pmd_epsilon(const PmdCode &pmd) {
    if (pmd.total > 10) {
        throw std::length_error("measure_pmd_epsilon: exhaustive sweep limited to 10 qubits; use sampling");
    }
    size_t n = pmd.n;
    uint32_t nk = static_cast<uint32_t>(pmd.family.num_keys());
    uint64_t ncode = uint64_t{1} << (2 * n);
    size_t dm = size_t{1} << pmd.message;
    Best best;
#pragma omp parallel
    {
        Best local;
        std::vector<CMat> eb(nk), m(nk);
#pragma omp for schedule(dynamic, 16)
        for (int64_t ci = 0; ci < static_cast<int64_t>(ncode); ci++) {
            uint64_t xc = static_cast<uint64_t>(ci) >> n, zc = static_cast<uint64_t>(ci) & ((uint64_t{1} << n) - 1);
            uint64_t xm = qubit_mask(xc, n), zm = qubit_mask(zc, n);
            for (uint32_t k = 0; k < nk; k++) eb[k] = apply_code_pauli(xm, zm, pmd.blocks[k]);
            for (uint32_t a = 0; a < nk; a++) {
                for (uint32_t k = 0; k < nk; k++) m[k].noalias() = pmd.blocks[k ^ a].adjoint() * eb[k];
                for (uint32_t b = 0; b < nk; b++) {
                    if (ci == 0 && a == 0 && b == 0) continue;
                    CMat s = CMat::Zero(dm, dm);
                    for (uint32_t k = 0; k < nk; k++) {
                        if (std::popcount(b & k) & 1) {
                            s -= m[k];
                        } else {
                            s += m[k];
                        }
                    }
                    // Frobenius norm bounds the operator norm; skip candidates that cannot win.
                    if (s.norm() / nk < local.value - 1e-12) continue;
                    double v = operator_norm(s) / nk;
                    local.offer(v, (static_cast<uint64_t>(ci) * nk + a) * nk + b);
                }
            }
        }
#pragma omp critical
        best.offer(local.value, local.index);
    }
    uint32_t b = best.index % nk, a = (best.index / nk) % nk;
    uint64_t ci = best.index / nk / nk;
    return {best.value, total_pauli(pmd, ci >> n, ci & ((uint64_t{1} << n) - 1), a, b)};
}

PmdEpsilonResult measure_pmd_epsilon_dense(const PmdCode &pmd) {
    if (pmd.total > 6) throw std::length_error("measure_pmd_epsilon_dense: limited to 6 qubits");
    size_t t = pmd.total;
    Best best;
    for (uint64_t i = 1; i < (uint64_t{1} << (2 * t)); i++) {
        BitVec x(t), z(t);
        for (size_t q = 0; q < t; q++) {
            x.set(q, (i >> q) & 1);
            z.set(q, (i >> (t + q)) & 1);
        }
        PauliOperator e = PauliOperator::hermitian(x, z);
        CMat eb = pauli_matrix(e).m * pmd.encoder.m;
        best.offer(operator_norm(pmd.encoder.m.adjoint() * eb), i);
    }
    BitVec x(t), z(t);
    for (size_t q = 0; q < t; q++) {
        x.set(q, (best.index >> q) & 1);
        z.set(q, (best.index >> (t + q)) & 1);
    }
    return {best.value, PauliOperator::hermitian(x, z)};
}

PmdEpsilonResult sample_pmd_epsilon(const PmdCode &pmd, uint64_t samples, Rng &rng) {
    PmdEpsilonResult res;
    res.epsilon = -1;
    size_t t = pmd.total;
    for (uint64_t s = 0; s < samples; s++) {
        BitVec x(t), z(t);
        do {
            for (size_t q = 0; q < t; q++) {
                x.set(q, rng.bit());
                z.set(q, rng.bit());
            }
        } while (x.none() && z.none());
        PauliOperator e = PauliOperator::hermitian(x, z);
        double v = pmd_restricted_norm(pmd, e);
        if (v > res.epsilon) {
            res.epsilon = v;
            res.argmax = e;
        }
    }
    return res;
}

double pmd_epsilon_bound(double ptc_epsilon, double delta, size_t lambda) {
    return std::max(ptc_epsilon, std::sqrt(std::ldexp(1.0, -static_cast<int>(lambda)) + delta));
}

void apply_pmd_encode(const PmdCode &pmd, CVec &v, size_t nreg, size_t offset) {
    hadamard_keys(pmd, v, nreg, offset);
    apply_keyed(pmd, pmd.unitaries, false, v, nreg, offset);
}

void apply_pmd_decode(const PmdCode &pmd, CVec &v, size_t nreg, size_t offset) {
    apply_keyed(pmd, pmd.unitaries, true, v, nreg, offset);
    hadamard_keys(pmd, v, nreg, offset);
}

void apply_auth(const PmdCode &pmd, CVec &v) {
    uint64_t dim = uint64_t{1} << pmd.total;
    if (static_cast<uint64_t>(v.size()) != 2 * dim) throw std::invalid_argument("apply_auth: expected total + 1 qubits");
    CVec c0(dim), c1(dim);
    for (uint64_t i = 0; i < dim; i++) {
        c0[i] = v[2 * i];
        c1[i] = v[2 * i + 1];
    }
    const CMat &b = pmd.encoder.m;
    CVec p0 = b * (b.adjoint() * c0);
    CVec p1 = b * (b.adjoint() * c1);
    CVec n0 = p1 + (c0 - p0);
    CVec n1 = p0 - (c1 - p1);
    apply_pmd_decode(pmd, n1, pmd.total);
    for (uint64_t i = 0; i < dim; i++) {
        v[2 * i] = n0[i];
        v[2 * i + 1] = n1[i];
    }
}

DenseOperator auth_unitary(const PmdCode &pmd) {
    check_qubits(pmd.total + 1, "auth_unitary");
    if (pmd.total + 1 > 10) throw std::length_error("auth_unitary: dense Auth limited to 10 qubits; use apply_auth");
    uint64_t d = uint64_t{1} << (pmd.total + 1);
    DenseOperator u;
    u.m = CMat::Zero(d, d);
    for (uint64_t i = 0; i < d; i++) {
        CVec e = CVec::Zero(d);
        e[i] = 1;
        apply_auth(pmd, e);
        u.m.col(i) = e;
    }
    return u;
}

}  // namespace pmdkit
