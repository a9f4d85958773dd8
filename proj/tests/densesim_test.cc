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

#include <gtest/gtest.h>

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "pmdkit/densesim.h"
#include "test_codes.h"

using namespace pmdkit;
using namespace pmdkit::testing;

namespace {

CMat m2(cplx a, cplx b, cplx c, cplx d) {
    CMat m(2, 2);
    m << a, b, c, d;
    return m;
}
const CMat kI = CMat::Identity(2, 2);
const CMat kX = m2(0, 1, 1, 0);
const CMat kZ = m2(1, 0, 0, -1);
const CMat kY = m2(0, cplx(0, -1), cplx(0, 1), 0);
const CMat kH = m2(1, 1, 1, -1) / std::sqrt(2.0);
const CMat kS = m2(1, 0, 0, cplx(0, 1));

// Oracle: kron of single-qubit factors with qubit 0 leftmost.
CMat embed(const std::vector<CMat> &factors) {
    CMat acc = CMat::Identity(1, 1);
    for (const CMat &f : factors) {
        CMat t = Eigen::kroneckerProduct(acc, f).eval();
        acc = t;
    }
    return acc;
}

CMat single_on(size_t n, size_t q, const CMat &u) {
    std::vector<CMat> f(n, kI);
    f[q] = u;
    return embed(f);
}

// Controlled-U built from projectors.
CMat controlled(size_t n, size_t c, size_t t, const CMat &u) {
    CMat p0 = m2(1, 0, 0, 0), p1 = m2(0, 0, 0, 1);
    std::vector<CMat> a(n, kI), b(n, kI);
    a[c] = p0;
    b[c] = p1;
    b[t] = u;
    return embed(a) + embed(b);
}

CMat gate_oracle(const Gate &g, size_t n) {
    switch (g.type) {
        case GateType::H: return single_on(n, g.q0, kH);
        case GateType::S: return single_on(n, g.q0, kS);
        case GateType::X: return single_on(n, g.q0, kX);
        case GateType::Z: return single_on(n, g.q0, kZ);
        case GateType::CNOT: return controlled(n, g.q0, g.q1, kX);
        case GateType::CZ: return controlled(n, g.q0, g.q1, kZ);
    }
    return CMat();
}

CMat oracle_pauli(const PauliOperator &p) {
    std::vector<CMat> f;
    for (size_t q = 0; q < p.n; q++) {
        char s = p.symbol(q);
        f.push_back(s == 'X' ? kX : s == 'Y' ? kY : s == 'Z' ? kZ : kI);
    }
    // symbol() reads the Hermitian form; the remaining phase is sign_exponent.
    const cplx ph[4] = {1, cplx(0, 1), -1, cplx(0, -1)};
    return ph[p.sign_exponent()] * embed(f);
}

}  // namespace

TEST(DenseSim, PauliMatrixMatchesKronOracle) {
    Rng rng(11);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 30; trial++) {
            PauliOperator p(n);
            for (size_t q = 0; q < n; q++) {
                p.x.set(q, rng.bit());
                p.z.set(q, rng.bit());
            }
            p.phase = rng.uniform(4);
            EXPECT_LE((pauli_matrix(p).m - oracle_pauli(p)).norm(), 1e-12) << p.str();
        }
    }
}

TEST(DenseSim, PauliOffsetInsideLargerRegister) {
    PauliOperator p = PauliOperator::from_string("XY");
    CMat expect = embed({kI, kX, kY, kI});
    for (uint64_t b = 0; b < 16; b++) {
        CVec v = CVec::Zero(16);
        v[b] = 1;
        apply_pauli(p, v, 4, 1);
        EXPECT_LE((v - expect.col(b)).norm(), 1e-12);
    }
}

TEST(DenseSim, GatesMatchOracle) {
    size_t n = 3;
    std::vector<Gate> gates = {{GateType::H, 1},       {GateType::S, 2},       {GateType::X, 0},
                               {GateType::Z, 2},       {GateType::CNOT, 0, 2}, {GateType::CNOT, 2, 1},
                               {GateType::CZ, 1, 0},   {GateType::CZ, 2, 0}};
    for (const Gate &g : gates) {
        Circuit c{n, {g}};
        EXPECT_LE((circuit_unitary(c).m - gate_oracle(g, n)).norm(), 1e-12) << gate_name(g.type);
    }
}

TEST(DenseSim, CircuitConjugationAgreesWithMatrices) {
    Rng rng(5);
    size_t n = 4;
    for (int trial = 0; trial < 20; trial++) {
        Circuit c{n, {}};
        for (int i = 0; i < 25; i++) {
            GateType t = static_cast<GateType>(rng.uniform(6));
            uint32_t a = rng.uniform(n), b = rng.uniform(n - 1);
            if (b >= a) b++;
            c.gates.push_back({t, a, b});
        }
        CMat u = circuit_unitary(c).m;
        EXPECT_LE((u * u.adjoint() - CMat::Identity(16, 16)).norm(), 1e-10);
        for (size_t q = 0; q < n; q++) {
            for (char s : std::string("XZ")) {
                PauliOperator p = PauliOperator::single(n, q, s);
                CMat lhs = u * pauli_matrix(p).m * u.adjoint();
                EXPECT_LE((lhs - pauli_matrix(conjugate(c, p)).m).norm(), 1e-10);
            }
        }
    }
}

TEST(DenseSim, ApplyLocalMatchesEmbedding) {
    Rng rng(3);
    CMat u = random_gaussian(4, 4, rng);
    // Qubits (2, 0) of a 3-qubit register: permute to compare against kron(u, I) on (2, 0, 1).
    CVec v = random_state(3, rng);
    CVec w = v;
    apply_local(u, {2, 0}, w, 3);
    CMat full = CMat::Zero(8, 8);
    for (uint64_t i = 0; i < 8; i++)
        for (uint64_t j = 0; j < 8; j++) {
            auto bit = [](uint64_t b, int q) { return (b >> (2 - q)) & 1; };
            if (bit(i, 1) != bit(j, 1)) continue;
            full(i, j) = u(bit(i, 2) * 2 + bit(i, 0), bit(j, 2) * 2 + bit(j, 0));
        }
    EXPECT_LE((w - full * v).norm(), 1e-12);
}

TEST(DenseSim, CodespaceIsometryMatchesProjector) {
    for (auto &[name, code] : corpus()) {
        if (code.n() > 7) continue;
        CMat v = codespace_isometry(code).m;
        CMat p = stabilizer_projector(code).m;
        int64_t dk = int64_t{1} << code.k();
        EXPECT_LE((v.adjoint() * v - CMat::Identity(dk, dk)).norm(), 1e-10) << name;
        EXPECT_LE((v * v.adjoint() - p).norm(), 1e-10) << name;
        for (const PauliOperator &g : code.gens()) {
            EXPECT_LE((pauli_matrix(g).m * v - v).norm(), 1e-10) << name;
        }
        // Logical action: Xbar_i V = V X_i and Zbar_i V = V Z_i on the message register.
        const auto &lg = code.logical_representatives();
        for (size_t i = 0; i < code.k(); i++) {
            CMat xi = pauli_matrix(PauliOperator::single(code.k(), i, 'X')).m;
            CMat zi = pauli_matrix(PauliOperator::single(code.k(), i, 'Z')).m;
            EXPECT_LE((pauli_matrix(lg[i]).m * v - v * xi).norm(), 1e-10) << name;
            EXPECT_LE((pauli_matrix(lg[code.k() + i]).m * v - v * zi).norm(), 1e-10) << name;
        }
    }
}

TEST(DenseSim, OperatorNormSvdAndPowerIterationAgree) {
    Rng rng(9);
    CMat a = random_gaussian(600, 600, rng);
    double pi = operator_norm(a);
    Eigen::BDCSVD<CMat> svd(a);
    EXPECT_NEAR(pi, svd.singularValues()(0), 1e-6 * pi);
    EXPECT_NEAR(operator_norm(2.5 * CMat::Identity(4, 4)), 2.5, 1e-12);
    EXPECT_NEAR(operator_norm(kX + kZ), std::sqrt(2.0), 1e-12);
}

TEST(DenseSim, ChannelsAreTracePreserving) {
    Rng rng(1);
    EXPECT_LE(QuantumChannel::depolarizing(2, 0, 0.3).cptp_defect(), 1e-12);
    EXPECT_LE(QuantumChannel::amplitude_damping(1, 0, 0.4).cptp_defect(), 1e-12);
    EXPECT_LE(QuantumChannel::random(3, {0, 2}, 3, rng).cptp_defect(), 1e-10);
    CMat rho = CMat::Zero(2, 2);
    rho(0, 0) = 1;
    EXPECT_LE(QuantumChannel::replace(1, {0}, rho).cptp_defect(), 1e-12);
    EXPECT_THROW(QuantumChannel(1, {0}, {2 * kI}), std::invalid_argument);
    EXPECT_THROW(QuantumChannel(1, {1}, {kI}), std::invalid_argument);
}

TEST(DenseSim, ChannelJsonRoundTrip) {
    Rng rng(2);
    QuantumChannel ch = QuantumChannel::random(2, {1}, 2, rng);
    QuantumChannel back = QuantumChannel::parse(ch.str(), 2);
    ASSERT_EQ(back.kraus.size(), ch.kraus.size());
    EXPECT_EQ(back.support, ch.support);
    for (size_t i = 0; i < ch.kraus.size(); i++) EXPECT_EQ(back.kraus[i], ch.kraus[i]);
    EXPECT_EQ(back.str(), ch.str());
    EXPECT_THROW(QuantumChannel::parse("{\"support\":[0]}", 1), std::invalid_argument);
    EXPECT_THROW(QuantumChannel::parse("{\"support\":[0],\"kraus\":[[[[1,0],[0,0]],[[0,0],[1,0]]]],", 1),
                 std::invalid_argument);
}

TEST(DenseSim, ApplyChannelBranchWeights) {
    QuantumChannel m = QuantumChannel::measure_z(1, 0);
    CVec plus = CVec::Constant(2, 1 / std::sqrt(2.0));
    auto out = apply_channel(m, {{1.0, plus}});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_NEAR(out[0].weight, 0.5, 1e-12);
    EXPECT_NEAR(out[1].weight, 0.5, 1e-12);
    CVec zero = CVec::Zero(2);
    zero[0] = 1;
    out = apply_channel(m, {{1.0, zero}});
    EXPECT_NEAR(out[1].weight, 0.0, 1e-15);  // zero-weight branches are kept
}

TEST(DenseSim, EntanglementFidelityKnownValues) {
    for (double p : {0.0, 0.1, 0.5}) {
        QuantumChannel dep = QuantumChannel::depolarizing(1, 0, p);
        QuantumChannel deph = QuantumChannel::dephasing(1, 0, p);
        auto pipe = [](const QuantumChannel &ch) {
            return [&ch](const CVec &in) {
                std::vector<CVec> out;
                for (const CMat &k : ch.kraus) out.push_back(k * in);
                return out;
            };
        };
        EXPECT_NEAR(entanglement_fidelity(pipe(dep), 1), 1 - 3 * p / 4, 1e-12);
        EXPECT_NEAR(entanglement_fidelity(pipe(deph), 1), 1 - p / 2, 1e-12);
    }
    // Identity on 2 message qubits with an auxiliary qubit left in |1>.
    Pipeline id_aux = [](const CVec &in) {
        CVec out = CVec::Zero(in.size() * 2);
        for (int64_t m = 0; m < in.size(); m++) out[2 * m + 1] = in[m];
        return std::vector<CVec>{out};
    };
    EXPECT_NEAR(entanglement_fidelity(id_aux, 2), 1.0, 1e-12);
    EXPECT_NEAR(fidelity_distance_bound(0.75), 1.0, 1e-12);
}

TEST(DenseSim, SizeGuard) {
    EXPECT_EQ(max_qubits(), 14u);
    EXPECT_THROW(DenseState::basis(15, 0), std::length_error);
}
