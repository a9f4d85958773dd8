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

#include <chrono>
#include <cmath>

#include "pmdkit/pmd.h"

using namespace pmdkit;

namespace {

const std::vector<std::pair<size_t, int>> kFamilies = {{2, 1}, {4, 2}, {6, 2}, {6, 3}};

PauliOperator key_pauli(const PmdCode &pmd, uint64_t xc, uint64_t zc, uint32_t a, uint32_t b) {
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

CVec auth_input(const CVec &code_state) {
    CVec v = CVec::Zero(code_state.size() * 2);
    for (int64_t i = 0; i < code_state.size(); i++) v[2 * i] = code_state[i];
    return v;
}

}  // namespace

TEST(Pmd, SmallestFamilyIsometry) {
    PmdCode pmd = build_pmd(build_bcgst_family(2, 1));
    EXPECT_EQ(pmd.total, 3u);
    EXPECT_EQ(pmd.message, 1u);
    const CMat &b = pmd.encoder.m;
    EXPECT_LE((b.adjoint() * b - CMat::Identity(2, 2)).norm(), 1e-12);
    CMat p = pmd.projector().m;
    EXPECT_LE((p * b - b).norm(), 1e-12);
    EXPECT_NEAR(p.trace().real(), 2.0, 1e-12);
}

TEST(Pmd, ProjectorRankMatchesMessage) {
    PmdCode pmd = build_pmd(build_bcgst_family(4, 2));
    EXPECT_EQ(pmd.total, 6u);
    CMat p = pmd.projector().m;
    EXPECT_NEAR(p.trace().real(), 4.0, 1e-10);
    EXPECT_LE((p * p - p).norm(), 1e-10);
}

TEST(Pmd, EncoderColumnsAreKeySuperpositions) {
    // Oracle: assemble the column from each key's codespace isometry and the key register bits.
    PtcFamily fam = build_bcgst_family(4, 2);
    PmdCode pmd = build_pmd(fam);
    for (uint64_t m = 0; m < 4; m++) {
        CVec col = CVec::Zero(64);
        for (uint32_t k = 0; k < 4; k++) {
            CVec enc = codespace_isometry(fam.code(k)).m.col(m);
            uint64_t key_reg = ((k & 1) << 1) | ((k >> 1) & 1);  // key qubit 0 is the high bit
            for (uint64_t c = 0; c < 16; c++) col[c * 4 + key_reg] += 0.5 * enc[c];
        }
        EXPECT_LE((col - pmd.encoder.m.col(m)).norm(), 1e-12);
    }
}

TEST(Pmd, FullEncoderUnitaryMatchesIsometry) {
    PmdCode pmd = build_pmd(build_bcgst_family(4, 2));
    Rng rng(4);
    for (uint64_t m = 0; m < 4; m++) {
        CVec v = CVec::Zero(64);
        v[m << 4] = 1;
        apply_pmd_encode(pmd, v, 6);
        EXPECT_LE((v - pmd.encoder.m.col(m)).norm(), 1e-12);
    }
    CVec r = random_state(6, rng), w = r;
    apply_pmd_encode(pmd, w, 6);
    apply_pmd_decode(pmd, w, 6);
    EXPECT_LE((w - r).norm(), 1e-12);
}

TEST(Pmd, StructuredEpsilonMatchesDenseOracle) {
    for (auto [n, l] : std::vector<std::pair<size_t, int>>{{2, 1}, {4, 2}}) {
        PmdCode pmd = build_pmd(build_bcgst_family(n, l));
        PmdEpsilonResult fast = measure_pmd_epsilon(pmd);
        PmdEpsilonResult dense = measure_pmd_epsilon_dense(pmd);
        EXPECT_NEAR(fast.epsilon, dense.epsilon, 1e-10);
        EXPECT_NEAR(pmd_restricted_norm(pmd, fast.argmax), fast.epsilon, 1e-10);
        EXPECT_NEAR(pmd_restricted_norm(pmd, dense.argmax), dense.epsilon, 1e-10);
    }
    // Per-operator agreement over the whole 3-qubit Pauli group.
    PmdCode pmd = build_pmd(build_bcgst_family(2, 1));
    for (uint64_t i = 0; i < 64; i++) {
        BitVec x = BitVec::from_u64(i & 7, 3), z = BitVec::from_u64(i >> 3, 3);
        PauliOperator e = PauliOperator::hermitian(x, z);
        double dense = operator_norm(pmd.encoder.m.adjoint() * pauli_matrix(e).m * pmd.encoder.m);
        EXPECT_NEAR(pmd_restricted_norm(pmd, e), dense, 1e-12) << e.str();
    }
}

TEST(Pmd, IdentityHasNormOne) {
    PmdCode pmd = build_pmd(build_bcgst_family(4, 2));
    EXPECT_NEAR(pmd_restricted_norm(pmd, PauliOperator(6)), 1.0, 1e-12);
}

TEST(Pmd, KeyPhaseErrorsVanish) {
    for (auto [n, l] : kFamilies) {
        PmdCode pmd = build_pmd(build_bcgst_family(n, l));
        for (uint32_t b = 1; b < pmd.family.num_keys(); b++) {
            EXPECT_LE(pmd_restricted_norm(pmd, key_pauli(pmd, 0, 0, 0, b)), 1e-10) << n << "," << l << " b=" << b;
        }
    }
}

TEST(Pmd, EpsilonBoundHoldsWithMeasuredQuantities) {
    // Pinned measured values under the default encoder convention.
    const std::vector<double> pinned = {1.0, std::sqrt(5.0) / 4, 1.0, 0.375};
    for (size_t i = 0; i < kFamilies.size(); i++) {
        auto [n, l] = kFamilies[i];
        PtcFamily fam = build_bcgst_family(n, l);
        PmdCode pmd = build_pmd(fam);
        auto t0 = std::chrono::steady_clock::now();
        PmdEpsilonResult eps = measure_pmd_epsilon(pmd);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double ptc = measure_strong_ptc_error(fam).epsilon.value();
        double delta = measure_pairwise_detectability(fam).delta.value();
        double bound = pmd_epsilon_bound(ptc, delta, l);
        EXPECT_LE(eps.epsilon, bound + 1e-10) << n << "," << l;
        EXPECT_NEAR(eps.epsilon, pinned[i], 1e-9) << n << "," << l << " argmax " << eps.argmax.str();
        EXPECT_LT(secs, 300.0);
    }
}

TEST(Pmd, SplitBoundsByKeyShift) {
    // a = 0 with E_C != I is bounded by the PTC error; a != 0 by sqrt(2^-lambda + delta).
    for (auto [n, l] : std::vector<std::pair<size_t, int>>{{2, 1}, {4, 2}}) {
        PtcFamily fam = build_bcgst_family(n, l);
        PmdCode pmd = build_pmd(fam);
        double ptc = measure_strong_ptc_error(fam).epsilon.value();
        double delta = measure_pairwise_detectability(fam).delta.value();
        double shifted = std::sqrt(std::ldexp(1.0, -l) + delta);
        uint32_t nk = fam.num_keys();
        for (uint64_t xc = 0; xc < (uint64_t{1} << n); xc++)
            for (uint64_t zc = 0; zc < (uint64_t{1} << n); zc++)
                for (uint32_t a = 0; a < nk; a++)
                    for (uint32_t b = 0; b < nk; b++) {
                        if (xc == 0 && zc == 0 && a == 0) continue;
                        double v = pmd_restricted_norm(pmd, key_pauli(pmd, xc, zc, a, b));
                        EXPECT_LE(v, (a == 0 ? ptc : shifted) + 1e-10);
                    }
    }
}

TEST(Pmd, EpsilonBoundUnderAlternateConvention) {
    for (auto [n, l] : kFamilies) {
        PtcFamily fam = build_bcgst_family(n, l, EncoderConvention::kHighestPivot);
        PmdCode pmd = build_pmd(fam);
        double ptc = measure_strong_ptc_error(fam).epsilon.value();
        double delta = measure_pairwise_detectability(fam).delta.value();
        EXPECT_LE(measure_pmd_epsilon(pmd).epsilon, pmd_epsilon_bound(ptc, delta, l) + 1e-10) << n << "," << l;
    }
}

TEST(Pmd, SamplingIsALowerBound) {
    PmdCode pmd = build_pmd(build_bcgst_family(4, 2));
    Rng rng(17);
    PmdEpsilonResult s = sample_pmd_epsilon(pmd, 500, rng);
    EXPECT_LE(s.epsilon, measure_pmd_epsilon(pmd).epsilon + 1e-12);
    EXPECT_FALSE(s.argmax.is_identity_mod_phase());
}

TEST(Pmd, CorruptedStatesNearlyOrthogonal) {
    PmdCode pmd = build_pmd(build_bcgst_family(4, 2));
    double eps = measure_pmd_epsilon(pmd).epsilon;
    Rng rng(8);
    for (int trial = 0; trial < 200; trial++) {
        CVec psi1 = random_state(2, rng), psi2 = random_state(2, rng);
        BitVec x(6), z(6);
        do {
            for (size_t q = 0; q < 6; q++) {
                x.set(q, rng.bit());
                z.set(q, rng.bit());
            }
        } while (x.none() && z.none());
        CMat e = pauli_matrix(PauliOperator::hermitian(x, z)).m;
        cplx ov = (pmd.encoder.m * psi1).dot(e * pmd.encoder.m * psi2);
        EXPECT_LE(std::abs(ov), eps + 1e-10);
    }
}

TEST(Pmd, AuthIsUnitary) {
    for (auto [n, l] : std::vector<std::pair<size_t, int>>{{2, 1}, {4, 2}}) {
        PmdCode pmd = build_pmd(build_bcgst_family(n, l));
        CMat u = auth_unitary(pmd).m;
        EXPECT_LE((u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).norm(), 1e-10);
    }
}

TEST(Pmd, AuthRecoversCodeStatesAndBoundsDisturbance) {
    for (auto [n, l] : kFamilies) {
        PmdCode pmd = build_pmd(build_bcgst_family(n, l));
        double eps = measure_pmd_epsilon(pmd).epsilon;
        Rng rng(n * 10 + l);
        size_t t = pmd.total;
        for (int trial = 0; trial < 20; trial++) {
            CVec psi = random_state(pmd.message, rng);
            CVec enc = pmd.encoder.m * psi;
            CVec v = auth_input(enc);
            apply_auth(pmd, v);
            // Expect |psi>|0^{2 lambda}>|1>_F.
            CVec want = CVec::Zero(v.size());
            for (int64_t m = 0; m < psi.size(); m++) want[((uint64_t(m) << (2 * l)) << 1) | 1] = psi[m];
            EXPECT_LE((v - want).norm(), 1e-9);

            BitVec x(t), z(t);
            do {
                for (size_t q = 0; q < t; q++) {
                    x.set(q, rng.bit());
                    z.set(q, rng.bit());
                }
            } while (x.none() && z.none());
            CVec phi = enc;
            apply_pauli(PauliOperator::hermitian(x, z), phi, t);
            CVec in = auth_input(phi), out = in;
            apply_auth(pmd, out);
            EXPECT_LE((out - in).norm(), std::sqrt(2.0) * eps + 1e-10);
        }
    }
}

TEST(Pmd, SizeGuards) {
    EXPECT_THROW(build_pmd(build_bcgst_family(10, 5)), std::length_error);
    PmdCode pmd = build_pmd(build_bcgst_family(6, 3));
    EXPECT_THROW(measure_pmd_epsilon_dense(pmd), std::length_error);
}
