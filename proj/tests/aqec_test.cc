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

#include "pmdkit/aqec.h"
#include "test_codes.h"

using namespace pmdkit;
using namespace pmdkit::testing;

namespace {

StabilizerCode outer862() { return code_from(8, {"XXXXXXXX", "ZZZZZZZZ"}); }

const ComposedCode &main_code() {
    static const ComposedCode c = compose(build_pmd(build_bcgst_family(4, 2)), outer862());
    return c;
}
double main_epsilon() {
    static const double e = measure_pmd_epsilon(main_code().pmd).epsilon;
    return e;
}

// Density matrix of a branch list.
CMat mixture(const std::vector<ErasedBranch> &bs) {
    CMat rho = CMat::Zero(bs[0].state.size(), bs[0].state.size());
    for (auto &b : bs) rho += b.state * b.state.adjoint();
    return rho;
}

// Partial trace over qubit q of an n-qubit density matrix, followed by I/2 on q (oracle).
CMat trace_and_refill(const CMat &rho, size_t n, size_t q) {
    uint64_t d = uint64_t{1} << n, m = uint64_t{1} << (n - 1 - q);
    CMat out = CMat::Zero(d, d);
    for (uint64_t i = 0; i < d; i++)
        for (uint64_t j = 0; j < d; j++) {
            if ((i & m) != (j & m)) continue;
            cplx s = rho(i & ~m, j & ~m) + rho(i | m, j | m);
            out(i, j) = s / 2.0;
        }
    return out;
}

CVec encode(const ComposedCode &c, const CVec &psi) { return c.encoder.m * psi; }

// |psi> (x) |0^{n-k}> (x) |flags>, flags on the last L qubits.
CVec ideal_output(const ComposedCode &c, const CVec &psi, uint64_t flags, size_t l) {
    CVec v = CVec::Zero(uint64_t{1} << (c.n() + l));
    for (int64_t m = 0; m < psi.size(); m++) v[((static_cast<uint64_t>(m) << (c.n() - c.k())) << l) | flags] = psi[m];
    return v;
}

// Norm of (<psi| x I) out: the best overlap with psi (x) Aux over all Aux.
double best_overlap(const ComposedCode &c, const CVec &psi, const CVec &out) {
    uint64_t rest = out.size() >> c.k();
    CVec proj = CVec::Zero(rest);
    for (int64_t m = 0; m < psi.size(); m++) proj += std::conj(psi[m]) * out.segment(m * rest, rest);
    return proj.norm();
}

}  // namespace

TEST(Aqec, TrivialOuterCodeIsPaddedPmd) {
    PmdCode pmd = build_pmd(build_bcgst_family(4, 2));
    ComposedCode c = compose(pmd, code_from(6, {}));
    EXPECT_LE((c.encoder.m - pmd.encoder.m).norm(), 1e-12);
}

TEST(Aqec, ComposedIsometryContracts) {
    PmdCode pmd = build_pmd(build_bcgst_family(2, 1));
    for (auto outer : {code_from(5, {"XXXXI", "ZZZZI"}), code_from(6, {"ZZIIII", "IZZIII", "XXXXXX"})}) {
        ComposedCode c = compose(pmd, outer);
        const CMat &b = c.encoder.m;
        EXPECT_LE((b.adjoint() * b - CMat::Identity(2, 2)).norm(), 1e-12);
        CMat oracle = codespace_isometry(outer).m * pmd.encoder.m;
        EXPECT_LE((b - oracle).norm(), 1e-12);
        EXPECT_NEAR((b * b.adjoint()).trace().real(), 2.0, 1e-12);
    }
    EXPECT_THROW(compose(pmd, code_from(5, {"XXXXX"})), std::invalid_argument);
}

TEST(Aqec, IdentityAdversaryLeavesStateUntagged) {
    Rng rng(3);
    CVec v = random_state(3, rng);
    auto out = apply_adversary({{v, {}}}, ErasureAdversary::identity(3));
    ASSERT_EQ(out.size(), 1u);
    EXPECT_TRUE(out[0].erased.empty());
    EXPECT_LE((out[0].state - v).norm(), 1e-15);
}

TEST(Aqec, ErasureRefillMatchesPartialTrace) {
    Rng rng(4);
    CVec v = random_state(3, rng);
    for (size_t q = 0; q < 3; q++) {
        ErasureAdversary adv = ErasureAdversary::non_adaptive(QuantumChannel::identity(3, q));
        auto out = apply_adversary({{v, {}}}, adv);
        EXPECT_EQ(out.size(), 4u);
        for (auto &b : out) EXPECT_EQ(b.erased, std::vector<size_t>{q});
        EXPECT_LE((mixture(out) - trace_and_refill(v * v.adjoint(), 3, q)).norm(), 1e-12);
    }
}

TEST(Aqec, AdaptiveBranchesCarryTheirOwnSupports) {
    ErasureAdversary adv = ErasureAdversary::measure_then_act(4, 0, QuantumChannel::identity(4, 2),
                                                             QuantumChannel::depolarizing(4, 3, 0.5));
    EXPECT_LE(adv.cptp_defect(), 1e-12);
    adv.validate(2);
    EXPECT_THROW(adv.validate(1), std::invalid_argument);
    Rng rng(5);
    auto out = apply_adversary({{random_state(4, rng), {}}}, adv, false);
    ASSERT_EQ(out.size(), 5u);
    EXPECT_EQ(out[0].erased, (std::vector<size_t>{0, 2}));
    EXPECT_EQ(out[1].erased, (std::vector<size_t>{0, 3}));
}

TEST(Aqec, AdversaryJsonRoundTrip) {
    Rng rng(6);
    ErasureAdversary adv = ErasureAdversary::random(5, 2, true, rng);
    ErasureAdversary back = ErasureAdversary::parse(adv.str(), 5);
    EXPECT_EQ(back.str(), adv.str());
    QuantumChannel ch = QuantumChannel::dephasing(5, 1, 0.3);
    ErasureAdversary from_channel = ErasureAdversary::parse(ch.str(), 5);
    EXPECT_FALSE(from_channel.adaptive);
    EXPECT_EQ(from_channel.kraus.size(), 2u);
}

TEST(Aqec, ListCorrectionIsUnitary) {
    ComposedCode c = compose(build_pmd(build_bcgst_family(2, 1)), code_from(5, {"XXXXI", "ZZZZI"}));
    CorrectionList l = erasure_list_decode(c.outer, ErasurePattern(5, {0, 1}), BitVec(2));
    ASSERT_GE(l.size(), 2u);
    CMat u = list_correct_unitary(c, l).m;
    EXPECT_LE((u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).norm(), 1e-10);
}

TEST(Aqec, NoErasureRecoversExactly) {
    const ComposedCode &c = main_code();
    Rng rng(7);
    CVec psi = random_state(c.k(), rng);
    auto dec = composed_decode(c, {encode(c, psi), {}});
    ASSERT_EQ(dec.size(), 4u);
    EXPECT_EQ(dec[0].list.size(), 1u);
    EXPECT_LE((dec[0].state - ideal_output(c, psi, 1, 1)).norm(), 1e-10);
    for (size_t i = 1; i < dec.size(); i++) EXPECT_LE(dec[i].state.norm(), 1e-12);
}

TEST(Aqec, SinglePauliRecovery) {
    const ComposedCode &c = main_code();
    double eps = main_epsilon();
    Rng rng(8);
    ErasurePattern e(8, {2, 5});
    auto stab = stabilizer_group(c.outer);
    for (uint64_t sw = 0; sw < 4; sw++) {
        CorrectionList l = erasure_list_decode(c.outer, e, BitVec::from_u64(sw, 2));
        ASSERT_EQ(l.size(), 4u);
        for (size_t i = 0; i < l.size(); i++) {
            CVec psi = random_state(c.k(), rng);
            // True error: list element times a stabilizer; its phase relative to E_i is absorbed into Aux_i.
            PauliOperator err = pauli_mul(l.entries[i], stab[rng.uniform(stab.size())]);
            CVec phi = encode(c, psi);
            CVec ref = phi;
            apply_pauli(err, phi, 8);
            apply_pauli(l.entries[i], ref, 8);
            cplx omega = ref.dot(phi);
            ASSERT_NEAR(std::abs(omega), 1.0, 1e-10);
            CVec out = list_correct_apply(c, l, phi);
            CVec want = omega * ideal_output(c, psi, accepted_flags(i, l.size()), l.size());
            double dev = (out - want).norm();
            EXPECT_LE(dev, 2 * l.size() * eps + 1e-10);
            // The accepted candidate first: every later step only moves flags, so recovery is exact.
            if (i == 0) EXPECT_LE(dev, 1e-10);
        }
        // Aux states for distinct list positions are orthogonal.
        for (size_t i = 0; i < l.size(); i++)
            for (size_t j = i + 1; j < l.size(); j++) EXPECT_NE(accepted_flags(i, l.size()), accepted_flags(j, l.size()));
    }
}

TEST(Aqec, SparseSuperpositionRecovery) {
    const ComposedCode &c = main_code();
    double eps = main_epsilon();
    Rng rng(9);
    ErasurePattern e(8, {0, 7});
    CorrectionList l = erasure_list_decode(c.outer, e, BitVec(2));
    for (int trial = 0; trial < 10; trial++) {
        CVec psi = random_state(c.k(), rng);
        CVec enc = encode(c, psi);
        CVec phi = CVec::Zero(enc.size());
        for (auto &p : l.entries) {
            CVec t = enc;
            apply_pauli(p, t, 8);
            phi += cplx(rng.normal(), rng.normal()) * t;
        }
        phi.normalize();
        CVec out = list_correct_apply(c, l, phi);
        EXPECT_NEAR(out.norm(), 1.0, 1e-10);
        double ov = best_overlap(c, psi, out);
        double trace_dist = 2 * std::sqrt(std::max(0.0, 1 - ov * ov));
        EXPECT_LE(trace_dist, 3 * std::sqrt(eps) * std::pow(double(l.size()), 0.75) + 1e-10);
    }
}

TEST(Aqec, HarnessIdentityAdversary) {
    const ComposedCode &c = main_code();
    HarnessReport r = erasure_harness(c, ErasureAdversary::identity(8), main_epsilon());
    EXPECT_GE(r.fidelity, 1 - 1e-10);
    EXPECT_NEAR(r.weight, 1.0, 1e-9);
    EXPECT_EQ(r.list_max, 1u);
    EXPECT_TRUE(r.pass);
}

TEST(Aqec, HarnessSingleErasureIsExact) {
    // One erased qubit of a distance-2 outer code: every list has one element, so decoding is exact.
    const ComposedCode &c = main_code();
    Rng rng(10);
    for (size_t q : {0, 3, 7}) {
        ErasureAdversary adv = ErasureAdversary::non_adaptive(QuantumChannel::random(8, {q}, 2, rng));
        HarnessReport r = erasure_harness(c, adv, main_epsilon());
        EXPECT_EQ(r.list_max, 1u);
        EXPECT_GE(r.fidelity, 1 - 1e-9);
    }
}

TEST(Aqec, HarnessRandomAdversaries) {
    const ComposedCode &c = main_code();
    double eps = main_epsilon();
    auto t0 = std::chrono::steady_clock::now();
    for (uint64_t seed = 0; seed < 8; seed++) {
        Rng rng(seed);
        ErasureAdversary adv = ErasureAdversary::random(8, 2, seed % 2, rng);
        adv.validate(2);
        HarnessReport r = erasure_harness(c, adv, eps);
        EXPECT_NEAR(r.weight, 1.0, 1e-9) << seed;
        EXPECT_LE(r.list_max, 4u);
        EXPECT_TRUE(r.pass) << seed << " fidelity " << r.fidelity;
        EXPECT_LE(r.fidelity, 1 + 1e-9);
    }
    RecordProperty("seconds", std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()));
}

TEST(Aqec, EmptyListOnNonzeroOutcomeIsAnError) {
    // A state hit outside the declared erased set breaks the decoder contract.
    const ComposedCode &c = main_code();
    CVec v = c.encoder.m.col(0);
    apply_pauli(PauliOperator::from_string("XXIIIIII"), v, 8);
    apply_pauli(PauliOperator::from_string("IIIIIIIZ"), v, 8);
    EXPECT_THROW(composed_decode(c, {v, {}}), std::logic_error);
}
