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

#include "pmdkit/densesim.h"
#include "pmdkit/f2.h"
#include "pmdkit/qlde.h"
#include "test_codes.h"

using namespace pmdkit;
using namespace pmdkit::testing;

namespace {

// Brute-force oracle: every Pauli supported on the erased set with syndrome s, grouped into
// logical classes; each class reported by its lexicographically smallest (x|z) vector.
std::vector<BitVec> brute_classes(const StabilizerCode &code, const ErasurePattern &e, const BitVec &s) {
    size_t t = e.erased.size(), n = code.n();
    std::vector<std::vector<PauliOperator>> classes;
    for (uint64_t w = 0; w < (uint64_t{1} << (2 * t)); w++) {
        BitVec x(n), z(n);
        for (size_t j = 0; j < t; j++) {
            x.set(e.erased[j], (w >> j) & 1);
            z.set(e.erased[j], (w >> (t + j)) & 1);
        }
        PauliOperator p = PauliOperator::hermitian(x, z);
        if (syndrome(code, p) != s) continue;
        bool placed = false;
        for (auto &c : classes) {
            if (is_logically_equivalent(code, c[0], p)) {
                c.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({p});
    }
    std::vector<BitVec> reps;
    for (auto &c : classes) {
        BitVec best = c[0].symplectic();
        for (auto &p : c)
            if (p.symplectic().lex_less(best)) best = p.symplectic();
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end(), [](const BitVec &a, const BitVec &b) { return a.lex_less(b); });
    return reps;
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t max) {
    std::vector<std::vector<size_t>> out;
    for (uint64_t m = 0; m < (uint64_t{1} << n); m++) {
        if (static_cast<size_t>(std::popcount(m)) > max) continue;
        std::vector<size_t> e;
        for (size_t q = 0; q < n; q++)
            if ((m >> q) & 1) e.push_back(q);
        out.push_back(e);
    }
    return out;
}

}  // namespace

TEST(Qlde, ClassicalTrivialCases) {
    auto h = hamming_h();
    ErasurePattern none(7, {});
    auto zero = classical_erasure_list_decode(h, 7, none, BitVec(3));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].none());
    EXPECT_TRUE(classical_erasure_list_decode(h, 7, none, BitVec::from_string("100")).empty());
}

TEST(Qlde, ClassicalHammingMatchesBruteForce) {
    auto h = hamming_h();
    ErasurePattern e(7, {0, 1});
    for (uint64_t sw = 0; sw < 8; sw++) {
        BitVec s = BitVec::from_u64(sw, 3);
        std::vector<BitVec> want;
        for (uint64_t c = 0; c < 4; c++) {
            BitVec v(7);
            v.set(0, c & 1);
            v.set(1, c >> 1);
            BitVec hv(3);
            for (size_t i = 0; i < 3; i++) hv.set(i, h[i].dot(v));
            if (hv == s) want.push_back(v);
        }
        std::sort(want.begin(), want.end(), [](const BitVec &a, const BitVec &b) { return a.lex_less(b); });
        EXPECT_EQ(classical_erasure_list_decode(h, 7, e, s), want) << sw;
    }
}

TEST(Qlde, QuantumTrivialCase) {
    StabilizerCode c = code513();
    CorrectionList l = erasure_list_decode(c, ErasurePattern(5, {}), BitVec(4));
    ASSERT_EQ(l.size(), 1u);
    EXPECT_TRUE(l.entries[0].is_identity_mod_phase());
    EXPECT_TRUE(erasure_list_decode(c, ErasurePattern(5, {}), BitVec::from_string("0100")).empty());
}

TEST(Qlde, Code422TwoErasures) {
    StabilizerCode c = code422();
    ErasurePattern e(4, {0, 1});
    CorrectionList l = erasure_list_decode(c, e, BitVec(2));
    std::vector<std::string> got;
    for (auto &p : l.entries) got.push_back(p.str());
    // Normalizer elements on {0,1}: I, XX, ZZ, YY; none is a stabilizer, all are distinct classes.
    EXPECT_EQ(got, (std::vector<std::string>{"IIII", "ZZII", "XXII", "YYII"}));
    std::vector<BitVec> reps;
    for (auto &p : l.entries) reps.push_back(p.symplectic());
    EXPECT_EQ(reps, brute_classes(c, e, BitVec(2)));
}

TEST(Qlde, SolverEqualsBruteForceOnCorpus) {
    auto t0 = std::chrono::steady_clock::now();
    size_t cases = 0;
    for (auto &[name, code] : corpus()) {
        if (code.n() > 6) continue;
        for (auto &es : subsets(code.n(), 3)) {
            ErasurePattern e(code.n(), es);
            for (uint64_t sw = 0; sw < (uint64_t{1} << code.r()); sw++) {
                BitVec s = BitVec::from_u64(sw, code.r());
                CorrectionList l = erasure_list_decode(code, e, s);
                std::vector<BitVec> got;
                for (auto &p : l.entries) {
                    got.push_back(p.symplectic());
                    EXPECT_EQ(p.sign_exponent(), 0);
                    EXPECT_EQ(syndrome(code, p), s);
                    for (size_t q = 0; q < code.n(); q++)
                        if (!e.contains(q)) EXPECT_EQ(p.symbol(q), 'I');
                }
                for (size_t i = 0; i < l.size(); i++)
                    for (size_t j = i + 1; j < l.size(); j++)
                        EXPECT_FALSE(is_logically_equivalent(code, l.entries[i], l.entries[j]));
                ASSERT_EQ(got, brute_classes(code, e, s)) << name << " erased " << e.str() << " s " << s.str();
                if (!l.empty()) EXPECT_EQ(l.size(), quotient_size(code, e));
                cases++;
            }
        }
    }
    EXPECT_GT(cases, 1000u);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 120.0);
}

TEST(Qlde, ProfileBasics) {
    EXPECT_EQ(list_size_profile(code513(), 0.0).list_size, 1u);
    StabilizerCode c = code422();
    ProfileResult p = list_size_profile(c, 0.25);
    uint64_t brute = 1;
    for (size_t q = 0; q < 4; q++) brute = std::max<uint64_t>(brute, brute_classes(c, ErasurePattern(4, {q}), BitVec(2)).size());
    EXPECT_EQ(p.list_size, brute);
    EXPECT_EQ(p.list_size, 1u);  // distance 2 detects, and the single-erasure quotient is trivial
    EXPECT_EQ(list_size_profile(c, 0.5).list_size, 4u);
    EXPECT_EQ(list_size_profile(steane(), 2.0 / 7).list_size, 1u);
    EXPECT_EQ(list_size_profile(steane(), 3.0 / 7).list_size, 4u);
}

TEST(Qlde, CssLiftingBound) {
    Rng rng(2024);
    RandomCss rc = sample_random_css(10, 2, rng);
    struct Instance {
        std::string name;
        std::vector<BitVec> h1, h2;
        size_t n;
    };
    std::vector<Instance> inst = {
        {"steane", hamming_h(), hamming_h(), 7},
        {"c422", {BitVec::from_string("1111")}, {BitVec::from_string("1111")}, 4},
        {"random10", rc.h1, rc.h2, 10},
    };
    for (auto &in : inst) {
        StabilizerCode q = css_from_classical(in.h1, in.h2, in.n);
        for (size_t t = 0; t <= in.n / 2; t++) {
            double d = static_cast<double>(t) / in.n;
            uint64_t lq = list_size_profile(q, d).list_size;
            uint64_t l1 = classical_list_profile(in.h1, in.n, d).list_size;
            uint64_t l2 = classical_list_profile(in.h2, in.n, d).list_size;
            uint64_t lc = std::max(l1, l2);
            EXPECT_LE(lq, lc * lc) << in.name << " t=" << t;
            EXPECT_LE(lq, l1 * l2) << in.name << " t=" << t;
        }
    }
}

TEST(Qlde, SyndromeCollapseIntoListSpan) {
    Rng rng(77);
    for (auto &[name, code] : corpus()) {
        if (code.n() > 6 || code.r() == 0) continue;
        CMat v = codespace_isometry(code).m;
        int64_t dim = v.rows();
        std::vector<CMat> gm;
        for (auto &g : code.gens()) gm.push_back(pauli_matrix(g).m);
        for (auto &es : subsets(code.n(), 2)) {
            if (es.empty()) continue;
            ErasurePattern e(code.n(), es);
            QuantumChannel ch = QuantumChannel::random(code.n(), es, 2, rng);
            CVec psi = v * random_state(code.k(), rng);
            for (uint64_t sw = 0; sw < (uint64_t{1} << code.r()); sw++) {
                BitVec s = BitVec::from_u64(sw, code.r());
                CMat proj = CMat::Identity(dim, dim);
                for (size_t i = 0; i < code.r(); i++) {
                    double sign = s.get(i) ? -1 : 1;
                    proj = proj * (CMat::Identity(dim, dim) + sign * gm[i]) / 2;
                }
                CorrectionList l = erasure_list_decode(code, e, s);
                CMat span(dim, std::max<size_t>(1, l.size()));
                span.setZero();
                for (size_t i = 0; i < l.size(); i++) span.col(i) = pauli_matrix(l.entries[i]).m * psi;
                for (const CMat &k : ch.kraus) {
                    CVec out = psi;
                    apply_local(k, es, out, code.n());
                    out = proj * out;
                    if (l.empty()) {
                        EXPECT_LE(out.norm(), 1e-10) << name;
                        continue;
                    }
                    CVec coef = span.colPivHouseholderQr().solve(out);
                    EXPECT_LE((span * coef - out).norm(), 1e-10) << name << " erased " << e.str();
                }
            }
        }
    }
}

TEST(Qlde, RandomCssReproducibleAndValid) {
    Rng a(5), b(5);
    RandomCss x = sample_random_css(4, 2, a), y = sample_random_css(4, 2, b);
    EXPECT_EQ(x.code.str(), y.code.str());
    EXPECT_TRUE(x.rate_ok);
    EXPECT_EQ(x.code.k(), 2u);
    for (auto &g : x.code.gens())
        for (auto &h : x.code.gens()) EXPECT_FALSE(symplectic_product(g, h));
    EXPECT_THROW(sample_random_css(5, 2, a), std::invalid_argument);
}

TEST(Qlde, RandomCssRawRateFailureFrequency) {
    Rng rng(1);
    uint64_t fails = 0;
    const uint64_t samples = 10000;
    for (uint64_t i = 0; i < samples; i++)
        if (random_css_raw_logicals(10, 2, rng) != 2) fails++;
    double freq = static_cast<double>(fails) / samples;
    // The stated bound 4 n 2^{-n(1-R)/2} is 2.5 here, so it is vacuous; the frequency is pinned.
    EXPECT_LE(freq, 4 * 10 * std::pow(2.0, -4.0));
    EXPECT_EQ(fails, 480u) << freq;
}

TEST(Qlde, RandomCssProfileReport) {
    Rng rng(31);
    RandomCss rc = sample_random_css(10, 2, rng);
    ProfileResult p = list_size_profile(rc.code, 0.2);
    EXPECT_GE(p.list_size, 1u);
    RecordProperty("profile_n10_k2_delta0.2", std::to_string(p.list_size));
}
