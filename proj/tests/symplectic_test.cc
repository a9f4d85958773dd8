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

#include <complex>
#include <set>

#include "pmdkit/circuit.h"
#include "pmdkit/f2.h"
#include "pmdkit/pauli.h"
#include "pmdkit/stabilizer.h"
#include "test_codes.h"

using namespace pmdkit;
using namespace pmdkit::testing;

namespace {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<cd>>;

Mat kron(const Mat &a, const Mat &b) {
    size_t ra = a.size(), rb = b.size();
    Mat r(ra * rb, std::vector<cd>(ra * rb));
    for (size_t i = 0; i < ra; i++)
        for (size_t j = 0; j < ra; j++)
            for (size_t k = 0; k < rb; k++)
                for (size_t l = 0; l < rb; l++) r[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return r;
}
Mat matmul(const Mat &a, const Mat &b) {
    size_t n = a.size();
    Mat r(n, std::vector<cd>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t k = 0; k < n; k++)
            for (size_t j = 0; j < n; j++) r[i][j] += a[i][k] * b[k][j];
    return r;
}
// Independent matrix of i^phase X^x Z^z built from literal 2x2 factors.
Mat naive_matrix(const PauliOperator &p) {
    Mat X = {{0, 1}, {1, 0}}, Z = {{1, 0}, {0, -1}}, I = {{1, 0}, {0, 1}};
    Mat acc = {{1}};
    for (size_t q = 0; q < p.n; q++) {
        Mat f = I;
        if (p.x.get(q)) f = matmul(f, X);
        if (p.z.get(q)) f = matmul(f, Z);
        acc = kron(acc, f);
    }
    cd ph = std::pow(cd(0, 1), p.phase);
    for (auto &row : acc)
        for (auto &v : row) v *= ph;
    return acc;
}
bool mat_eq(const Mat &a, const Mat &b) {
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < a.size(); j++)
            if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
    return true;
}

std::vector<PauliOperator> all_paulis(size_t n) {
    std::vector<PauliOperator> out;
    for (uint64_t v = 0; v < (uint64_t{1} << (2 * n)); v++) out.push_back(PauliOperator::from_symplectic(BitVec::from_u64(v, 2 * n)));
    return out;
}

}  // namespace

TEST(symplectic, string_round_trip) {
    for (std::string s : {"XZIIX", "-Y", "iXX", "-iZY", "III"}) EXPECT_EQ(PauliOperator::from_string(s).str(), s);
    EXPECT_EQ(PauliOperator::from_string("+XY").str(), "XY");
}

TEST(symplectic, product_examples) {
    auto XI = PauliOperator::from_string("XI"), ZI = PauliOperator::from_string("ZI");
    EXPECT_TRUE(symplectic_product(XI, ZI));
    EXPECT_FALSE(symplectic_product(XI, PauliOperator::identity(2)));
    EXPECT_FALSE(symplectic_product(PauliOperator::from_string("XZ"), PauliOperator::from_string("ZX")));
    EXPECT_THROW(symplectic_product(XI, PauliOperator::from_string("X")), std::invalid_argument);
    EXPECT_EQ(pauli_mul(XI, PauliOperator::from_string("IZ")), PauliOperator::from_string("XZ"));
    // X Z = -i Y.
    EXPECT_EQ(pauli_mul(PauliOperator::from_string("X"), PauliOperator::from_string("Z")), PauliOperator::from_string("-iY"));
}

TEST(symplectic, mul_matches_matrices_exhaustive) {
    for (size_t n = 1; n <= 3; n++) {
        auto ps = all_paulis(n);
        for (auto &p : ps) {
            for (uint8_t ph = 0; ph < 4; ph += 3) {
                PauliOperator pp = p;
                pp.phase = (pp.phase + ph) & 3;
                Mat mp = naive_matrix(pp);
                auto inv = pauli_inverse(pp);
                auto id = pauli_mul(pp, inv);
                ASSERT_TRUE(id.is_identity_mod_phase());
                ASSERT_EQ(id.phase, 0);
                for (auto &q : ps) {
                    ASSERT_TRUE(mat_eq(naive_matrix(pauli_mul(pp, q)), matmul(mp, naive_matrix(q))));
                    // Commutation bit against the matrix commutator.
                    Mat a = matmul(mp, naive_matrix(q)), b = matmul(naive_matrix(q), mp);
                    ASSERT_EQ(!mat_eq(a, b), symplectic_product(pp, q));
                }
            }
        }
    }
}

TEST(symplectic, gate_conjugation_matches_matrices) {
    const double r = 1 / std::sqrt(2.0);
    Mat I = {{1, 0}, {0, 1}};
    Mat H = {{r, r}, {r, -r}}, S = {{1, 0}, {0, cd(0, 1)}}, X = {{0, 1}, {1, 0}}, Z = {{1, 0}, {0, -1}};
    Mat CX = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    Mat CZ = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    auto dag = [](const Mat &m) {
        Mat d(m.size(), std::vector<cd>(m.size()));
        for (size_t i = 0; i < m.size(); i++)
            for (size_t j = 0; j < m.size(); j++) d[i][j] = std::conj(m[j][i]);
        return d;
    };
    std::vector<std::pair<Gate, Mat>> cases = {
        {{GateType::H, 0}, kron(H, I)},      {{GateType::S, 1}, kron(I, S)},
        {{GateType::X, 0}, kron(X, I)},      {{GateType::Z, 1}, kron(I, Z)},
        {{GateType::CNOT, 0, 1}, CX},        {{GateType::CZ, 0, 1}, CZ},
    };
    // CNOT with control 1, target 0.
    Mat CX10 = {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
    cases.push_back({{GateType::CNOT, 1, 0}, CX10});
    for (auto &[g, U] : cases) {
        for (auto &p : all_paulis(2)) {
            Mat expect = matmul(matmul(U, naive_matrix(p)), dag(U));
            ASSERT_TRUE(mat_eq(naive_matrix(conjugate(g, p)), expect)) << gate_name(g.type) << " " << p.str();
        }
    }
}

TEST(symplectic, repetition_syndrome_and_normalizer) {
    auto code = repetition3();
    EXPECT_EQ(syndrome(code, PauliOperator::identity(3)).str(), "00");
    EXPECT_EQ(syndrome(code, PauliOperator::from_string("XII")).str(), "10");
    EXPECT_EQ(code.normalizer_basis().size(), 4u);  // 2n - r
    EXPECT_EQ(code.logical_representatives().size(), 2u);
    EXPECT_FALSE(is_logically_equivalent(code, PauliOperator::from_string("XXX"), PauliOperator::from_string("XII")));
    EXPECT_TRUE(is_logically_equivalent(code, PauliOperator::from_string("ZII"), PauliOperator::from_string("IIZ")));
}

TEST(symplectic, trivial_code) {
    auto code = code_from(3, {});
    EXPECT_EQ(code.normalizer_basis().size(), 6u);
    EXPECT_EQ(code.logical_representatives().size(), 6u);
    EXPECT_TRUE(code.encoder().gates.empty());
}

TEST(symplectic, corpus_properties_exhaustive) {
    for (auto &[name, code] : corpus()) {
        size_t n = code.n();
        auto ps = all_paulis(n);
        // Normalizer span equals the brute-force commutant.
        std::vector<BitVec> nb;
        for (auto &p : code.normalizer_basis()) {
            ASSERT_TRUE(syndrome(code, p).none()) << name;
            nb.push_back(p.symplectic());
        }
        ASSERT_EQ(f2::rank(nb), 2 * n - code.r()) << name;
        std::vector<BitVec> sb = code.generator_rows();
        size_t stab_count = 0;
        for (auto &p : ps) {
            bool commutes = syndrome(code, p).none();
            ASSERT_EQ(f2::in_span(nb, p.symplectic()), commutes) << name << " " << p.str();
            if (in_stabilizer_group(code, p)) stab_count++;
        }
        ASSERT_EQ(stab_count, size_t{1} << code.r()) << name;
        // Logical pairs are symplectic and independent mod S.
        auto lg = code.logical_representatives();
        size_t k = code.k();
        ASSERT_EQ(lg.size(), 2 * k);
        for (size_t i = 0; i < k; i++)
            for (size_t j = 0; j < k; j++) {
                ASSERT_EQ(symplectic_product(lg[i], lg[k + j]), i == j);
                ASSERT_FALSE(symplectic_product(lg[i], lg[j]));
                ASSERT_FALSE(symplectic_product(lg[k + i], lg[k + j]));
            }
        std::vector<BitVec> all = sb;
        for (auto &p : lg) all.push_back(p.symplectic());
        ASSERT_EQ(f2::rank(all), code.r() + 2 * k) << name;
        // Syndrome linearity.
        for (size_t t = 0; t < std::min<size_t>(ps.size(), 64); t++) {
            auto &p = ps[t * 7 % ps.size()];
            auto &q = ps[t * 13 % ps.size()];
            ASSERT_EQ(syndrome(code, pauli_mul(p, q)), syndrome(code, p) ^ syndrome(code, q));
        }
    }
}

TEST(symplectic, logical_equivalence_matches_group_enumeration) {
    for (auto &[name, code] : corpus()) {
        if (code.n() > 5) continue;
        auto group = stabilizer_group(code);
        std::set<std::string> members;
        for (auto &g : group) members.insert(g.symbols());
        auto ps = all_paulis(code.n());
        auto &p = ps[ps.size() / 3];
        for (auto &q : ps) {
            auto diff = pauli_mul(p, pauli_inverse(q));
            ASSERT_EQ(is_logically_equivalent(code, p, q), members.count(diff.symbols()) == 1) << name;
        }
        ASSERT_TRUE(is_logically_equivalent(code, p, p));
        if (code.r()) ASSERT_TRUE(is_logically_equivalent(code, p, pauli_mul(p, code.gens()[0])));
    }
}

TEST(symplectic, encoder_tableau_maps_ancilla_z_to_generators) {
    for (auto conv : {EncoderConvention::kLowestPivot, EncoderConvention::kHighestPivot}) {
        for (auto &[name, c0] : corpus()) {
            StabilizerCode code(c0.n(), c0.gens(), conv);
            size_t n = code.n(), k = code.k();
            const Circuit &u = code.encoder();
            for (size_t j = 0; j < code.r(); j++) {
                auto img = conjugate(u, PauliOperator::single(n, k + j, 'Z'));
                ASSERT_EQ(img, code.gens()[j]) << name << " gen " << j << " got " << img.str();
            }
            for (size_t i = 0; i < k; i++) {
                ASSERT_TRUE(conjugate(u, PauliOperator::single(n, i, 'X')).equal_mod_phase(code.logical_representatives()[i]));
                ASSERT_TRUE(conjugate(u, PauliOperator::single(n, i, 'Z')).equal_mod_phase(code.logical_representatives()[k + i]));
            }
            // Deterministic.
            StabilizerCode again(c0.n(), c0.gens(), conv);
            ASSERT_EQ(again.encoder().str(), u.str());
        }
    }
}

TEST(symplectic, steane_from_hamming) {
    auto code = steane();
    EXPECT_EQ(code.n(), 7u);
    EXPECT_EQ(code.r(), 6u);
    EXPECT_EQ(code.k(), 1u);
    EXPECT_EQ(pure_distance(code), 3u);
    EXPECT_EQ(pure_distance(code422()), 2u);
    EXPECT_EQ(pure_distance(code513()), 3u);
    EXPECT_EQ(pure_distance(bell_pair()), 2u);
}

TEST(symplectic, css_full_space_and_containment_failure) {
    auto code = css_from_classical({}, {}, 4);
    EXPECT_EQ(code.k(), 4u);
    // H1 = [1100] gives C1 = ker; H2 = [1000] gives C2^perp = span{1000} which is not in C1.
    EXPECT_THROW(css_from_classical({BitVec::from_string("1100")}, {BitVec::from_string("1000")}, 4), std::invalid_argument);
}

TEST(symplectic, code_text_round_trip_and_diagnostics) {
    for (auto &[name, code] : corpus()) {
        auto back = StabilizerCode::parse(code.str());
        ASSERT_EQ(back.str(), code.str()) << name;
    }
    try {
        StabilizerCode::parse("n=2 k=0\nXI\nZI\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    try {
        StabilizerCode::parse("n=2 k=0\nXX\n\nXX\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
    EXPECT_THROW(StabilizerCode::parse("n=3 k=1\nZZI\n"), std::invalid_argument);
}

TEST(symplectic, circuit_text_round_trip) {
    auto c = steane().encoder();
    EXPECT_EQ(Circuit::parse(c.str(), 7).str(), c.str());
}
