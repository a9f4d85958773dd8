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

#include "pmdkit/stabilizer.h"

#include <algorithm>
#include <bit>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "pmdkit/f2.h"

namespace pmdkit {

namespace {

std::vector<BitVec> swapped_rows(const std::vector<PauliOperator> &ps) {
    std::vector<BitVec> rows;
    rows.reserve(ps.size());
    for (const auto &p : ps) rows.push_back(symplectic_swap(p.symplectic()));
    return rows;
}

struct Tableau {
    std::vector<PauliOperator> xs, zs;

    void apply(const Gate &g, Circuit &log) {
        for (auto &p : xs) p = conjugate(g, p);
        for (auto &p : zs) p = conjugate(g, p);
        log.gates.push_back(g);
    }
};

// Reduces the tableau to the identity (up to signs); records the gates applied.
Circuit eliminate(Tableau &t, size_t n, EncoderConvention conv) {
    Circuit log;
    log.n = n;
    auto H = [](size_t q) { return Gate{GateType::H, static_cast<uint32_t>(q), 0}; };
    auto S = [](size_t q) { return Gate{GateType::S, static_cast<uint32_t>(q), 0}; };
    auto CX = [](size_t c, size_t tq) {
        return Gate{GateType::CNOT, static_cast<uint32_t>(c), static_cast<uint32_t>(tq)};
    };
    for (size_t q = 0; q < n; q++) {
        // Image of X_q -> X_q.
        for (size_t j = q; j < n; j++) {
            const auto &p = t.xs[q];
            bool a = p.x.get(j), b = p.z.get(j);
            if (!a && b) t.apply(H(j), log);
            if (a && b) t.apply(S(j), log);
        }
        if (!t.xs[q].x.get(q)) {
            size_t piv = n;
            for (size_t jj = q + 1; jj < n; jj++) {
                size_t j = conv == EncoderConvention::kLowestPivot ? jj : n - (jj - q);
                if (t.xs[q].x.get(j)) {
                    piv = j;
                    break;
                }
            }
            if (piv == n) throw std::logic_error("encoder elimination: X image has no support");
            t.apply(CX(piv, q), log);
        }
        for (size_t j = q + 1; j < n; j++) {
            if (t.xs[q].x.get(j)) t.apply(CX(q, j), log);
        }
        // Image of Z_q -> Z_q.
        for (size_t j = q + 1; j < n; j++) {
            const auto &p = t.zs[q];
            bool a = p.x.get(j), b = p.z.get(j);
            if (a && !b) t.apply(H(j), log);
            if (a && b) {
                t.apply(S(j), log);
                t.apply(H(j), log);
            }
        }
        for (size_t j = q + 1; j < n; j++) {
            if (t.zs[q].z.get(j)) t.apply(CX(j, q), log);
        }
        if (t.zs[q].x.get(q)) {
            t.apply(H(q), log);
            t.apply(S(q), log);
            t.apply(H(q), log);
        }
        if (!t.zs[q].z.get(q) || t.zs[q].x.get(q) || t.zs[q].weight() != 1 || t.xs[q].weight() != 1) {
            throw std::logic_error("encoder elimination failed to reach identity");
        }
    }
    return log;
}

}  // namespace

StabilizerCode::StabilizerCode(size_t n, std::vector<PauliOperator> gens, EncoderConvention conv)
    : n_(n), gens_(std::move(gens)), conv_(conv) {
    for (size_t i = 0; i < gens_.size(); i++) {
        if (gens_[i].n != n) throw std::invalid_argument("generator " + std::to_string(i) + " has wrong length");
        if (gens_[i].sign_exponent() != 0) {
            throw std::invalid_argument("generator " + std::to_string(i) + " must carry sign +1");
        }
        for (size_t j = 0; j < i; j++) {
            if (symplectic_product(gens_[i], gens_[j])) {
                throw std::invalid_argument("generators " + std::to_string(j) + " and " + std::to_string(i) +
                                            " anticommute");
            }
        }
    }
    auto rows = generator_rows();
    if (f2::rank(rows) != gens_.size()) throw std::invalid_argument("generators are dependent");

    // Normalizer: kernel of the symplectic form against the generators.
    auto ker = f2::kernel(swapped_rows(gens_), 2 * n);
    for (auto &v : ker) normalizer_.push_back(PauliOperator::from_symplectic(v));

    // Destabilizers: <d_j, g_i> = delta_ij, then made mutually commuting.
    size_t r = gens_.size();
    std::vector<BitVec> dvec;
    auto srows = swapped_rows(gens_);
    for (size_t j = 0; j < r; j++) {
        BitVec rhs(r);
        rhs.set(j, true);
        auto sol = f2::solve(srows, rhs, 2 * n);
        if (!sol) throw std::logic_error("destabilizer system inconsistent");
        dvec.push_back(*sol);
    }
    for (size_t j = 0; j < r; j++) {
        for (size_t i = 0; i < j; i++) {
            if (symplectic_form(dvec[i], dvec[j])) dvec[j] ^= rows[i];
        }
    }

    // Logical representatives from the normalizer basis, taken in convention order.
    std::vector<BitVec> cand;
    for (auto &v : ker) cand.push_back(v);
    if (conv == EncoderConvention::kHighestPivot) std::reverse(cand.begin(), cand.end());
    std::vector<BitVec> span = rows;
    std::vector<BitVec> lvec;
    for (auto &v : cand) {
        if (f2::in_span(span, v)) continue;
        span.push_back(v);
        BitVec w = v;
        for (size_t j = 0; j < r; j++) {
            if (symplectic_form(w, dvec[j])) w ^= rows[j];
        }
        lvec.push_back(w);
    }
    if (lvec.size() != 2 * k()) throw std::logic_error("logical count mismatch");
    std::vector<BitVec> xbar, zbar;
    while (!lvec.empty()) {
        BitVec v = lvec.front();
        size_t wi = 1;
        while (wi < lvec.size() && !symplectic_form(v, lvec[wi])) wi++;
        if (wi == lvec.size()) throw std::logic_error("degenerate logical space");
        BitVec w = lvec[wi];
        std::vector<BitVec> rest;
        for (size_t i = 1; i < lvec.size(); i++) {
            if (i == wi) continue;
            BitVec u = lvec[i];
            bool uw = symplectic_form(u, w), uv = symplectic_form(u, v);
            if (uw) u ^= v;
            if (uv) u ^= w;
            rest.push_back(u);
        }
        xbar.push_back(v);
        zbar.push_back(w);
        lvec = std::move(rest);
    }
    for (auto &v : xbar) logicals_.push_back(PauliOperator::from_symplectic(v));
    for (auto &v : zbar) logicals_.push_back(PauliOperator::from_symplectic(v));
    for (auto &v : dvec) destabilizers_.push_back(PauliOperator::from_symplectic(v));

    encoder_ = standard_form_encoder(*this);
}

std::vector<BitVec> StabilizerCode::generator_rows() const {
    std::vector<BitVec> rows;
    for (const auto &g : gens_) rows.push_back(g.symplectic());
    return rows;
}

std::string StabilizerCode::str() const {
    std::ostringstream os;
    os << "n=" << n_ << " k=" << k() << '\n';
    for (const auto &g : gens_) os << g.symbols() << '\n';
    return os.str();
}

StabilizerCode StabilizerCode::parse(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    long n = -1, k = -1;
    std::vector<PauliOperator> gens;
    std::vector<size_t> where;
    static const std::regex header(R"(^\s*n\s*=\s*(\d+)\s+k\s*=\s*(\d+)\s*$)");
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line.erase(0, line.find_first_not_of(" \t\r"));
        auto last = line.find_last_not_of(" \t\r");
        line = last == std::string::npos ? "" : line.substr(0, last + 1);
        if (line.empty()) continue;
        if (n < 0) {
            std::smatch m;
            if (!std::regex_match(line, m, header)) fail("expected header 'n=<int> k=<int>'");
            n = std::stol(m[1]);
            k = std::stol(m[2]);
            if (k > n) fail("k exceeds n");
            continue;
        }
        if (static_cast<long>(line.size()) != n) fail("generator length differs from n");
        for (char c : line) {
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z' && c != '_') fail("bad Pauli symbol");
        }
        PauliOperator p = PauliOperator::from_string(line);
        for (size_t j = 0; j < gens.size(); j++) {
            if (symplectic_product(p, gens[j])) fail("generator anticommutes with line " + std::to_string(where[j]));
        }
        std::vector<BitVec> rows;
        for (auto &g : gens) rows.push_back(g.symplectic());
        if (f2::in_span(rows, p.symplectic())) fail("generator is dependent on earlier generators");
        gens.push_back(p);
        where.push_back(lineno);
    }
    if (n < 0) throw std::invalid_argument("missing header 'n=<int> k=<int>'");
    if (static_cast<long>(gens.size()) != n - k) {
        throw std::invalid_argument("header says k=" + std::to_string(k) + " but found " +
                                    std::to_string(gens.size()) + " generators for n=" + std::to_string(n));
    }
    return StabilizerCode(static_cast<size_t>(n), std::move(gens));
}

SyndromeVector syndrome(const StabilizerCode &code, const PauliOperator &e) {
    if (e.n != code.n()) throw std::invalid_argument("syndrome: size mismatch");
    BitVec s(code.r());
    for (size_t i = 0; i < code.r(); i++) s.set(i, symplectic_product(code.gens()[i], e));
    return s;
}

std::vector<PauliOperator> normalizer_basis(const StabilizerCode &code) { return code.normalizer_basis(); }

std::vector<PauliOperator> logical_representatives(const StabilizerCode &code) {
    return code.logical_representatives();
}

bool in_stabilizer_group(const StabilizerCode &code, const PauliOperator &p) {
    if (p.n != code.n()) throw std::invalid_argument("size mismatch");
    return f2::in_span(code.generator_rows(), p.symplectic());
}

bool in_normalizer(const StabilizerCode &code, const PauliOperator &p) { return syndrome(code, p).none(); }

bool is_logically_equivalent(const StabilizerCode &code, const PauliOperator &p, const PauliOperator &q) {
    if (p.n != q.n || p.n != code.n()) throw std::invalid_argument("size mismatch");
    return f2::in_span(code.generator_rows(), p.symplectic() ^ q.symplectic());
}

StabilizerCode css_from_classical(const std::vector<BitVec> &h1, const std::vector<BitVec> &h2, size_t n) {
    for (const auto &r : h1)
        if (r.size() != n) throw std::invalid_argument("H1 row length differs from n");
    for (const auto &r : h2)
        if (r.size() != n) throw std::invalid_argument("H2 row length differs from n");
    auto b1 = f2::rref(h1);
    auto b2 = f2::rref(h2);
    // C2^perp = rowspace(H2) must lie in C1 = ker(H1).
    for (const auto &row : b2) {
        for (const auto &c : b1) {
            if (row.dot(c)) throw std::invalid_argument("CSS containment violated: C2^perp is not inside C1");
        }
    }
    std::vector<PauliOperator> gens;
    for (const auto &row : b2) gens.push_back(PauliOperator::hermitian(row, BitVec(n)));
    for (const auto &row : b1) gens.push_back(PauliOperator::hermitian(BitVec(n), row));
    return StabilizerCode(n, std::move(gens));
}

Circuit standard_form_encoder(const StabilizerCode &code) {
    size_t n = code.n(), k = code.k(), r = code.r();
    Tableau t;
    t.xs.resize(n);
    t.zs.resize(n);
    const auto &lg = code.logical_representatives();
    for (size_t i = 0; i < k; i++) {
        t.xs[i] = lg[i];
        t.zs[i] = lg[k + i];
    }
    for (size_t j = 0; j < r; j++) {
        t.xs[k + j] = code.destabilizers()[j];
        t.zs[k + j] = code.gens()[j];
    }
    Circuit elim = eliminate(t, n, code.convention());
    // Now G_m..G_1 U = F (a Pauli). U = G_1^dag .. G_m^dag F.
    Circuit enc;
    enc.n = n;
    for (size_t q = 0; q < n; q++) {
        if (t.xs[q].sign_exponent() == 2) enc.gates.push_back({GateType::Z, static_cast<uint32_t>(q), 0});
        if (t.zs[q].sign_exponent() == 2) enc.gates.push_back({GateType::X, static_cast<uint32_t>(q), 0});
    }
    Circuit inv = elim.inverse();
    enc.gates.insert(enc.gates.end(), inv.gates.begin(), inv.gates.end());
    return enc;
}

size_t pure_distance(const StabilizerCode &code) {
    if (code.n() > 12) throw std::length_error("pure_distance: brute force limited to n <= 12");
    std::vector<BitVec> basis;
    for (const auto &p : code.normalizer_basis()) basis.push_back(p.symplectic());
    size_t n = code.n();
    size_t best = n + 1;
    // Gray-code walk over the span.
    BitVec cur(2 * n);
    uint64_t total = uint64_t{1} << basis.size();
    for (uint64_t i = 1; i < total; i++) {
        cur ^= basis[std::countr_zero(i)];
        size_t w = (cur.slice(0, n) | cur.slice(n, n)).popcount();
        if (w > 0 && w < best) best = w;
    }
    return best;
}

std::vector<PauliOperator> stabilizer_group(const StabilizerCode &code) {
    if (code.r() > 20) throw std::length_error("stabilizer_group: too many generators");
    std::vector<PauliOperator> out;
    out.push_back(PauliOperator::identity(code.n()));
    for (const auto &g : code.gens()) {
        size_t m = out.size();
        for (size_t i = 0; i < m; i++) out.push_back(pauli_mul(out[i], g));
    }
    return out;
}

}  // namespace pmdkit
