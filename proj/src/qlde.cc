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

#include "pmdkit/qlde.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pmdkit/f2.h"

namespace pmdkit {

ErasurePattern::ErasurePattern(size_t n_, std::vector<size_t> erased_) : n(n_), erased(std::move(erased_)) {
    std::sort(erased.begin(), erased.end());
    for (size_t i = 0; i < erased.size(); i++) {
        if (erased[i] >= n) throw std::invalid_argument("erased index " + std::to_string(erased[i]) + " out of range");
        if (i && erased[i] == erased[i - 1]) throw std::invalid_argument("erased index repeated");
    }
}

bool ErasurePattern::contains(size_t q) const { return std::binary_search(erased.begin(), erased.end(), q); }

std::string ErasurePattern::str() const {
    if (erased.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < erased.size(); i++) out += (i ? "," : "") + std::to_string(erased[i]);
    return out;
}

ErasurePattern ErasurePattern::parse(const std::string &text, size_t n) {
    std::vector<size_t> idx;
    if (!text.empty() && text != "-") {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            unsigned long v;
            try {
                v = std::stoul(tok, &pos);
            } catch (const std::exception &) {
                throw std::invalid_argument("bad erased index '" + tok + "'");
            }
            if (pos != tok.size()) throw std::invalid_argument("bad erased index '" + tok + "'");
            idx.push_back(v);
        }
    }
    return ErasurePattern(n, idx);
}

std::vector<BitVec> classical_erasure_list_decode(const std::vector<BitVec> &h, size_t n,
                                                  const ErasurePattern &erased, const BitVec &s) {
    size_t t = erased.erased.size();
    // Restrict H to the erased columns.
    std::vector<BitVec> rows;
    for (const BitVec &row : h) {
        if (row.size() != n) throw std::invalid_argument("parity row length mismatch");
        BitVec r(t);
        for (size_t j = 0; j < t; j++) r.set(j, row.get(erased.erased[j]));
        rows.push_back(r);
    }
    auto part = f2::solve(rows, s, t);
    if (!part) return {};
    std::vector<BitVec> ker = f2::kernel(rows, t);
    if (ker.size() > 20) throw std::length_error("classical list too large");
    std::vector<BitVec> local = f2::enumerate_span(ker, t);
    std::vector<BitVec> out;
    for (BitVec &v : local) {
        v ^= *part;
        BitVec e(n);
        for (size_t j = 0; j < t; j++) e.set(erased.erased[j], v.get(j));
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const BitVec &a, const BitVec &b) { return a.lex_less(b); });
    return out;
}

namespace {

// Generator row restricted to a coordinate list (x then z of each listed qubit).
struct Restriction {
    std::vector<BitVec> on_erased;  // per generator, length 2t, (x_E | z_E)
    std::vector<BitVec> by_outside; // per outside coordinate, length r: generator bits there
};

Restriction restrict(const StabilizerCode &code, const ErasurePattern &e) {
    size_t n = code.n(), t = e.erased.size(), r = code.r();
    Restriction res;
    for (const PauliOperator &g : code.gens()) {
        BitVec v(2 * t);
        for (size_t j = 0; j < t; j++) {
            v.set(j, g.x.get(e.erased[j]));
            v.set(t + j, g.z.get(e.erased[j]));
        }
        res.on_erased.push_back(v);
    }
    for (size_t q = 0; q < n; q++) {
        if (e.contains(q)) continue;
        BitVec bx(r), bz(r);
        for (size_t i = 0; i < r; i++) {
            bx.set(i, code.gens()[i].x.get(q));
            bz.set(i, code.gens()[i].z.get(q));
        }
        res.by_outside.push_back(bx);
        res.by_outside.push_back(bz);
    }
    return res;
}

// Local (x_E | z_E) -> full (x | z).
BitVec lift(const BitVec &local, const ErasurePattern &e) {
    size_t t = e.erased.size();
    BitVec full(2 * e.n);
    for (size_t j = 0; j < t; j++) {
        full.set(e.erased[j], local.get(j));
        full.set(e.n + e.erased[j], local.get(t + j));
    }
    return full;
}

// Symplectic-product rows: P . swap(g) for P on the erased coordinates.
std::vector<BitVec> syndrome_rows(const Restriction &res, size_t t) {
    std::vector<BitVec> rows;
    for (const BitVec &g : res.on_erased) {
        BitVec sw(2 * t);
        for (size_t j = 0; j < t; j++) {
            sw.set(j, g.get(t + j));
            sw.set(t + j, g.get(j));
        }
        rows.push_back(sw);
    }
    return rows;
}

std::vector<BitVec> stabilizers_on(const StabilizerCode &code, const Restriction &res) {
    std::vector<BitVec> combos = f2::kernel(res.by_outside, code.r());
    std::vector<BitVec> gens = code.generator_rows();
    std::vector<BitVec> out;
    for (const BitVec &c : combos) {
        BitVec v(2 * code.n());
        for (size_t i = 0; i < code.r(); i++)
            if (c.get(i)) v ^= gens[i];
        out.push_back(v);
    }
    return out;
}

}  // namespace

uint64_t quotient_size(const StabilizerCode &code, const ErasurePattern &erased) {
    size_t t = erased.erased.size();
    Restriction res = restrict(code, erased);
    size_t dim_n = 2 * t - f2::rank(syndrome_rows(res, t));
    size_t dim_s = code.r() - f2::rank(res.by_outside);
    return uint64_t{1} << (dim_n - dim_s);
}

CorrectionList erasure_list_decode(const StabilizerCode &code, const ErasurePattern &erased, const SyndromeVector &s) {
    if (erased.n != code.n()) throw std::invalid_argument("erasure pattern length does not match code");
    if (s.size() != code.r()) throw std::invalid_argument("syndrome length does not match code");
    size_t t = erased.erased.size();
    Restriction res = restrict(code, erased);
    std::vector<BitVec> rows = syndrome_rows(res, t);
    CorrectionList out;
    auto part = f2::solve(rows, s, 2 * t);
    if (!part) return out;

    std::vector<size_t> piv;
    std::vector<BitVec> s_rref = f2::rref(stabilizers_on(code, res), &piv);
    // Quotient basis: normalizer-on-E vectors independent modulo S_E.
    std::vector<BitVec> span = s_rref, quotient;
    for (const BitVec &k : f2::kernel(rows, 2 * t)) {
        BitVec full = lift(k, erased);
        if (!f2::in_span(span, full)) {
            span.push_back(full);
            quotient.push_back(full);
        }
    }
    if (quotient.size() >= 64 || (uint64_t{1} << quotient.size()) > kMaxListSize) {
        throw std::length_error("erasure_list_decode: list exceeds " + std::to_string(kMaxListSize) + " entries");
    }
    BitVec base = lift(*part, erased);
    std::vector<BitVec> reps;
    for (const BitVec &c : f2::enumerate_span(quotient, 2 * code.n())) reps.push_back(f2::reduce(base ^ c, s_rref, piv));
    std::sort(reps.begin(), reps.end(), [](const BitVec &a, const BitVec &b) { return a.lex_less(b); });
    for (const BitVec &v : reps) out.entries.push_back(PauliOperator::from_symplectic(v));
    return out;
}

namespace {

template <typename F>
void for_each_subset(size_t n, size_t max_size, F &&f) {
    std::vector<size_t> cur;
    auto rec = [&](auto &&self, size_t start) -> void {
        f(cur);
        if (cur.size() == max_size) return;
        for (size_t q = start; q < n; q++) {
            cur.push_back(q);
            self(self, q + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

size_t budget(size_t n, double delta) {
    if (delta < 0 || delta > 1) throw std::invalid_argument("delta must lie in [0, 1]");
    return static_cast<size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
}

}  // namespace

ProfileResult list_size_profile(const StabilizerCode &code, double delta) {
    if (code.n() > 12) throw std::length_error("list_size_profile: exhaustive profile limited to n <= 12");
    ProfileResult best;
    best.max_erased = budget(code.n(), delta);
    best.worst = ErasurePattern(code.n(), {});
    for_each_subset(code.n(), best.max_erased, [&](const std::vector<size_t> &e) {
        ErasurePattern p(code.n(), e);
        uint64_t l = quotient_size(code, p);
        if (l > best.list_size) {
            best.list_size = l;
            best.worst = p;
        }
    });
    return best;
}

ProfileResult classical_list_profile(const std::vector<BitVec> &h, size_t n, double delta) {
    if (n > 24) throw std::length_error("classical_list_profile: exhaustive profile limited to n <= 24");
    ProfileResult best;
    best.max_erased = budget(n, delta);
    best.worst = ErasurePattern(n, {});
    for_each_subset(n, best.max_erased, [&](const std::vector<size_t> &e) {
        std::vector<BitVec> rows;
        for (const BitVec &row : h) {
            BitVec r(e.size());
            for (size_t j = 0; j < e.size(); j++) r.set(j, row.get(e[j]));
            rows.push_back(r);
        }
        uint64_t l = uint64_t{1} << (e.size() - f2::rank(rows));
        if (l > best.list_size) {
            best.list_size = l;
            best.worst = ErasurePattern(n, e);
        }
    });
    return best;
}

namespace {

BitVec random_vector(size_t n, Rng &rng) {
    BitVec v(n);
    for (size_t i = 0; i < n; i++) v.set(i, rng.bit());
    return v;
}

void check_css_params(size_t n, size_t k) {
    if (k >= n) throw std::invalid_argument("random CSS needs k < n");
    if ((n + k) % 2) throw std::invalid_argument("random CSS needs n + k even");
}

}  // namespace

RandomCss sample_random_css(size_t n, size_t k, Rng &rng) {
    check_css_params(n, k);
    size_t k1 = (n + k) / 2, k2 = n - k1;
    RandomCss out;
    const size_t cap = 1000;
    while (out.g.size() < k1) {
        size_t tries = 0;
        BitVec v;
        do {
            if (++tries > cap) throw std::runtime_error("sample_random_css: resampling cap exceeded");
            v = random_vector(n, rng);
            out.attempts++;
        } while (f2::in_span(out.g, v));
        out.g.push_back(v);
    }
    out.h2.assign(out.g.begin(), out.g.begin() + k2);
    out.h1 = f2::kernel(out.g, n);
    out.code = css_from_classical(out.h1, out.h2, n);
    out.rate_ok = out.code.k() == k;
    return out;
}

size_t random_css_raw_logicals(size_t n, size_t k, Rng &rng) {
    check_css_params(n, k);
    size_t k1 = (n + k) / 2, k2 = n - k1;
    std::vector<BitVec> g;
    for (size_t i = 0; i < k1; i++) g.push_back(random_vector(n, rng));
    std::vector<BitVec> h2(g.begin(), g.begin() + k2);
    // dim C1 - dim C2^perp.
    return f2::rank(g) - f2::rank(h2);
}

}  // namespace pmdkit
