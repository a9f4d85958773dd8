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

#include "pmdkit/ptc.h"

#include <bit>
#include <stdexcept>

namespace pmdkit {

std::vector<FieldElement> bcgst_vector(const FieldElement &alpha, size_t r) {
    std::vector<FieldElement> v;
    FieldElement p = FieldElement::one(alpha.field);
    for (size_t i = 0; i < 2 * r; i++) {
        v.push_back(p);
        p = gf_mul(p, alpha);
    }
    return v;
}

PtcFamily build_bcgst_family(size_t n, int lambda, EncoderConvention conv) {
    if (lambda < 1 || lambda > 16) throw std::invalid_argument("lambda must be in [1, 16]");
    return build_bcgst_family(n, lambda, polynomial_basis(default_field(lambda)), conv);
}

PtcFamily build_bcgst_family(size_t n, int lambda, const std::vector<FieldElement> &alpha_basis,
                             EncoderConvention conv) {
    if (lambda < 1 || n == 0 || n % static_cast<size_t>(lambda) != 0) {
        throw std::invalid_argument("lambda must be positive and divide n");
    }
    if (lambda > 12) throw std::length_error("key space too large");
    PtcFamily fam;
    fam.n = n;
    fam.lambda = lambda;
    fam.r = n / lambda;
    fam.field = alpha_basis.empty() ? default_field(lambda) : alpha_basis[0].field;
    fam.basis = compute_dual_basis(fam.field, alpha_basis);
    auto gammas = polynomial_basis(fam.field);
    for (uint32_t a = 0; a < fam.field.size(); a++) {
        auto v = bcgst_vector(FieldElement(a, fam.field), fam.r);
        std::vector<PauliOperator> gens;
        for (const auto &g : gammas) {
            BitVec x(n), z(n);
            for (size_t i = 0; i < fam.r; i++) {
                uint32_t cx = coordinates(gf_mul(g, v[i]), fam.basis.alpha);
                uint32_t cz = dual_coordinates(gf_mul(g, v[fam.r + i]), fam.basis);
                for (int t = 0; t < lambda; t++) {
                    x.set(i * lambda + t, (cx >> t) & 1);
                    z.set(i * lambda + t, (cz >> t) & 1);
                }
            }
            gens.push_back(PauliOperator::hermitian(std::move(x), std::move(z)));
        }
        // StabilizerCode rejects anticommuting or dependent generators.
        fam.codes.emplace_back(n, std::move(gens), conv);
    }
    return fam;
}

namespace {

// Packed symplectic words for n <= 32: bits [0, n) = x, [n, 2n) = z.
uint64_t pack(const PauliOperator &p) {
    uint64_t w = 0;
    for (size_t q = 0; q < p.n; q++) {
        if (p.x.get(q)) w |= uint64_t{1} << q;
        if (p.z.get(q)) w |= uint64_t{1} << (p.n + q);
    }
    return w;
}
uint64_t swap_halves(uint64_t w, size_t n) {
    uint64_t lo = w & ((uint64_t{1} << n) - 1);
    return (w >> n) | (lo << n);
}
PauliOperator unpack(uint64_t w, size_t n) {
    return PauliOperator::from_symplectic(BitVec::from_u64(w, 2 * n));
}

struct PackedFamily {
    size_t n;
    std::vector<std::vector<uint64_t>> swapped;  // per key, generators with halves swapped
    std::vector<std::vector<uint64_t>> gens;
};

PackedFamily packed(const PtcFamily &f) {
    if (f.n > 32) throw std::length_error("packed sweeps support n <= 32");
    PackedFamily p{f.n, {}, {}};
    for (const auto &c : f.codes) {
        std::vector<uint64_t> s, g;
        for (const auto &gen : c.gens()) {
            g.push_back(pack(gen));
            s.push_back(swap_halves(pack(gen), f.n));
        }
        p.swapped.push_back(s);
        p.gens.push_back(g);
    }
    return p;
}

bool commutes_all(uint64_t e, const std::vector<uint64_t> &swapped) {
    for (uint64_t s : swapped) {
        if (std::popcount(e & s) & 1) return false;
    }
    return true;
}

}  // namespace

PtcErrorResult measure_strong_ptc_error(const PtcFamily &family) {
    size_t n = family.n;
    uint64_t keys = family.num_keys();
    if (2 * n >= 63 || (uint64_t{1} << (2 * n)) > kExhaustiveGuard / keys) {
        throw std::length_error("exhaustive PTC sweep exceeds 1e8 iterations; use sampling mode");
    }
    auto pf = packed(family);
    uint64_t total = uint64_t{1} << (2 * n);
    uint64_t best = 0, best_e = 1;
#pragma omp parallel
    {
        uint64_t lb = 0, le = 1;
#pragma omp for schedule(static)
        for (int64_t ei = 1; ei < static_cast<int64_t>(total); ei++) {
            uint64_t e = static_cast<uint64_t>(ei);
            uint64_t c = 0;
            for (uint64_t k = 0; k < keys; k++) c += commutes_all(e, pf.swapped[k]);
            if (c > lb || (c == lb && e < le)) {
                lb = c;
                le = e;
            }
        }
#pragma omp critical
        {
            if (lb > best || (lb == best && le < best_e)) {
                best = lb;
                best_e = le;
            }
        }
    }
    return {Fraction{best, keys}, unpack(best_e, n)};
}

PtcSampleResult sample_strong_ptc_error(const PtcFamily &family, uint64_t samples, Rng &rng) {
    size_t n = family.n;
    PtcSampleResult out;
    out.samples = samples;
    auto pf = packed(family);
    uint64_t mask = (2 * n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << (2 * n)) - 1);
    uint64_t best_e = 1;
    for (uint64_t t = 0; t < samples; t++) {
        uint64_t e;
        do {
            e = rng.next_u64() & mask;
        } while (e == 0);
        uint64_t c = 0;
        for (uint64_t k = 0; k < family.num_keys(); k++) c += commutes_all(e, pf.swapped[k]);
        double f = static_cast<double>(c) / family.num_keys();
        if (f > out.max_observed) {
            out.max_observed = f;
            best_e = e;
        }
    }
    out.argmax = unpack(best_e, n);
    out.missed_mass_upper95 = samples ? 3.0 / samples : 1.0;
    return out;
}

bool stabilizer_meets_normalizer(const PtcFamily &family, uint32_t a, uint32_t b) {
    const auto &ga = family.code(a).gens();
    const auto &cb = family.code(b);
    std::vector<BitVec> rows;
    for (const auto &g : ga) rows.push_back(g.symplectic());
    size_t r = rows.size();
    BitVec cur(2 * family.n);
    for (uint64_t i = 1; i < (uint64_t{1} << r); i++) {
        cur ^= rows[std::countr_zero(i)];
        if (syndrome(cb, PauliOperator::from_symplectic(cur)).none()) return true;
    }
    return false;
}

PairwiseResult measure_pairwise_detectability(const PtcFamily &family) {
    auto pf = packed(family);
    uint32_t keys = static_cast<uint32_t>(family.num_keys());
    PairwiseResult out{Fraction{0, keys}, 0};
    if (keys < 2) return out;
    for (uint32_t s = 1; s < keys; s++) {
        uint64_t bad = 0;
        for (uint32_t k = 0; k < keys; k++) {
            const auto &g = pf.gens[k];
            const auto &sw = pf.swapped[k ^ s];
            uint64_t cur = 0;
            bool hit = false;
            for (uint64_t i = 1; i < (uint64_t{1} << g.size()) && !hit; i++) {
                cur ^= g[std::countr_zero(i)];
                hit = commutes_all(cur, sw);
            }
            bad += hit;
        }
        if (bad > out.delta.num) {
            out.delta.num = bad;
            out.worst_shift = s;
        }
    }
    return out;
}

std::vector<FieldElement> pbeta_roots(const FieldElement &beta, size_t r) {
    if (beta.is_zero()) throw std::invalid_argument("pbeta_roots: beta must be nonzero");
    const FieldSpec &f = beta.field;
    std::vector<FieldElement> roots;
    FieldElement one = FieldElement::one(f);
    for (uint32_t a = 0; a < f.size(); a++) {
        FieldElement al(a, f);
        FieldElement ab = gf_add(al, beta);
        FieldElement left = gf_add(gf_pow(ab, r), gf_pow(al, r));
        FieldElement right = gf_add(gf_mul(gf_pow(al, r + 1), gf_pow(ab, r + 1)), one);
        if (gf_mul(left, right).is_zero()) roots.push_back(al);
    }
    return roots;
}

}  // namespace pmdkit
