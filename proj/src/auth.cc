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

#include "pmdkit/auth.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "pmdkit/galois.h"

namespace pmdkit {

const char kPauliSymbols[4] = {'I', 'X', 'Y', 'Z'};

CMat pauli2(int sigma) {
    CMat m = CMat::Zero(2, 2);
    const cplx i(0, 1);
    switch (sigma) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -i, i, 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli2: index must be 0..3");
    }
    return m;
}

namespace {

void require_single_qubit(const QuantumChannel &ch, const char *what) {
    if (ch.support.size() != 1) throw std::invalid_argument(std::string(what) + ": expected a single-qubit channel");
}

CMat apply_map(const QuantumChannel &ch, const CMat &rho) {
    CMat out = CMat::Zero(rho.rows(), rho.cols());
    for (const CMat &k : ch.kraus) out += k * rho * k.adjoint();
    return out;
}

CMat choi_of(const std::function<CMat(const CMat &)> &map) {
    CMat j = CMat::Zero(4, 4);
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            CMat e = CMat::Zero(2, 2);
            e(a, b) = 1;
            j.block(2 * a, 2 * b, 2, 2) = map(e);
        }
    }
    return j;
}

}  // namespace

std::vector<PauliCoeffs> pauli_decompose_channel(const QuantumChannel &ch) {
    require_single_qubit(ch, "pauli_decompose_channel");
    std::vector<PauliCoeffs> out;
    for (const CMat &k : ch.kraus) {
        PauliCoeffs c;
        for (int s = 0; s < 4; s++) c[s] = (pauli2(s).adjoint() * k).trace() / 2.0;
        out.push_back(c);
    }
    return out;
}

CMat pauli_reconstruct(const PauliCoeffs &c) {
    CMat m = CMat::Zero(2, 2);
    for (int s = 0; s < 4; s++) m += c[s] * pauli2(s);
    return m;
}

PauliProbs twirl_channel(const QuantumChannel &ch) {
    PauliProbs p{0, 0, 0, 0};
    for (const auto &c : pauli_decompose_channel(ch)) {
        for (int s = 0; s < 4; s++) p[s] += std::norm(c[s]);
    }
    return p;
}

std::vector<PauliProbs> twirl_channels(const std::vector<QuantumChannel> &chs) {
    std::vector<PauliProbs> out;
    for (const auto &ch : chs) out.push_back(twirl_channel(ch));
    return out;
}

CMat choi_matrix(const QuantumChannel &ch) {
    require_single_qubit(ch, "choi_matrix");
    return choi_of([&](const CMat &e) { return apply_map(ch, e); });
}

CMat pad_average_choi(const QuantumChannel &ch) {
    require_single_qubit(ch, "pad_average_choi");
    return choi_of([&](const CMat &e) {
        CMat acc = CMat::Zero(2, 2);
        for (int s = 0; s < 4; s++) {
            CMat p = pauli2(s);
            acc += p.adjoint() * apply_map(ch, p * e * p.adjoint()) * p;
        }
        return CMat(acc / 4.0);
    });
}

CMat pauli_channel_choi(const PauliProbs &p) {
    return choi_of([&](const CMat &e) {
        CMat acc = CMat::Zero(2, 2);
        for (int s = 0; s < 4; s++) acc += p[s] * pauli2(s) * e * pauli2(s);
        return acc;
    });
}

EtaPauliReport eta_classify(const QuantumChannel &ch) {
    PauliProbs p = twirl_channel(ch);
    int best = 0;
    for (int s = 1; s < 4; s++) {
        if (p[s] > p[best] + 1e-15) best = s;
    }
    return {std::max(0.0, 1.0 - p[best]), kPauliSymbols[best]};
}

namespace {

// m acting on qubit q from the left: rho <- (m on q) rho.
void left_1q(const CMat &m, CMat &rho, size_t n, size_t q) {
    uint64_t bit = uint64_t{1} << (n - 1 - q), dim = uint64_t{1} << n;
    for (uint64_t r = 0; r < dim; r++) {
        if (r & bit) continue;
        for (uint64_t c = 0; c < dim; c++) {
            cplx a = rho(r, c), b = rho(r | bit, c);
            rho(r, c) = m(0, 0) * a + m(0, 1) * b;
            rho(r | bit, c) = m(1, 0) * a + m(1, 1) * b;
        }
    }
}

CMat conjugate_1q(const CMat &m, CMat rho, size_t n, size_t q) {
    left_1q(m, rho, n, q);
    CMat t = rho.adjoint();
    left_1q(m, t, n, q);
    return t.adjoint();
}

}  // namespace

CMat pad_average(const CMat &rho, size_t n, const std::vector<size_t> &qubits) {
    CMat cur = rho;
    for (size_t q : qubits) {
        if (q >= n) throw std::invalid_argument("pad_average: qubit out of range");
        CMat acc = CMat::Zero(cur.rows(), cur.cols());
        for (int s = 0; s < 4; s++) acc += conjugate_1q(pauli2(s), cur, n, q);
        cur = acc / 4.0;
    }
    return cur;
}

CMat trace_out_front(const CMat &rho, size_t n_front, size_t n) {
    if (n_front > n) throw std::invalid_argument("trace_out_front: too many qubits");
    uint64_t d = uint64_t{1} << (n - n_front), f = uint64_t{1} << n_front;
    CMat out = CMat::Zero(d, d);
    for (uint64_t i = 0; i < f; i++) out += rho.block(i * d, i * d, d, d);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Packing sums.

PauliGram<double> pauli_gram(const QuantumChannel &ch) {
    PauliGram<double> g{};
    for (const auto &c : pauli_decompose_channel(ch)) {
        for (int s = 0; s < 4; s++) {
            for (int t = 0; t < 4; t++) g[s][t] += std::abs(c[s]) * std::abs(c[t]);
        }
    }
    return g;
}

PauliGram<Rational> pauli_gram_from_probs(const std::array<Rational, 4> &p) {
    PauliGram<Rational> g;
    for (int s = 0; s < 4; s++) {
        for (int t = 0; t < 4; t++) g[s][t] = s == t ? p[s] : Rational(0);
    }
    return g;
}

PauliGram<Rational> pauli_gram_from_magnitudes(const std::vector<std::array<Rational, 4>> &mags) {
    PauliGram<Rational> g;
    for (auto &row : g) row.fill(Rational(0));
    Rational total = 0;
    for (const auto &m : mags) {
        for (int s = 0; s < 4; s++) {
            if (m[s] < 0) throw std::invalid_argument("pauli_gram_from_magnitudes: negative magnitude");
            total += m[s] * m[s];
            for (int t = 0; t < 4; t++) g[s][t] += m[s] * m[t];
        }
    }
    if (total != 1) throw std::invalid_argument("pauli_gram_from_magnitudes: squared magnitudes must sum to 1");
    return g;
}

PauliGram<Rational> mix_grams(const PauliGram<Rational> &a, const PauliGram<Rational> &b, const Rational &w) {
    PauliGram<Rational> g;
    for (int s = 0; s < 4; s++) {
        for (int t = 0; t < 4; t++) g[s][t] = w * a[s][t] + (1 - w) * b[s][t];
    }
    return g;
}

template <class T>
T gram_eta(const PauliGram<T> &g) {
    T best = g[0][0];
    for (int s = 1; s < 4; s++) best = std::max(best, g[s][s]);
    return T(1) - best;
}
template double gram_eta<double>(const PauliGram<double> &);
template Rational gram_eta<Rational>(const PauliGram<Rational> &);

namespace {

// Per-qubit symbol index (I, X, Y, Z) of every element of the span of `gens`, modulo phase.
std::vector<std::vector<uint8_t>> span_symbols(const std::vector<PauliOperator> &gens, size_t n) {
    if (gens.size() > 20) throw std::length_error("span_symbols: group too large");
    std::vector<std::vector<uint8_t>> out;
    BitVec x(n), z(n);
    uint64_t count = uint64_t{1} << gens.size();
    for (uint64_t g = 0; g < count; g++) {
        if (g) {
            size_t j = static_cast<size_t>(std::countr_zero(g));
            x ^= gens[j].x;
            z ^= gens[j].z;
        }
        std::vector<uint8_t> sym(n);
        for (size_t q = 0; q < n; q++) sym[q] = x.get(q) ? (z.get(q) ? 2 : 1) : (z.get(q) ? 3 : 0);
        out.push_back(std::move(sym));
    }
    return out;
}

void packing_guard(size_t grams, const StabilizerCode &code, const char *what) {
    if (grams != code.n()) throw std::invalid_argument(std::string(what) + ": one channel per code qubit required");
    if (code.n() > 8) throw std::length_error(std::string(what) + ": limited to 8 qubits");
}

using BigInt = boost::multiprecision::cpp_int;

// sum over (F, G) of prod_i g_i[F_i][G_i]. Rationals are scaled to integers per qubit first.
template <class T>
T pair_sum(const std::vector<PauliGram<T>> &grams, const std::vector<std::vector<uint8_t>> &fs,
           const std::vector<std::vector<uint8_t>> &gs, bool diagonal) {
    size_t n = grams.size();
    if constexpr (std::is_same_v<T, double>) {
        double total = 0;
        for (size_t a = 0; a < fs.size(); a++) {
            for (size_t b = diagonal ? a : 0; b < (diagonal ? a + 1 : gs.size()); b++) {
                double prod = 1;
                for (size_t q = 0; q < n && prod != 0; q++) prod *= grams[q][fs[a][q]][gs[b][q]];
                total += prod;
            }
        }
        return total;
    } else {
        std::vector<std::array<std::array<BigInt, 4>, 4>> ints(n);
        BigInt den = 1;
        for (size_t q = 0; q < n; q++) {
            BigInt l = 1;
            for (int s = 0; s < 4; s++) {
                for (int t = 0; t < 4; t++) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(grams[q][s][t]));
            }
            for (int s = 0; s < 4; s++) {
                for (int t = 0; t < 4; t++) {
                    const Rational &v = grams[q][s][t];
                    ints[q][s][t] = boost::multiprecision::numerator(v) * (l / boost::multiprecision::denominator(v));
                }
            }
            den *= l;
        }
        BigInt total = 0, prod;
        for (size_t a = 0; a < fs.size(); a++) {
            for (size_t b = diagonal ? a : 0; b < (diagonal ? a + 1 : gs.size()); b++) {
                prod = 1;
                for (size_t q = 0; q < n && prod != 0; q++) prod *= ints[q][fs[a][q]][gs[b][q]];
                total += prod;
            }
        }
        return Rational(total, den);
    }
}

}  // namespace

template <class T>
T stabilizer_mass(const std::vector<PauliGram<T>> &grams, const StabilizerCode &code) {
    packing_guard(grams.size(), code, "stabilizer_mass");
    auto s = span_symbols(code.gens(), code.n());
    return pair_sum(grams, s, s, true);
}
template double stabilizer_mass<double>(const std::vector<PauliGram<double>> &, const StabilizerCode &);
template Rational stabilizer_mass<Rational>(const std::vector<PauliGram<Rational>> &, const StabilizerCode &);

template <class T>
T normalizer_l1_mass(const std::vector<PauliGram<T>> &grams, const StabilizerCode &code) {
    packing_guard(grams.size(), code, "normalizer_l1_mass");
    auto nn = span_symbols(code.normalizer_basis(), code.n());
    return pair_sum(grams, nn, nn, false);
}
template double normalizer_l1_mass<double>(const std::vector<PauliGram<double>> &, const StabilizerCode &);
template Rational normalizer_l1_mass<Rational>(const std::vector<PauliGram<Rational>> &, const StabilizerCode &);

namespace {
std::vector<PauliGram<double>> grams_of(const std::vector<QuantumChannel> &chs) {
    std::vector<PauliGram<double>> g;
    for (const auto &ch : chs) g.push_back(pauli_gram(ch));
    return g;
}

std::string rstr(const Rational &r) {
    std::ostringstream s;
    s << r;
    return s.str();
}
}  // namespace

double stabilizer_mass(const std::vector<QuantumChannel> &chs, const StabilizerCode &code) {
    return stabilizer_mass(grams_of(chs), code);
}

double normalizer_l1_mass(const std::vector<QuantumChannel> &chs, const StabilizerCode &code) {
    return normalizer_l1_mass(grams_of(chs), code);
}

PackingCheck check_stabilizer_packing(const std::vector<PauliGram<Rational>> &grams, const StabilizerCode &code,
                                      size_t d_star, size_t exponent_shift) {
    PackingCheck res;
    res.lhs = stabilizer_mass(grams, code);
    res.lhs_value = res.lhs.convert_to<double>();
    std::vector<Rational> etas;
    for (const auto &g : grams) etas.push_back(gram_eta(g));
    size_t cap = d_star > exponent_shift ? d_star - exponent_shift : 0;
    Rational tightest = 1;
    std::string expr = "sum_S |c|^2 <= 1";
    for (const Rational &ej : etas) {
        if (ej <= 0) continue;
        size_t t = static_cast<size_t>(std::count_if(etas.begin(), etas.end(), [&](const Rational &e) { return e >= ej; }));
        size_t e = std::min(t, cap);
        Rational bound = 1;
        for (size_t i = 0; i < e; i++) bound *= (1 - ej);
        if (res.lhs > bound) res.holds = false;
        if (bound < tightest) {
            tightest = bound;
            expr = "sum_S |c|^2 <= (1 - " + rstr(ej) + ")^min(" + std::to_string(t) + ", " + std::to_string(cap) + ")";
        }
    }
    if (res.lhs > 1) res.holds = false;
    res.bound_value = tightest.convert_to<double>();
    res.bound_expr = expr;
    return res;
}

PackingCheck check_normalizer_packing(const std::vector<PauliGram<Rational>> &grams, const StabilizerCode &code,
                                      size_t d_star) {
    PackingCheck res;
    res.lhs = normalizer_l1_mass(grams, code);
    res.lhs_value = res.lhs.convert_to<double>();
    size_t b = grams.size();
    std::vector<Rational> etas;
    for (const auto &g : grams) etas.push_back(gram_eta(g));
    std::sort(etas.begin(), etas.end());
    Rational eta = 0;
    if (b > d_star) eta = etas[b - d_star - 1];
    BigInt num = boost::multiprecision::numerator(eta), den = boost::multiprecision::denominator(eta);
    if (den > 4096) throw std::length_error("check_normalizer_packing: eta denominator above 4096");
    unsigned c = den.convert_to<unsigned>();
    BigInt expo = 8 * num * b;
    if (expo > 1000000) throw std::length_error("check_normalizer_packing: exponent too large");
    BigInt p = boost::multiprecision::numerator(res.lhs), q = boost::multiprecision::denominator(res.lhs);
    BigInt lhs = boost::multiprecision::pow(p, c);
    BigInt rhs = boost::multiprecision::pow(q, c) << expo.convert_to<unsigned>();
    res.holds = lhs <= rhs;
    res.bound_value = std::exp2(8.0 * eta.convert_to<double>() * static_cast<double>(b));
    res.bound_expr = "sum_mu (sum_N |c|)^2 <= 2^(8 * " + rstr(eta) + " * " + std::to_string(b) + ")";
    return res;
}

// ---------------------------------------------------------------------------------------------
// t-wise independent pad.

BitVec twise_pad(const BitVec &seed, size_t t, size_t length, int w) {
    if (t == 0) throw std::invalid_argument("twise_pad: t must be positive");
    if (w < 1 || w > 16) throw std::invalid_argument("twise_pad: w must be in [1, 16]");
    if (seed.size() != twise_seed_length(t, w)) throw std::invalid_argument("twise_pad: seed length must be t * w");
    size_t points = (length + w - 1) / w;
    if (points > (size_t{1} << w)) throw std::invalid_argument("twise_pad: more than 2^w evaluation points needed");
    FieldSpec f = default_field(w);
    std::vector<uint32_t> coeffs(t, 0);
    for (size_t j = 0; j < t; j++) {
        for (int i = 0; i < w; i++) {
            if (seed.get(j * w + i)) coeffs[j] |= uint32_t{1} << i;
        }
    }
    BitVec out(length);
    for (size_t x = 0; x < points; x++) {
        uint32_t acc = 0;
        for (size_t j = t; j-- > 0;) acc = gf_mul_raw(acc, static_cast<uint32_t>(x), f) ^ coeffs[j];
        for (int i = 0; i < w && x * w + i < length; i++) out.set(x * w + i, (acc >> i) & 1);
    }
    return out;
}

size_t twise_check_uniform(size_t t, size_t length, int w, size_t order) {
    size_t sl = twise_seed_length(t, w);
    if (sl > 20) throw std::length_error("twise_check_uniform: seed longer than 20 bits");
    if (order == 0 || order > 3 || order > length) throw std::invalid_argument("twise_check_uniform: order must be 1..3");
    uint64_t seeds = uint64_t{1} << sl;
    std::vector<BitVec> pads;
    for (uint64_t s = 0; s < seeds; s++) pads.push_back(twise_pad(BitVec::from_u64(s, sl), t, length, w));
    uint64_t expect = seeds >> order;
    size_t checked = 0;
    std::vector<size_t> idx(order);
    std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t start) {
        if (depth == order) {
            std::vector<uint64_t> counts(size_t{1} << order, 0);
            for (const auto &p : pads) {
                uint64_t pat = 0;
                for (size_t d = 0; d < order; d++) pat |= uint64_t{p.get(idx[d])} << d;
                counts[pat]++;
            }
            for (uint64_t c : counts) {
                if (c != expect) {
                    std::string which;
                    for (size_t d = 0; d < order; d++) which += (d ? "," : "") + std::to_string(idx[d]);
                    throw std::logic_error("twise_check_uniform: bits {" + which + "} not uniform");
                }
            }
            checked++;
            return;
        }
        for (size_t i = start; i < length; i++) {
            idx[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return checked;
}

// ---------------------------------------------------------------------------------------------
// Pads and attacks.

PauliOperator pad_pauli(const BitVec &key, size_t nq) {
    if (key.size() != 2 * nq) throw std::invalid_argument("pad_pauli: key must have 2N bits");
    return PauliOperator::hermitian(key.slice(0, nq), key.slice(nq, nq));
}

PauliOperator pad_pauli(uint64_t key, size_t nq) { return pad_pauli(BitVec::from_u64(key, 2 * nq), nq); }

WireAttack WireAttack::identity(size_t nq, size_t nbits) {
    WireAttack a;
    for (size_t i = 0; i < nq; i++) a.quantum.push_back(QuantumChannel::identity(1, 0));
    a.classical = TamperFunction::keep_all(nbits);
    return a;
}

namespace {

size_t log2_exact(uint64_t d, const char *what) {
    if (d == 0 || (d & (d - 1))) throw std::invalid_argument(std::string(what) + ": dimension is not a power of two");
    return static_cast<size_t>(std::countr_zero(d));
}

// Applies each wire's channel in turn; one output per Kraus product, zero branches dropped.
std::vector<CVec> apply_wires(const std::vector<QuantumChannel> &chs, const std::vector<size_t> &wires, CVec v,
                              size_t nreg) {
    std::vector<CVec> cur{std::move(v)};
    for (size_t i = 0; i < wires.size(); i++) {
        const auto &ch = chs[i];
        require_single_qubit(ch, "wire attack");
        if (ch.kraus.size() == 1 && ch.kraus[0].isIdentity(0)) continue;
        std::vector<CVec> next;
        for (const CVec &b : cur) {
            for (const CMat &k : ch.kraus) {
                CVec w = b;
                apply_local(k, {wires[i]}, w, nreg);
                if (w.squaredNorm() > 1e-300) next.push_back(std::move(w));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Places psi (k message qubits then nref) on an nreg register whose message occupies the first k qubits of
// an n-qubit code register, with the reference after it.
CVec embed_message(const CVec &psi, size_t k, size_t n, size_t nref) {
    CVec v = CVec::Zero(uint64_t{1} << (n + nref));
    uint64_t refmask = (uint64_t{1} << nref) - 1;
    for (int64_t i = 0; i < psi.size(); i++) {
        uint64_t u = static_cast<uint64_t>(i);
        v[((u >> nref) << (n - k + nref)) | (u & refmask)] = psi[i];
    }
    return v;
}

void composed_encode(const ComposedCode &code, CVec &v, size_t nreg, size_t offset) {
    apply_pmd_encode(code.pmd, v, nreg, offset);
    apply_circuit(code.outer.encoder(), v, nreg, offset);
}

// Inner decode of one composed block at `offset`: Enc_Q^dag, Enc_PMD^dag, then zero every basis entry whose
// ancilla or key qubits are not all zero. The message stays at [offset, offset + k).
void composed_project(const ComposedCode &code, CVec &v, size_t nreg, size_t offset) {
    apply_circuit(code.outer.encoder().inverse(), v, nreg, offset);
    apply_pmd_decode(code.pmd, v, nreg, offset);
    uint64_t mask = 0;
    for (size_t q = code.k(); q < code.n(); q++) mask |= uint64_t{1} << (nreg - 1 - (offset + q));
    for (int64_t i = 0; i < v.size(); i++) {
        if (static_cast<uint64_t>(i) & mask) v[i] = 0;
    }
}

CVec psi_encoded(const Auth13Setup &setup, const CVec &psi, size_t nref) {
    size_t n = setup.nq(), k = setup.code.k();
    CVec v = embed_message(psi, k, n, nref);
    composed_encode(setup.code, v, n + nref, 0);
    return v;
}

struct AcceptStats {
    double acc = 0;
    double correct = 0;
};

AcceptStats score(const CVec &out, const CVec &psi) {
    cplx ov = psi.dot(out);
    return {out.squaredNorm(), std::norm(ov)};
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int64_t i = 0; i < a.rows(); i++) {
        for (int64_t j = 0; j < a.cols(); j++) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

// Acceptance and wrong acceptance of the product state (x)_i rho_i on the quantum register with the
// reference in psi_R.
AcceptStats product_branch(const ComposedCode &code, const std::vector<CMat> &rhos, const CVec &psi, size_t nref) {
    CMat prod = CMat::Identity(1, 1);
    for (const CMat &r : rhos) prod = kron(prod, r);
    const CMat &v = code.encoder.m;
    CMat sigma = v.adjoint() * prod * v;
    CMat rho_r = trace_out_front(psi * psi.adjoint(), code.k(), code.k() + nref);
    CMat full = kron(sigma, rho_r);
    return {sigma.trace().real(), (psi.adjoint() * full * psi)(0, 0).real()};
}

CMat channel_on_maximally_mixed(const QuantumChannel &ch) { return apply_map(ch, CMat::Identity(2, 2) / 2.0); }

}  // namespace

Auth13Setup make_auth13(const ComposedCode &code, const NmCode &nm) {
    if (nm.k != 2 * code.n()) throw std::invalid_argument("make_auth13: NM message length must be 2 * N_Q");
    if (code.n() > 8) throw std::length_error("make_auth13: N_Q limited to 8");
    nm.validate();
    return Auth13Setup{code, nm};
}

CVec auth13_decode_branch(const Auth13Setup &setup, const PauliOperator &pad, CVec v, size_t nref) {
    size_t n = setup.nq(), k = setup.code.k(), nreg = n + nref;
    apply_pauli(pad, v, nreg, 0);
    composed_project(setup.code, v, nreg, 0);
    CVec out(uint64_t{1} << (k + nref));
    uint64_t refmask = (uint64_t{1} << nref) - 1;
    for (uint64_t i = 0; i < static_cast<uint64_t>(out.size()); i++) {
        out[i] = v[((i >> nref) << (n - k + nref)) | (i & refmask)];
    }
    return out;
}

CMat auth13_encoded_average(const Auth13Setup &setup, const CVec &psi) {
    size_t n = setup.nq(), k = setup.code.k();
    size_t nref = log2_exact(psi.size(), "auth13_encoded_average") - k;
    if (2 * n > 12 || n + nref > 8) throw std::length_error("auth13_encoded_average: limited to 6 + 2 qubits");
    CVec enc = psi_encoded(setup, psi, nref);
    CMat acc = CMat::Zero(enc.size(), enc.size());
    for (uint64_t s = 0; s < (uint64_t{1} << (2 * n)); s++) {
        CVec w = enc;
        apply_pauli(pad_pauli(s, n), w, n + nref, 0);
        acc += w * w.adjoint();
    }
    return acc / static_cast<double>(uint64_t{1} << (2 * n));
}

double product_state_overlap(const ComposedCode &code, const std::vector<CMat> &marginals) {
    if (marginals.size() != code.n()) throw std::invalid_argument("product_state_overlap: one marginal per qubit");
    CMat prod = CMat::Identity(1, 1);
    for (const CMat &r : marginals) prod = kron(prod, r);
    const CMat &v = code.encoder.m;
    return (v.adjoint() * prod * v).trace().real();
}

std::vector<CMat> qubit_marginals(const CVec &v, size_t n) {
    std::vector<CMat> out;
    for (size_t q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << (n - 1 - q);
        CMat r = CMat::Zero(2, 2);
        for (uint64_t i = 0; i < static_cast<uint64_t>(v.size()); i++) {
            if (i & bit) continue;
            cplx a = v[i], b = v[i | bit];
            r(0, 0) += a * std::conj(a);
            r(0, 1) += a * std::conj(b);
            r(1, 0) += b * std::conj(a);
            r(1, 1) += b * std::conj(b);
        }
        out.push_back(r);
    }
    return out;
}

Auth13Report auth13_attack_harness(const Auth13Setup &setup, const WireAttack &attack, const CVec &psi,
                                   Auth13Mode mode) {
    size_t n = setup.nq(), k = setup.code.k();
    size_t nref = log2_exact(psi.size(), "auth13_attack_harness") - k;
    size_t nreg = n + nref;
    if (attack.quantum.size() != n) throw std::invalid_argument("auth13_attack_harness: one channel per quantum wire");
    if (attack.classical.size() != setup.nm.n) throw std::invalid_argument("auth13_attack_harness: tampering length");
    check_qubits(nreg, "auth13_attack_harness");
    uint64_t nkeys = uint64_t{1} << (2 * n);
    std::vector<size_t> wires(n);
    for (size_t i = 0; i < n; i++) wires[i] = i;

    Auth13Report rep;
    NmDecomposition dec = nm_decompose(setup.nm, attack.classical);
    rep.nm_distance = dec.distance;
    rep.q_same = dec.same();
    rep.q_reject = dec.reject();
    rep.q_other = dec.other();

    CVec enc = psi_encoded(setup, psi, nref);
    std::vector<std::pair<uint64_t, double>> others;
    for (uint64_t o = 0; o < nkeys; o++) {
        if (dec.q[o] > 0) others.push_back({o, dec.q[o]});
    }

    if (mode == Auth13Mode::kExhaustive) {
        if (2 * n > 8) throw std::length_error("auth13_attack_harness: exhaustive mode limited to 8 key bits");
        std::map<uint64_t, AcceptStats> unc;  // s~ -> average over s
        for (uint64_t s = 0; s < nkeys; s++) {
            PauliOperator ps = pad_pauli(s, n);
            CVec w = enc;
            apply_pauli(ps, w, nreg, 0);
            auto branches = apply_wires(attack.quantum, wires, w, nreg);
            auto eval = [&](uint64_t guess) {
                AcceptStats st;
                PauliOperator pg = pad_pauli(guess, n);
                for (const CVec &b : branches) {
                    AcceptStats one = score(auth13_decode_branch(setup, pg, b, nref), psi);
                    st.acc += one.acc;
                    st.correct += one.correct;
                }
                return st;
            };
            std::vector<double> d = nm_tamper_distribution(setup.nm, attack.classical, s);
            double ws = 1.0 / static_cast<double>(nkeys);
            for (uint64_t g = 0; g < nkeys; g++) {
                if (d[g] == 0) continue;
                AcceptStats st = eval(g);
                rep.p_accept += ws * d[g] * st.acc;
                rep.p_accept_wrong += ws * d[g] * (st.acc - st.correct);
            }
            AcceptStats rec = eval(s);
            rep.recovered_accept += ws * rec.acc;
            rep.recovered_accept_wrong += ws * (rec.acc - rec.correct);
            for (const auto &[o, q] : others) {
                AcceptStats st = eval(o);
                unc[o].acc += ws * st.acc;
                unc[o].correct += ws * st.correct;
            }
        }
        for (const auto &[o, q] : others) rep.uncorrelated_accept += q * unc[o].acc;
        rep.p_reject = 1.0 - rep.p_accept;
        rep.exact = true;
    } else {
        // Key recovered: the pad average turns the attack into the Pauli channel sum_E p_E E . E.
        auto probs = twirl_channels(attack.quantum);
        const CMat &v = setup.code.encoder.m;
        uint64_t dk = uint64_t{1} << k, dr = uint64_t{1} << nref;
        CMat psim(dk, dr);
        for (uint64_t i = 0; i < dk * dr; i++) psim(i / dr, i % dr) = psi[i];
        std::vector<int> sym(n, 0);
        std::function<void(size_t, double)> rec = [&](size_t q, double p) {
            if (p == 0) return;
            if (q == n) {
                BitVec x(n), z(n);
                for (size_t i = 0; i < n; i++) {
                    x.set(i, sym[i] == 1 || sym[i] == 2);
                    z.set(i, sym[i] == 2 || sym[i] == 3);
                }
                PauliOperator e = PauliOperator::hermitian(x, z);
                CMat ev = v;
                for (int64_t c = 0; c < ev.cols(); c++) {
                    CVec col = ev.col(c);
                    apply_pauli(e, col, n, 0);
                    ev.col(c) = col;
                }
                CMat out = (v.adjoint() * ev) * psim;
                double acc = out.squaredNorm();
                double correct = std::norm((psim.adjoint() * out).trace());
                rep.recovered_accept += p * acc;
                rep.recovered_accept_wrong += p * (acc - correct);
                return;
            }
            for (int s = 0; s < 4; s++) {
                sym[q] = s;
                rec(q + 1, p * probs[q][s]);
            }
        };
        rec(0, 1.0);

        // Key uncorrelated: the encryption identity leaves (x)_i Lambda_i(I/2), conjugated by the guessed pad.
        std::vector<CMat> mixed;
        for (const auto &ch : attack.quantum) mixed.push_back(channel_on_maximally_mixed(ch));
        double unc_acc = 0, unc_wrong = 0;
        for (const auto &[o, q] : others) {
            PauliOperator pg = pad_pauli(o, n);
            std::vector<CMat> rhos;
            for (size_t i = 0; i < n; i++) {
                int s = pg.x.get(i) ? (pg.z.get(i) ? 2 : 1) : (pg.z.get(i) ? 3 : 0);
                rhos.push_back(pauli2(s) * mixed[i] * pauli2(s));
            }
            AcceptStats st = product_branch(setup.code, rhos, psi, nref);
            unc_acc += q * st.acc;
            unc_wrong += q * (st.acc - st.correct);
        }
        rep.uncorrelated_accept = unc_acc;
        rep.p_accept = rep.q_same * rep.recovered_accept + unc_acc;
        rep.p_accept_wrong = rep.q_same * rep.recovered_accept_wrong + unc_wrong;
        rep.p_reject = 1.0 - rep.p_accept;
        rep.exact = dec.distance <= 1e-12;
    }
    rep.fidelity_given_accept = rep.p_accept > 0 ? (rep.p_accept - rep.p_accept_wrong) / rep.p_accept : 0.0;
    rep.bound = rep.nm_distance + rep.q_same * rep.recovered_accept_wrong + rep.uncorrelated_accept;
    return rep;
}

// ---------------------------------------------------------------------------------------------
// Rate-1 construction.

Auth1Setup make_auth1(const StabilizerCode &outer, const ComposedCode &inner, size_t t, int w, const NmCode &nm) {
    size_t kp = inner.k();
    if (kp == 0 || outer.n() % kp) throw std::invalid_argument("make_auth1: inner message must divide the outer length");
    Auth1Setup s{outer, inner, outer.n() / kp, t, w, nm};
    if (s.nq() > 10) throw std::length_error("make_auth1: quantum register limited to 10 qubits");
    if (nm.k != twise_seed_length(t, w)) throw std::invalid_argument("make_auth1: NM message must be the pad seed");
    if ((2 * s.nq() + w - 1) / w > (size_t{1} << w)) throw std::invalid_argument("make_auth1: pad needs too many points");
    nm.validate();
    return s;
}

namespace {

PauliOperator auth1_pad(const Auth1Setup &setup, const BitVec &seed) {
    return pad_pauli(twise_pad(seed, setup.t, 2 * setup.nq(), setup.w), setup.nq());
}

// Qubit of the full register holding outer-code qubit j.
size_t outer_position(const Auth1Setup &setup, size_t j) {
    size_t kp = setup.inner.k();
    return (j / kp) * setup.inner.n() + j % kp;
}

}  // namespace

CVec auth1_encode(const Auth1Setup &setup, const CVec &psi, const BitVec &seed) {
    size_t k = setup.k(), no = setup.outer.n(), nq = setup.nq();
    size_t nref = log2_exact(psi.size(), "auth1_encode") - k;
    CVec outer = embed_message(psi, k, no, nref);
    apply_circuit(setup.outer.encoder(), outer, no + nref, 0);
    size_t nreg = nq + nref;
    CVec v = CVec::Zero(uint64_t{1} << nreg);
    uint64_t refmask = (uint64_t{1} << nref) - 1;
    for (uint64_t i = 0; i < static_cast<uint64_t>(outer.size()); i++) {
        if (outer[i] == cplx(0)) continue;
        uint64_t idx = i & refmask;
        for (size_t j = 0; j < no; j++) {
            if ((i >> (nref + no - 1 - j)) & 1) idx |= uint64_t{1} << (nreg - 1 - outer_position(setup, j));
        }
        v[idx] = outer[i];
    }
    for (size_t b = 0; b < setup.blocks; b++) composed_encode(setup.inner, v, nreg, b * setup.inner.n());
    apply_pauli(auth1_pad(setup, seed), v, nreg, 0);
    return v;
}

Auth1Decoded auth1_decode(const Auth1Setup &setup, CVec v, const BitVec &seed, size_t nref) {
    size_t nq = setup.nq(), no = setup.outer.n(), k = setup.k(), nreg = nq + nref;
    Auth1Decoded res;
    apply_pauli(auth1_pad(setup, seed), v, nreg, 0);
    double norm0 = v.squaredNorm();
    for (size_t b = 0; b < setup.blocks; b++) {
        CVec alone = v;
        composed_project(setup.inner, alone, nreg, b * setup.inner.n());
        res.block_accept.push_back(norm0 > 0 ? alone.squaredNorm() / norm0 : 0.0);
    }
    for (size_t b = 0; b < setup.blocks; b++) {
        composed_project(setup.inner, v, nreg, b * setup.inner.n());
        if (v.squaredNorm() == 0) {
            res.inner_accept_possible = false;
            break;
        }
    }
    res.accepted = CVec::Zero(uint64_t{1} << (k + nref));
    if (!res.inner_accept_possible) return res;
    // Gather the outer-code register; every other qubit is now |0>.
    CVec outer = CVec::Zero(uint64_t{1} << (no + nref));
    uint64_t refmask = (uint64_t{1} << nref) - 1;
    for (uint64_t i = 0; i < static_cast<uint64_t>(outer.size()); i++) {
        uint64_t idx = i & refmask;
        for (size_t j = 0; j < no; j++) {
            if ((i >> (nref + no - 1 - j)) & 1) idx |= uint64_t{1} << (nreg - 1 - outer_position(setup, j));
        }
        outer[i] = v[idx];
    }
    apply_circuit(setup.outer.encoder().inverse(), outer, no + nref, 0);
    for (uint64_t i = 0; i < static_cast<uint64_t>(res.accepted.size()); i++) {
        res.accepted[i] = outer[((i >> nref) << (no - k + nref)) | (i & refmask)];
    }
    return res;
}

Auth1Report auth1_attack_harness(const Auth1Setup &setup, const WireAttack &attack, const CVec &psi) {
    size_t nq = setup.nq(), k = setup.k();
    size_t nref = log2_exact(psi.size(), "auth1_attack_harness") - k, nreg = nq + nref;
    if (attack.quantum.size() != nq) throw std::invalid_argument("auth1_attack_harness: one channel per quantum wire");
    if (attack.classical.size() != setup.nm.n) throw std::invalid_argument("auth1_attack_harness: tampering length");
    size_t sl = setup.nm.k;
    if (sl > 10) throw std::length_error("auth1_attack_harness: seed limited to 10 bits");
    std::vector<size_t> wires(nq);
    for (size_t i = 0; i < nq; i++) wires[i] = i;
    uint64_t nseeds = uint64_t{1} << sl;
    Auth1Report rep;
    rep.block_accept.assign(setup.blocks, 0.0);
    double ws = 1.0 / static_cast<double>(nseeds);
    for (uint64_t s = 0; s < nseeds; s++) {
        BitVec seed = BitVec::from_u64(s, sl);
        auto branches = apply_wires(attack.quantum, wires, auth1_encode(setup, psi, seed), nreg);
        std::vector<double> d = nm_tamper_distribution(setup.nm, attack.classical, s);
        for (uint64_t g = 0; g < nseeds; g++) {
            if (d[g] == 0) continue;
            BitVec guess = BitVec::from_u64(g, sl);
            for (const CVec &b : branches) {
                Auth1Decoded out = auth1_decode(setup, b, guess, nref);
                AcceptStats st = score(out.accepted, psi);
                rep.p_accept += ws * d[g] * st.acc;
                rep.p_accept_wrong += ws * d[g] * (st.acc - st.correct);
            }
        }
        for (const CVec &b : branches) {
            Auth1Decoded out = auth1_decode(setup, b, seed, nref);
            double w = b.squaredNorm();
            for (size_t j = 0; j < setup.blocks; j++) rep.block_accept[j] += ws * w * out.block_accept[j];
        }
    }
    rep.fidelity_given_accept = rep.p_accept > 0 ? (rep.p_accept - rep.p_accept_wrong) / rep.p_accept : 0.0;
    return rep;
}

}  // namespace pmdkit
