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

#include "pmdkit/aqec.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json_util.h"

namespace pmdkit {

std::string ComposedCode::layout() const {
    size_t l = pmd.lambda, m = k();
    return "message[0," + std::to_string(m) + ") pmd_anc[" + std::to_string(m) + "," + std::to_string(m + l) +
           ") key[" + std::to_string(m + l) + "," + std::to_string(pmd.total) + ") outer_anc[" +
           std::to_string(pmd.total) + "," + std::to_string(n()) + ")";
}

ComposedCode compose(const PmdCode &pmd, const StabilizerCode &outer) {
    if (outer.k() != pmd.total) {
        throw std::invalid_argument("compose: outer code encodes " + std::to_string(outer.k()) + " qubits but the PMD has " +
                                    std::to_string(pmd.total));
    }
    check_qubits(outer.n() + 1, "compose");
    ComposedCode c;
    c.pmd = pmd;
    c.outer = outer;
    size_t n = outer.n(), k = pmd.message;
    c.encoder.m = CMat::Zero(uint64_t{1} << n, uint64_t{1} << k);
    for (uint64_t m = 0; m < (uint64_t{1} << k); m++) {
        CVec v = CVec::Zero(uint64_t{1} << n);
        v[m << (n - k)] = 1;
        apply_composed_encode(c, v);
        c.encoder.m.col(m) = v;
    }
    return c;
}

void apply_composed_encode(const ComposedCode &code, CVec &v) {
    apply_pmd_encode(code.pmd, v, code.n(), 0);
    apply_circuit(code.outer.encoder(), v, code.n());
}

namespace {

// Full-register matrix of a local operator.
CMat embed_full(const CMat &op, const std::vector<size_t> &support, size_t n) {
    uint64_t d = uint64_t{1} << n;
    CMat out = CMat::Identity(d, d);
    for (uint64_t c = 0; c < d; c++) {
        CVec col = out.col(c);
        apply_local(op, support, col, n);
        out.col(c) = col;
    }
    return out;
}

// Re-express a local operator on `from` as a local operator on the superset `to`.
CMat widen(const CMat &op, const std::vector<size_t> &from, const std::vector<size_t> &to) {
    std::vector<size_t> pos;
    for (size_t q : from) pos.push_back(std::find(to.begin(), to.end(), q) - to.begin());
    return embed_full(op, pos, to.size());
}

std::vector<size_t> sorted_union(std::vector<size_t> a, const std::vector<size_t> &b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace

double ErasureAdversary::cptp_defect() const {
    uint64_t d = uint64_t{1} << n;
    CMat acc = CMat::Zero(d, d);
    for (const AdversaryKraus &k : kraus) {
        CMat f = embed_full(k.op, k.support, n);
        acc += f.adjoint() * f;
    }
    return (acc - CMat::Identity(d, d)).norm();
}

size_t ErasureAdversary::max_support() const {
    size_t m = 0;
    for (const AdversaryKraus &k : kraus) m = std::max(m, k.support.size());
    return m;
}

void ErasureAdversary::validate(size_t budget) const {
    if (kraus.empty()) throw std::invalid_argument("adversary has no Kraus operators");
    for (size_t i = 0; i < kraus.size(); i++) {
        const AdversaryKraus &k = kraus[i];
        if (k.support.size() > budget) {
            throw std::invalid_argument("adversary branch " + std::to_string(i) + " erases " +
                                        std::to_string(k.support.size()) + " qubits, budget is " + std::to_string(budget));
        }
        for (size_t q : k.support)
            if (q >= n) throw std::invalid_argument("adversary support qubit out of range");
        int64_t d = int64_t{1} << k.support.size();
        if (k.op.rows() != d || k.op.cols() != d) throw std::invalid_argument("adversary Kraus has the wrong size");
    }
    double def = cptp_defect();
    if (def > 1e-10) throw std::invalid_argument("adversary is not trace preserving (defect " + std::to_string(def) + ")");
}

ErasureAdversary ErasureAdversary::identity(size_t n) {
    ErasureAdversary a;
    a.n = n;
    a.kraus.push_back({{}, CMat::Identity(1, 1)});
    return a;
}

ErasureAdversary ErasureAdversary::non_adaptive(const QuantumChannel &ch) {
    ErasureAdversary a;
    a.n = ch.n;
    std::vector<size_t> sorted = ch.support;
    std::sort(sorted.begin(), sorted.end());
    for (const CMat &k : ch.kraus) a.kraus.push_back({sorted, widen(k, ch.support, sorted)});
    return a;
}

ErasureAdversary ErasureAdversary::measure_then_act(size_t n, size_t q0, const QuantumChannel &on_zero,
                                                    const QuantumChannel &on_one) {
    ErasureAdversary a;
    a.n = n;
    a.adaptive = true;
    for (int o = 0; o < 2; o++) {
        const QuantumChannel &ch = o ? on_one : on_zero;
        std::vector<size_t> s = sorted_union({q0}, ch.support);
        CMat proj = CMat::Zero(2, 2);
        proj(o, o) = 1;
        CMat p = widen(proj, {q0}, s);
        for (const CMat &k : ch.kraus) a.kraus.push_back({s, widen(k, ch.support, s) * p});
    }
    return a;
}

ErasureAdversary ErasureAdversary::random(size_t n, size_t budget, bool adaptive, Rng &rng) {
    if (budget == 0) return identity(n);
    auto pick = [&](size_t count, std::vector<size_t> avoid) {
        std::vector<size_t> out;
        while (out.size() < count) {
            size_t q = rng.uniform(n);
            if (std::find(avoid.begin(), avoid.end(), q) != avoid.end()) continue;
            avoid.push_back(q);
            out.push_back(q);
        }
        return out;
    };
    if (!adaptive) {
        size_t t = 1 + rng.uniform(budget);
        std::vector<size_t> s = pick(t, {});
        return non_adaptive(QuantumChannel::random(n, s, 1 + rng.uniform(3), rng));
    }
    size_t q0 = rng.uniform(n);
    std::vector<QuantumChannel> per;
    for (int o = 0; o < 2; o++) {
        std::vector<size_t> s = budget >= 2 ? pick(1, {q0}) : std::vector<size_t>{q0};
        per.push_back(QuantumChannel::random(n, s, 1 + rng.uniform(2), rng));
    }
    return measure_then_act(n, q0, per[0], per[1]);
}

std::string ErasureAdversary::str() const {
    nlohmann::json j;
    j["adaptive"] = adaptive;
    j["branches"] = nlohmann::json::array();
    for (const AdversaryKraus &k : kraus) {
        nlohmann::json b;
        b["support"] = k.support;
        b["kraus"] = detail::matrix_to_json(k.op);
        j["branches"].push_back(b);
    }
    return j.dump() + "\n";
}

ErasureAdversary ErasureAdversary::parse(const std::string &text, size_t n) {
    nlohmann::json j = detail::parse_json(text, "adversary file");
    if (!j.is_object()) throw std::invalid_argument("adversary file: expected a JSON object");
    if (!j.contains("branches")) return non_adaptive(QuantumChannel::parse(text, n));
    ErasureAdversary a;
    a.n = n;
    a.adaptive = j.value("adaptive", true);
    for (size_t i = 0; i < j["branches"].size(); i++) {
        const auto &b = j["branches"][i];
        std::string what = "adversary file: branch " + std::to_string(i);
        if (!b.contains("support") || !b.contains("kraus")) throw std::invalid_argument(what + ": missing keys");
        AdversaryKraus k;
        try {
            k.support = b["support"].get<std::vector<size_t>>();
        } catch (const nlohmann::json::exception &) {
            throw std::invalid_argument(what + ": bad support");
        }
        k.op = detail::matrix_from_json(b["kraus"], what);
        a.kraus.push_back(std::move(k));
    }
    a.validate(n);
    return a;
}

std::vector<ErasedBranch> apply_adversary(const std::vector<ErasedBranch> &in, const ErasureAdversary &adv,
                                          bool refill) {
    std::vector<ErasedBranch> out;
    for (const ErasedBranch &b : in) {
        for (const AdversaryKraus &k : adv.kraus) {
            CVec v = b.state;
            apply_local(k.op, k.support, v, adv.n);
            std::vector<size_t> erased = sorted_union(b.erased, k.support);
            if (!refill) {
                out.push_back({v, erased});
                continue;
            }
            size_t t = k.support.size();
            double amp = std::ldexp(1.0, -static_cast<int>(t));
            for (uint64_t w = 0; w < (uint64_t{1} << (2 * t)); w++) {
                BitVec x(adv.n), z(adv.n);
                for (size_t j = 0; j < t; j++) {
                    x.set(k.support[j], (w >> (2 * j)) & 1);
                    z.set(k.support[j], (w >> (2 * j + 1)) & 1);
                }
                CVec u = amp * v;
                apply_pauli(PauliOperator::hermitian(x, z), u, adv.n);
                out.push_back({std::move(u), erased});
            }
        }
    }
    return out;
}

uint64_t accepted_flags(size_t i, size_t list_size) { return (uint64_t{1} << (list_size - i)) - 1; }

namespace {

// Pauli on the code register controlled on flag qubit `f` being |0>.
void controlled_pauli(const PauliOperator &p, CVec &v, size_t nreg, size_t f) {
    static const cplx ph[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    uint64_t xm = 0, zm = 0, fm = uint64_t{1} << (nreg - 1 - f);
    for (size_t q = 0; q < p.n; q++) {
        if (p.x.get(q)) xm |= uint64_t{1} << (nreg - 1 - q);
        if (p.z.get(q)) zm |= uint64_t{1} << (nreg - 1 - q);
    }
    CVec out = v;
    for (uint64_t b = 0; b < static_cast<uint64_t>(v.size()); b++) {
        if (b & fm) continue;
        cplx a = v[b] * ph[p.phase & 3];
        if (std::popcount(b & zm) & 1) a = -a;
        out[b ^ xm] = a;
    }
    v.swap(out);
}

// Auth on (PMD register, flag f), optionally controlled on flag c: X on f when c is |1>.
void controlled_auth(const PmdCode &pmd, CVec &v, size_t nreg, size_t f, int64_t c) {
    std::vector<size_t> qubits;
    for (size_t q = 0; q < pmd.total; q++) qubits.push_back(q);
    qubits.push_back(f);
    uint64_t cm = c >= 0 ? uint64_t{1} << (nreg - 1 - static_cast<size_t>(c)) : 0;
    for_each_slice(v, nreg, qubits, [&](CVec &slice, uint64_t rest) {
        if (rest & cm) {
            for (int64_t i = 0; i < slice.size(); i += 2) std::swap(slice[i], slice[i + 1]);
            return;
        }
        if (slice.isZero(0)) return;
        apply_auth(pmd, slice);
    });
}

void list_correct_run(const ComposedCode &code, const CorrectionList &list, CVec &v) {
    size_t n = code.n(), l = list.size(), nreg = n + l;
    Circuit dec = code.outer.encoder().inverse();
    apply_pauli(pauli_inverse(list.entries[0]), v, nreg, 0);
    apply_circuit(dec, v, nreg, 0);
    for (size_t i = 0; i < l; i++) {
        controlled_auth(code.pmd, v, nreg, n + i, i == 0 ? -1 : static_cast<int64_t>(n + i - 1));
        if (i + 1 < l) {
            PauliOperator step = pauli_mul(pauli_inverse(list.entries[i + 1]), list.entries[i]);
            controlled_pauli(conjugate(dec, step), v, nreg, n + i);
        }
    }
}

}  // namespace

CVec list_correct_apply(const ComposedCode &code, const CorrectionList &list, const CVec &phi) {
    if (list.empty()) throw std::invalid_argument("list_correct_apply: empty correction list");
    size_t n = code.n(), l = list.size();
    check_qubits(n + l, "list_correct_apply");
    CVec v = CVec::Zero(uint64_t{1} << (n + l));
    for (int64_t i = 0; i < phi.size(); i++) v[static_cast<uint64_t>(i) << l] = phi[i];
    list_correct_run(code, list, v);
    return v;
}

DenseOperator list_correct_unitary(const ComposedCode &code, const CorrectionList &list) {
    if (list.empty()) throw std::invalid_argument("list_correct_unitary: empty correction list");
    size_t nreg = code.n() + list.size();
    if (nreg > 10) throw std::length_error("list_correct_unitary: dense matrix limited to 10 qubits; use list_correct_apply");
    uint64_t d = uint64_t{1} << nreg;
    DenseOperator u;
    u.m = CMat::Zero(d, d);
    for (uint64_t c = 0; c < d; c++) {
        CVec e = CVec::Zero(d);
        e[c] = 1;
        list_correct_run(code, list, e);
        u.m.col(c) = e;
    }
    return u;
}

std::vector<DecodedBranch> composed_decode(const ComposedCode &code, const ErasedBranch &branch) {
    const StabilizerCode &q = code.outer;
    size_t n = q.n(), r = q.r();
    ErasurePattern erased(n, branch.erased);
    std::vector<DecodedBranch> out;
    for (uint64_t sw = 0; sw < (uint64_t{1} << r); sw++) {
        DecodedBranch d;
        d.syndrome = BitVec::from_u64(sw, r);
        CVec w = branch.state;
        for (size_t i = 0; i < r; i++) {
            CVec g = w;
            apply_pauli(q.gens()[i], g, n);
            w = d.syndrome.get(i) ? CVec((w - g) / 2) : CVec((w + g) / 2);
        }
        d.list = erasure_list_decode(q, erased, d.syndrome);
        if (d.list.empty()) {
            if (w.norm() > 1e-10) {
                throw std::logic_error("composed_decode: outcome " + d.syndrome.str() +
                                       " has nonzero weight but no correction supported on " + erased.str());
            }
            d.state = CVec::Zero(uint64_t{1} << n);
        } else {
            d.state = list_correct_apply(code, d.list, w);
        }
        out.push_back(std::move(d));
    }
    return out;
}

HarnessReport erasure_harness(const ComposedCode &code, const ErasureAdversary &adv, double epsilon) {
    if (adv.n != code.n()) throw std::invalid_argument("erasure_harness: adversary size does not match code");
    size_t n = code.n(), k = code.k();
    HarnessReport rep;
    rep.epsilon = epsilon;
    auto run = [&](const CVec &in) {
        CVec v = CVec::Zero(uint64_t{1} << n);
        for (int64_t m = 0; m < in.size(); m++) v[static_cast<uint64_t>(m) << (n - k)] = in[m];
        apply_composed_encode(code, v);
        std::vector<CVec> outs;
        for (const ErasedBranch &b : apply_adversary({{v, {}}}, adv)) {
            for (DecodedBranch &d : composed_decode(code, b)) {
                rep.list_max = std::max(rep.list_max, d.list.size());
                outs.push_back(std::move(d.state));
            }
        }
        return outs;
    };
    rep.fidelity = entanglement_fidelity(run, k);
    double dk = std::ldexp(1.0, static_cast<int>(k));
    CVec uniform = CVec::Constant(uint64_t{1} << k, 1 / std::sqrt(dk));
    for (const CVec &o : run(uniform)) rep.weight += o.squaredNorm();
    rep.bound = 1 - 3 * std::sqrt(epsilon) * std::pow(static_cast<double>(std::max<size_t>(rep.list_max, 1)), 0.75);
    rep.pass = rep.fidelity >= rep.bound - 1e-12;
    return rep;
}

}  // namespace pmdkit
