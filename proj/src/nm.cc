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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lp.h"
#include "pmdkit/auth.h"

namespace pmdkit {

uint64_t TamperFunction::apply(uint64_t word) const {
    uint64_t out = 0;
    for (size_t i = 0; i < tags.size(); i++) {
        uint64_t b = (word >> i) & 1;
        switch (tags[i]) {
            case Tamper::kSet0: b = 0; break;
            case Tamper::kSet1: b = 1; break;
            case Tamper::kKeep: break;
            case Tamper::kFlip: b ^= 1; break;
        }
        out |= b << i;
    }
    return out;
}

bool TamperFunction::is_keep_all() const {
    return std::all_of(tags.begin(), tags.end(), [](Tamper t) { return t == Tamper::kKeep; });
}

TamperFunction TamperFunction::keep_all(size_t n) { return TamperFunction{std::vector<Tamper>(n, Tamper::kKeep)}; }

TamperFunction TamperFunction::constant(uint64_t word, size_t n) {
    TamperFunction f;
    for (size_t i = 0; i < n; i++) f.tags.push_back((word >> i) & 1 ? Tamper::kSet1 : Tamper::kSet0);
    return f;
}

TamperFunction TamperFunction::from_index(uint64_t index, size_t n) {
    TamperFunction f;
    for (size_t i = 0; i < n; i++) f.tags.push_back(static_cast<Tamper>((index >> (2 * i)) & 3));
    return f;
}

std::string TamperFunction::str() const {
    std::string s;
    for (Tamper t : tags) s.push_back("01kf"[static_cast<int>(t)]);
    return s;
}

TamperFunction TamperFunction::parse(const std::string &text) {
    TamperFunction f;
    for (char c : text) {
        switch (c) {
            case '0': f.tags.push_back(Tamper::kSet0); break;
            case '1': f.tags.push_back(Tamper::kSet1); break;
            case 'k': f.tags.push_back(Tamper::kKeep); break;
            case 'f': f.tags.push_back(Tamper::kFlip); break;
            default: throw std::invalid_argument(std::string("TamperFunction::parse: bad tag '") + c + "'");
        }
    }
    return f;
}

namespace {

std::string bits_str(uint64_t v, size_t n) {
    if (n == 0) return "-";
    std::string s;
    for (size_t i = 0; i < n; i++) s.push_back((v >> i) & 1 ? '1' : '0');
    return s;
}

uint64_t parse_bits(const std::string &s, size_t n, const char *what) {
    if (n == 0 && s == "-") return 0;
    if (s.size() != n) throw std::invalid_argument(std::string("NmCode::parse: wrong length for ") + what);
    uint64_t v = 0;
    for (size_t i = 0; i < n; i++) {
        if (s[i] == '1') v |= uint64_t{1} << i;
        else if (s[i] != '0') throw std::invalid_argument(std::string("NmCode::parse: bad bit in ") + what);
    }
    return v;
}

constexpr size_t kMaxNmBits = 24;

}  // namespace

void NmCode::validate() const {
    if (k == 0 || n > kMaxNmBits || k + r > n) throw std::invalid_argument("NmCode: need 1 <= k, k + r <= n <= 24");
    if (enc.size() != (uint64_t{1} << (k + r))) throw std::invalid_argument("NmCode: encode table size mismatch");
    if (dec.size() != (uint64_t{1} << n)) throw std::invalid_argument("NmCode: decode table size mismatch");
    for (uint64_t s = 0; s < (uint64_t{1} << k); s++) {
        for (uint64_t rho = 0; rho < (uint64_t{1} << r); rho++) {
            uint64_t w = encode(s, rho);
            if (w >> n) throw std::invalid_argument("NmCode: codeword out of range");
            if (decode(w) != static_cast<int64_t>(s)) {
                throw std::invalid_argument("NmCode: Dec(Enc(" + bits_str(s, k) + ", " + bits_str(rho, r) +
                                            ")) != message");
            }
        }
    }
    for (int64_t d : dec) {
        if (d != kNmReject && (d < 0 || static_cast<uint64_t>(d) >> k)) {
            throw std::invalid_argument("NmCode: decode entry out of range");
        }
    }
}

std::string NmCode::str() const {
    std::ostringstream out;
    out << "nm k=" << k << " r=" << r << " n=" << n << "\n";
    for (uint64_t s = 0; s < (uint64_t{1} << k); s++) {
        for (uint64_t rho = 0; rho < (uint64_t{1} << r); rho++) {
            out << "enc " << bits_str(s, k) << " " << bits_str(rho, r) << " " << bits_str(encode(s, rho), n) << "\n";
        }
    }
    for (uint64_t w = 0; w < dec.size(); w++) {
        if (dec[w] != kNmReject) out << "dec " << bits_str(w, n) << " " << bits_str(dec[w], k) << "\n";
    }
    return out.str();
}

NmCode NmCode::parse(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    NmCode c;
    if (!std::getline(in, line)) throw std::invalid_argument("NmCode::parse: empty input");
    {
        std::istringstream h(line);
        std::string tag, kk, rr, nn;
        h >> tag >> kk >> rr >> nn;
        if (tag != "nm" || kk.rfind("k=", 0) != 0 || rr.rfind("r=", 0) != 0 || nn.rfind("n=", 0) != 0) {
            throw std::invalid_argument("NmCode::parse: bad header '" + line + "'");
        }
        try {
            c.k = std::stoul(kk.substr(2));
            c.r = std::stoul(rr.substr(2));
            c.n = std::stoul(nn.substr(2));
        } catch (const std::exception &) {
            throw std::invalid_argument("NmCode::parse: bad header '" + line + "'");
        }
    }
    if (c.k == 0 || c.n > kMaxNmBits || c.k + c.r > c.n) throw std::invalid_argument("NmCode::parse: bad sizes");
    c.enc.assign(uint64_t{1} << (c.k + c.r), 0);
    std::vector<bool> seen(c.enc.size(), false);
    c.dec.assign(uint64_t{1} << c.n, kNmReject);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag, a, b, d;
        ls >> tag;
        if (tag == "enc") {
            ls >> a >> b >> d;
            uint64_t s = parse_bits(a, c.k, "message"), rho = parse_bits(b, c.r, "randomness");
            uint64_t idx = (s << c.r) | rho;
            c.enc[idx] = parse_bits(d, c.n, "codeword");
            seen[idx] = true;
        } else if (tag == "dec") {
            ls >> a >> b;
            c.dec[parse_bits(a, c.n, "codeword")] = static_cast<int64_t>(parse_bits(b, c.k, "message"));
        } else {
            throw std::invalid_argument("NmCode::parse: unknown line '" + line + "'");
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool v) { return v; })) {
        throw std::invalid_argument("NmCode::parse: missing encode entries");
    }
    c.validate();
    return c;
}

NmCode random_nm_code(size_t k, size_t r, size_t n, Rng &rng) {
    if (k == 0 || n > kMaxNmBits || k + r > n) throw std::invalid_argument("random_nm_code: need 1 <= k, k + r <= n <= 24");
    NmCode c;
    c.k = k;
    c.r = r;
    c.n = n;
    std::vector<uint64_t> words(uint64_t{1} << n);
    std::iota(words.begin(), words.end(), 0);
    uint64_t m = uint64_t{1} << (k + r);
    for (uint64_t i = 0; i < m; i++) std::swap(words[i], words[i + rng.uniform(words.size() - i)]);
    c.enc.assign(words.begin(), words.begin() + m);
    c.dec.assign(words.size(), NmCode::kNmReject);
    for (uint64_t i = 0; i < m; i++) c.dec[c.enc[i]] = static_cast<int64_t>(i >> r);
    return c;
}

std::vector<double> nm_tamper_distribution(const NmCode &code, const TamperFunction &f, uint64_t s) {
    if (f.size() != code.n) throw std::invalid_argument("nm_tamper_distribution: tampering length mismatch");
    uint64_t nk = uint64_t{1} << code.k, nr = uint64_t{1} << code.r;
    std::vector<double> d(nk + 1, 0.0);
    double w = 1.0 / static_cast<double>(nr);
    for (uint64_t rho = 0; rho < nr; rho++) {
        int64_t out = code.decode(f.apply(code.encode(s, rho)));
        d[out == NmCode::kNmReject ? nk : static_cast<uint64_t>(out)] += w;
    }
    return d;
}

namespace {

using Dist = std::vector<std::vector<double>>;  // [s][outcome]

double decomposition_distance(const Dist &d, const std::vector<double> &q) {
    size_t nk = d.size();
    double worst = 0;
    for (size_t s = 0; s < nk; s++) {
        double tv = 0;
        for (size_t o = 0; o <= nk; o++) {
            double p = q[o] + (o == s ? q[nk + 1] : 0.0);
            tv += std::max(0.0, d[s][o] - p);
        }
        worst = std::max(worst, tv);
    }
    return worst;
}

// min_q max_s sum_o (D_s(o) - p_s(o))_+, which equals the total-variation distance since both sum to 1.
NmDecomposition lp_decompose(const Dist &d) {
    size_t nk = d.size(), no = nk + 1;
    size_t nq = nk + 2, t = nq, e0 = nq + 1;
    detail::LinearProgram lp;
    lp.num_vars = e0 + nk * no;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.objective[t] = 1;
    detail::LinearProgram::Row sum;
    for (size_t j = 0; j < nq; j++) sum.terms.push_back({j, 1.0});
    sum.sense = detail::LinearProgram::Sense::kEq;
    sum.rhs = 1;
    lp.rows.push_back(sum);
    for (size_t s = 0; s < nk; s++) {
        detail::LinearProgram::Row cap;
        for (size_t o = 0; o < no; o++) {
            detail::LinearProgram::Row row;
            row.terms.push_back({o, 1.0});
            if (o == s) row.terms.push_back({nk + 1, 1.0});
            row.terms.push_back({e0 + s * no + o, 1.0});
            row.sense = detail::LinearProgram::Sense::kGe;
            row.rhs = d[s][o];
            lp.rows.push_back(row);
            cap.terms.push_back({e0 + s * no + o, 1.0});
        }
        cap.terms.push_back({t, -1.0});
        cap.sense = detail::LinearProgram::Sense::kLe;
        cap.rhs = 0;
        lp.rows.push_back(cap);
    }
    auto sol = detail::solve_lp(lp);
    if (!sol.feasible) throw std::logic_error("nm_decompose: LP infeasible");
    NmDecomposition out;
    out.q.assign(sol.x.begin(), sol.x.begin() + nq);
    for (double &v : out.q) v = std::max(0.0, v);
    double total = std::accumulate(out.q.begin(), out.q.end(), 0.0);
    for (double &v : out.q) v /= total;
    out.distance = decomposition_distance(d, out.q);
    out.optimal = true;
    return out;
}

}  // namespace

NmDecomposition nm_decompose(const NmCode &code, const TamperFunction &f) {
    uint64_t nk = uint64_t{1} << code.k;
    if (code.k <= 3) {
        Dist d(nk);
        for (uint64_t s = 0; s < nk; s++) d[s] = nm_tamper_distribution(code, f, s);
        return lp_decompose(d);
    }
    // Greedy: every atom gets the largest mass that no message's distribution contradicts.
    if (code.k > 20) throw std::length_error("nm_decompose: k > 20");
    if (f.size() != code.n) throw std::invalid_argument("nm_decompose: tampering length mismatch");
    uint64_t nr = uint64_t{1} << code.r;
    double w = 1.0 / static_cast<double>(nr);
    std::vector<std::vector<std::pair<uint64_t, double>>> sparse(nk);
    std::vector<double> mn(nk + 1, 1.0);
    std::vector<uint64_t> cnt(nk + 1, 0);
    double same = 1.0;
    for (uint64_t s = 0; s < nk; s++) {
        std::map<uint64_t, double> m;
        for (uint64_t rho = 0; rho < nr; rho++) {
            int64_t out = code.decode(f.apply(code.encode(s, rho)));
            m[out == NmCode::kNmReject ? nk : static_cast<uint64_t>(out)] += w;
        }
        sparse[s].assign(m.begin(), m.end());
        same = std::min(same, m.count(s) ? m[s] : 0.0);
        for (const auto &[o, p] : m) {
            if (o == s) continue;
            cnt[o]++;
            mn[o] = std::min(mn[o], p);
        }
    }
    NmDecomposition out;
    out.q.assign(nk + 2, 0.0);
    for (uint64_t o = 0; o < nk; o++) out.q[o] = cnt[o] == nk - 1 ? mn[o] : 0.0;
    out.q[nk] = cnt[nk] == nk ? mn[nk] : 0.0;
    out.q[nk + 1] = same;
    double total = std::accumulate(out.q.begin(), out.q.end(), 0.0);
    if (total > 1.0) {
        for (double &v : out.q) v /= total;
    } else {
        out.q[nk] += 1.0 - total;
    }
    double worst = 0;
    for (uint64_t s = 0; s < nk; s++) {
        double tv = 0;
        for (const auto &[o, p] : sparse[s]) {
            double ps = out.q[o] + (o == s ? out.q[nk + 1] : 0.0);
            tv += std::max(0.0, p - ps);
        }
        worst = std::max(worst, tv);
    }
    out.distance = worst;
    out.optimal = false;
    return out;
}

NmVerifyResult nm_verify(const NmCode &code) {
    if (code.k > 3 || code.n > 8) throw std::length_error("nm_verify: limited to k <= 3, n <= 8");
    code.validate();
    uint64_t nk = uint64_t{1} << code.k, nr = uint64_t{1} << code.r;
    uint64_t total = uint64_t{1} << (2 * code.n);
    std::map<std::vector<uint32_t>, double> cache;
    NmVerifyResult res;
    res.epsilon = -1;
    for (uint64_t idx = 0; idx < total; idx++) {
        TamperFunction f = TamperFunction::from_index(idx, code.n);
        std::vector<uint32_t> key(nk * (nk + 1), 0);
        for (uint64_t s = 0; s < nk; s++) {
            for (uint64_t rho = 0; rho < nr; rho++) {
                int64_t out = code.decode(f.apply(code.encode(s, rho)));
                key[s * (nk + 1) + (out == NmCode::kNmReject ? nk : static_cast<uint64_t>(out))]++;
            }
        }
        auto it = cache.find(key);
        if (it == cache.end()) {
            Dist d(nk, std::vector<double>(nk + 1));
            for (uint64_t s = 0; s < nk; s++) {
                for (uint64_t o = 0; o <= nk; o++) d[s][o] = key[s * (nk + 1) + o] / static_cast<double>(nr);
            }
            it = cache.emplace(key, lp_decompose(d).distance).first;
        }
        if (it->second > res.epsilon + 1e-12) {
            res.epsilon = it->second;
            res.worst = f;
        }
    }
    res.distinct_distributions = cache.size();
    return res;
}

NmSearchResult nm_search(size_t k, size_t r, size_t n, size_t trials, Rng &rng) {
    if (trials == 0) throw std::invalid_argument("nm_search: trials must be positive");
    NmSearchResult res;
    for (size_t t = 0; t < trials; t++) {
        NmCode c = random_nm_code(k, r, n, rng);
        double eps = nm_verify(c).epsilon;
        if (t == 0 || eps < res.epsilon - 1e-12) {
            res.code = c;
            res.epsilon = eps;
        }
        res.best_so_far.push_back(res.epsilon);
    }
    return res;
}

}  // namespace pmdkit
