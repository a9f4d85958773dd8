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

#include "pmdkit/cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "pmdkit/aqec.h"
#include "pmdkit/auth.h"
#include "pmdkit/pmd.h"
#include "pmdkit/qlde.h"

namespace pmdkit {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void Report::metric(const std::string &name, double value) { metrics.emplace_back(name, fmt_double(value)); }

void Report::check(const std::string &name, bool pass, const std::string &measured, const std::string &bound) {
    checks.push_back({name, pass, measured, bound});
}

bool Report::all_pass() const {
    for (const auto &c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string> &fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); i++) out += (i ? "," : "") + csv_field(fields[i]);
    return out + "\n";
}

}  // namespace

std::string Report::render(ReportFormat format) const {
    std::ostringstream os;
    if (format == ReportFormat::kJson) {
        nlohmann::ordered_json j;
        j["toolkit"] = std::string("pmdkit ") + kToolkitVersion;
        j["command"] = command;
        j["seed"] = seed;
        nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
        for (const auto &[k, v] : config) cfg[k] = v;
        j["config"] = cfg;
        nlohmann::ordered_json m = nlohmann::ordered_json::object();
        for (const auto &[k, v] : metrics) m[k] = v;
        j["metrics"] = m;
        if (!columns.empty()) {
            j["columns"] = columns;
            j["rows"] = rows;
        }
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto &c : checks) {
            cs.push_back({{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}, {"bound", c.bound}});
        }
        j["checks"] = cs;
        j["pass"] = all_pass();
        os << j.dump(2) << "\n";
        return os.str();
    }
    if (format == ReportFormat::kCsv) {
        if (!columns.empty()) {
            os << csv_line(columns);
            for (const auto &r : rows) os << csv_line(r);
            return os.str();
        }
        os << csv_line({"kind", "name", "value", "bound", "pass"});
        os << csv_line({"meta", "toolkit", std::string("pmdkit ") + kToolkitVersion, "", ""});
        os << csv_line({"meta", "command", command, "", ""});
        os << csv_line({"meta", "seed", std::to_string(seed), "", ""});
        for (const auto &[k, v] : config) os << csv_line({"config", k, v, "", ""});
        for (const auto &[k, v] : metrics) os << csv_line({"metric", k, v, "", ""});
        for (const auto &c : checks) os << csv_line({"check", c.name, c.measured, c.bound, c.pass ? "PASS" : "FAIL"});
        return os.str();
    }
    os << "pmdkit " << kToolkitVersion << " " << command << "\n";
    os << "seed " << seed << "\n";
    for (const auto &[k, v] : config) os << "config " << k << " = " << v << "\n";
    for (const auto &[k, v] : metrics) os << k << ": " << v << "\n";
    if (!columns.empty()) {
        std::vector<size_t> width(columns.size());
        for (size_t i = 0; i < columns.size(); i++) width[i] = columns[i].size();
        for (const auto &r : rows) {
            for (size_t i = 0; i < r.size() && i < width.size(); i++) width[i] = std::max(width[i], r[i].size());
        }
        auto line = [&](const std::vector<std::string> &r) {
            for (size_t i = 0; i < r.size(); i++) {
                os << (i ? "  " : "") << r[i];
                if (i + 1 < r.size()) os << std::string(width[i] - r[i].size(), ' ');
            }
            os << "\n";
        };
        line(columns);
        for (const auto &r : rows) line(r);
    }
    for (const auto &c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.measured << " vs " << c.bound << "\n";
    }
    os << (all_pass() ? "result PASS" : "result FAIL") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------------------------
// PTC family files.

std::string ptc_family_str(const PtcFamily &family) {
    std::ostringstream os;
    os << "ptc n=" << family.n << " lambda=" << family.lambda << "\n";
    for (size_t k = 0; k < family.num_keys(); k++) {
        os << "key " << k << "\n";
        for (const auto &g : family.codes[k].gens()) os << g.symbols() << "\n";
    }
    return os.str();
}

PtcFamily parse_ptc_family(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    PtcFamily fam;
    bool header = false;
    long current = -1;
    std::vector<std::vector<std::string>> gens;
    static const std::regex head(R"(^ptc\s+n\s*=\s*(\d+)\s+lambda\s*=\s*(\d+)$)");
    static const std::regex key(R"(^key\s+(\d+)$)");
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
        std::smatch m;
        if (!header) {
            if (!std::regex_match(line, m, head)) fail("expected header 'ptc n=<int> lambda=<int>'");
            fam.n = std::stoul(m[1]);
            fam.lambda = std::stoi(m[2]);
            if (fam.lambda < 1 || fam.lambda > 8 || fam.n == 0 || fam.n > 16) fail("parameters out of range");
            gens.assign(size_t{1} << fam.lambda, {});
            header = true;
            continue;
        }
        if (std::regex_match(line, m, key)) {
            long k = std::stol(m[1]);
            if (k != current + 1) fail("keys must appear in order 0, 1, ...");
            if (static_cast<size_t>(k) >= gens.size()) fail("key out of range");
            current = k;
            continue;
        }
        if (current < 0) fail("generator before the first key line");
        if (line.size() != fam.n) fail("generator length differs from n");
        gens[current].push_back(line);
    }
    if (!header) throw std::invalid_argument("empty PTC family file");
    if (static_cast<size_t>(current + 1) != gens.size()) throw std::invalid_argument("PTC family file is missing keys");
    fam.r = fam.n / static_cast<size_t>(fam.lambda) / 2;
    fam.field = default_field(fam.lambda);
    for (size_t k = 0; k < gens.size(); k++) {
        std::vector<PauliOperator> ps;
        for (const auto &g : gens[k]) ps.push_back(PauliOperator::from_string(g));
        try {
            fam.codes.emplace_back(fam.n, ps);
        } catch (const std::exception &e) {
            throw std::invalid_argument("key " + std::to_string(k) + ": " + e.what());
        }
    }
    return fam;
}

namespace {

// ---------------------------------------------------------------------------------------------
// Shared helpers.

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

StabilizerCode code_from(size_t n, const std::vector<std::string> &gens) {
    std::vector<PauliOperator> ps;
    for (const auto &g : gens) ps.push_back(PauliOperator::from_string(g));
    return StabilizerCode(n, ps);
}

StabilizerCode named_code(const std::string &name) {
    static const std::map<std::string, std::pair<size_t, std::vector<std::string>>> table = {
        {"rep3", {3, {"ZZI", "IZZ"}}},
        {"c21", {2, {"XX"}}},
        {"c43", {4, {"XZZX"}}},
        {"c422", {4, {"XXXX", "ZZZZ"}}},
        {"c513", {5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}}},
        {"c862", {8, {"XXXXXXXX", "ZZZZZZZZ"}}},
        {"steane", {7, {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown code name '" + name + "'");
    return code_from(it->second.first, it->second.second);
}

StabilizerCode load_code(const std::string &file, const std::string &name) {
    if (!file.empty()) return StabilizerCode::parse(read_file(file));
    return named_code(name);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::string frac_str(const Fraction &f) { return f.str() + " = " + fmt_double(f.value()); }

struct Common {
    uint64_t seed = 1;
    std::string format = "text";
    std::string out;
    std::string config;
};

// Expands "--config FILE" into "--key value" pairs for keys not already on the command line.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::string file;
    for (size_t i = 0; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size()) file = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) file = args[i].substr(9);
    }
    if (file.empty()) return args;
    std::istringstream is(read_file(file));
    std::vector<std::string> out = args;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        auto trim = [](std::string t) {
            t.erase(0, t.find_first_not_of(" \t\r"));
            auto last = t.find_last_not_of(" \t\r");
            return last == std::string::npos ? std::string() : t.substr(0, last + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw CLI::ParseError(file + ":" + std::to_string(lineno) + ": expected key = value", 2);
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config") throw CLI::ParseError(file + ":" + std::to_string(lineno) + ": bad key", 2);
        bool given = false;
        for (const auto &a : args) given |= a == "--" + key || a.rfind("--" + key + "=", 0) == 0;
        if (given) continue;
        out.push_back("--" + key);
        out.push_back(value);
    }
    return out;
}

void add_common(CLI::App *app, Common &c) {
    app->add_option("--seed", c.seed, "64-bit seed for every random draw")->capture_default_str();
    app->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app->add_option("--out", c.out, "write the report to this path instead of stdout");
    app->add_option("--config", c.config, "flat key = value file; flags given on the command line win");
}

ReportFormat parse_format(const std::string &f) {
    if (f == "csv") return ReportFormat::kCsv;
    if (f == "json") return ReportFormat::kJson;
    return ReportFormat::kText;
}

// Config echo: every option of the subcommand except --config and --out, in declaration order.
void echo_config(const CLI::App *app, Report &rep) {
    for (const CLI::Option *opt : app->get_options()) {
        if (opt->get_lnames().empty()) continue;
        std::string name = opt->get_lnames().front();
        if (name == "help" || name == "out" || name == "seed") continue;
        auto res = opt->results();
        std::string v;
        if (res.empty()) {
            v = opt->get_default_str();
            if (opt->get_type_size() == 0) v = "false";
        } else if (opt->get_type_size() == 0) {
            v = "true";
        } else {
            for (size_t i = 0; i < res.size(); i++) v += (i ? "," : "") + res[i];
        }
        rep.config.emplace_back(name, v);
    }
}

// ---------------------------------------------------------------------------------------------
// ptc check

struct PtcArgs {
    size_t n = 4;
    int lambda = 2;
    std::string family;
    std::string emit_family;
    uint64_t samples = 0;
};

PtcFamily load_family(const std::string &file, size_t n, int lambda) {
    if (!file.empty()) return parse_ptc_family(read_file(file));
    return build_bcgst_family(n, lambda);
}

void run_ptc_check(const PtcArgs &a, const Common &c, Report &rep) {
    PtcFamily fam = load_family(a.family, a.n, a.lambda);
    if (!a.emit_family.empty()) {
        std::ofstream of(a.emit_family, std::ios::binary);
        if (!of) throw UsageError("cannot write " + a.emit_family);
        of << ptc_family_str(fam);
    }
    double bound = static_cast<double>(fam.n) * std::ldexp(1.0, -fam.lambda);
    rep.metric("n", std::to_string(fam.n));
    rep.metric("lambda", std::to_string(fam.lambda));
    if (a.samples > 0) {
        Rng rng(c.seed);
        PtcSampleResult s = sample_strong_ptc_error(fam, a.samples, rng);
        rep.metric("strong_error_lower_bound", s.max_observed);
        rep.metric("argmax", s.argmax.symbols());
        rep.metric("samples", std::to_string(s.samples));
        rep.metric("missed_mass_upper95", s.missed_mass_upper95);
        rep.check("strong_ptc_error_sampled", s.max_observed <= bound + 1e-12, fmt_double(s.max_observed),
                  "<= n 2^-lambda = " + fmt_double(bound));
    } else {
        PtcErrorResult e = measure_strong_ptc_error(fam);
        rep.metric("strong_error", frac_str(e.epsilon));
        rep.metric("argmax", e.argmax.symbols());
        rep.check("strong_ptc_error", e.epsilon.value() <= bound + 1e-12, frac_str(e.epsilon),
                  "<= n 2^-lambda = " + fmt_double(bound));
    }
    PairwiseResult d = measure_pairwise_detectability(fam);
    rep.metric("pairwise_detectability", frac_str(d.delta));
    rep.metric("worst_shift", std::to_string(d.worst_shift));
    rep.check("pairwise_detectability", d.delta.value() <= 2 * bound + 1e-12, frac_str(d.delta),
              "<= 2 n 2^-lambda = " + fmt_double(2 * bound));
}

// ---------------------------------------------------------------------------------------------
// pmd verify

struct PmdArgs {
    size_t n = 4;
    int lambda = 2;
    std::string family;
    uint64_t samples = 0;
    size_t auth_trials = 20;
};

PauliOperator key_register_pauli(const PmdCode &pmd, uint32_t a, uint32_t b) {
    BitVec x(pmd.total), z(pmd.total);
    for (size_t t = 0; t < pmd.lambda; t++) {
        x.set(pmd.n + t, (a >> t) & 1);
        z.set(pmd.n + t, (b >> t) & 1);
    }
    return PauliOperator::hermitian(x, z);
}

CVec with_flag(const CVec &v) {
    CVec out = CVec::Zero(v.size() * 2);
    for (int64_t i = 0; i < v.size(); i++) out[2 * i] = v[i];
    return out;
}

void run_pmd_verify(const PmdArgs &a, const Common &c, Report &rep) {
    PtcFamily fam = load_family(a.family, a.n, a.lambda);
    PmdCode pmd = build_pmd(fam);
    rep.metric("n", std::to_string(pmd.n));
    rep.metric("lambda", std::to_string(pmd.lambda));
    rep.metric("message_qubits", std::to_string(pmd.message));
    Rng rng(c.seed);
    PmdEpsilonResult eps = a.samples > 0 ? sample_pmd_epsilon(pmd, a.samples, rng) : measure_pmd_epsilon(pmd);
    double ptc = measure_strong_ptc_error(fam).epsilon.value();
    double delta = measure_pairwise_detectability(fam).delta.value();
    double bound = pmd_epsilon_bound(ptc, delta, pmd.lambda);
    rep.metric(a.samples > 0 ? "epsilon_lower_bound" : "epsilon", eps.epsilon);
    rep.metric("argmax", eps.argmax.symbols());
    rep.metric("ptc_error", ptc);
    rep.metric("pairwise_detectability", delta);
    rep.check("pmd_epsilon", eps.epsilon <= bound + 1e-10, fmt_double(eps.epsilon),
              "<= max(eps_ptc, sqrt(2^-lambda + delta)) = max(" + fmt_double(ptc) + ", sqrt(" +
                  fmt_double(std::ldexp(1.0, -static_cast<int>(pmd.lambda))) + " + " + fmt_double(delta) +
                  ")) = " + fmt_double(bound));

    double phase = 0;
    for (uint32_t b = 1; b < fam.num_keys(); b++) phase = std::max(phase, pmd_restricted_norm(pmd, key_register_pauli(pmd, 0, b)));
    rep.check("key_phase_errors", phase <= 1e-10, fmt_double(phase), "<= 1e-10");

    if (a.auth_trials > 0 && pmd.total + 1 <= max_qubits()) {
        double rec = 0, dist = 0;
        for (size_t t = 0; t < a.auth_trials; t++) {
            CVec psi = random_state(pmd.message, rng);
            CVec enc = pmd.encoder.m * psi;
            CVec v = with_flag(enc);
            apply_auth(pmd, v);
            CVec want = CVec::Zero(v.size());
            for (int64_t m = 0; m < psi.size(); m++) want[((uint64_t(m) << (2 * pmd.lambda)) << 1) | 1] = psi[m];
            rec = std::max(rec, (v - want).norm());

            BitVec x(pmd.total), z(pmd.total);
            do {
                for (size_t q = 0; q < pmd.total; q++) {
                    x.set(q, rng.bit());
                    z.set(q, rng.bit());
                }
            } while (x.none() && z.none());
            CVec phi = enc;
            apply_pauli(PauliOperator::hermitian(x, z), phi, pmd.total);
            CVec in = with_flag(phi), out = in;
            apply_auth(pmd, out);
            dist = std::max(dist, (out - in).norm());
        }
        rep.check("auth_exact_recovery", rec <= 1e-9, fmt_double(rec), "<= 1e-9");
        rep.check("auth_disturbance", dist <= std::sqrt(2.0) * eps.epsilon + 1e-10, fmt_double(dist),
                  "<= sqrt(2) eps = " + fmt_double(std::sqrt(2.0) * eps.epsilon));
    }
}

// ---------------------------------------------------------------------------------------------
// qlde

struct QldeCodeArgs {
    std::string code_file;
    std::string code_name = "c422";
};

struct QldeDecodeArgs {
    QldeCodeArgs code;
    std::string erased = "-";
    std::string syndrome;
};

void run_qlde_decode(const QldeDecodeArgs &a, Report &rep) {
    StabilizerCode code = load_code(a.code.code_file, a.code.code_name);
    ErasurePattern e = ErasurePattern::parse(a.erased, code.n());
    BitVec s = a.syndrome.empty() ? BitVec(code.r()) : BitVec::from_string(a.syndrome);
    if (s.size() != code.r()) throw std::invalid_argument("syndrome must have one bit per generator");
    CorrectionList l = erasure_list_decode(code, e, s);
    rep.metric("n", std::to_string(code.n()));
    rep.metric("erased", e.str());
    rep.metric("syndrome", s.str());
    rep.metric("list_size", std::to_string(l.size()));
    rep.columns = {"index", "correction"};
    bool supported = true, matches = true, distinct = true;
    for (size_t i = 0; i < l.size(); i++) {
        const PauliOperator &p = l.entries[i];
        rep.rows.push_back({std::to_string(i), p.symbols()});
        for (size_t q = 0; q < code.n(); q++) supported &= e.contains(q) || p.symbol(q) == 'I';
        matches &= syndrome(code, p) == s;
        for (size_t j = i + 1; j < l.size(); j++) distinct &= !is_logically_equivalent(code, p, l.entries[j]);
    }
    uint64_t quotient = quotient_size(code, e);
    rep.check("supported_on_erasure", supported, supported ? "yes" : "no", "every correction inside the erased set");
    rep.check("syndrome_matches", matches, matches ? "yes" : "no", "every correction has the given syndrome");
    rep.check("logically_distinct", distinct, distinct ? "yes" : "no", "pairwise inequivalent modulo S");
    rep.check("list_size", l.empty() || l.size() == quotient, std::to_string(l.size()),
              "0 or |N_E/S_E| = " + std::to_string(quotient));
}

struct QldeProfileArgs {
    QldeCodeArgs code;
    double delta = 0.25;
    uint64_t max_list = 0;
};

void run_qlde_profile(const QldeProfileArgs &a, Report &rep) {
    StabilizerCode code = load_code(a.code.code_file, a.code.code_name);
    ProfileResult p = list_size_profile(code, a.delta);
    rep.metric("n", std::to_string(code.n()));
    rep.metric("k", std::to_string(code.k()));
    rep.metric("max_erased", std::to_string(p.max_erased));
    rep.metric("list_size", std::to_string(p.list_size));
    rep.metric("worst_erasure", p.worst.str());
    if (a.max_list > 0) {
        rep.check("list_size", p.list_size <= a.max_list, std::to_string(p.list_size), "<= " + std::to_string(a.max_list));
    }
}

struct QldeCssArgs {
    size_t n = 10;
    size_t k = 2;
    uint64_t draws = 1000;
};

void run_qlde_sample_css(const QldeCssArgs &a, const Common &c, Report &rep) {
    Rng rng(c.seed);
    RandomCss rc = sample_random_css(a.n, a.k, rng);
    std::string gens;
    for (const auto &g : rc.code.gens()) gens += (gens.empty() ? "" : " ") + g.symbols();
    rep.metric("generators", gens);
    rep.metric("attempts", std::to_string(rc.attempts));
    uint64_t fails = 0;
    Rng raw(c.seed ^ 0x9e3779b97f4a7c15ULL);
    for (uint64_t i = 0; i < a.draws; i++) fails += random_css_raw_logicals(a.n, a.k, raw) != a.k;
    rep.metric("raw_rate_failures", std::to_string(fails) + "/" + std::to_string(a.draws));
    rep.columns = {"erased", "quantum_list", "classical_h1", "classical_h2"};
    bool ok = true;
    std::string worst;
    for (size_t t = 0; t <= a.n / 2; t++) {
        double d = static_cast<double>(t) / static_cast<double>(a.n);
        uint64_t lq = list_size_profile(rc.code, d).list_size;
        uint64_t l1 = classical_list_profile(rc.h1, a.n, d).list_size;
        uint64_t l2 = classical_list_profile(rc.h2, a.n, d).list_size;
        uint64_t lc = std::max(l1, l2);
        rep.rows.push_back({std::to_string(t), std::to_string(lq), std::to_string(l1), std::to_string(l2)});
        if (lq > lc * lc) {
            ok = false;
            worst = "t=" + std::to_string(t);
        }
    }
    rep.check("css_lifting", ok, ok ? "all rows" : worst, "quantum list <= max(classical lists)^2");
}

// ---------------------------------------------------------------------------------------------
// aqec simulate

struct AqecArgs {
    size_t n = 4;
    int lambda = 2;
    std::string outer_file;
    std::string outer_name = "c862";
    size_t budget = 2;
    size_t adversaries = 100;
    std::string adaptive = "alternate";
    std::string adversary_file;
};

void run_aqec_simulate(const AqecArgs &a, const Common &c, Report &rep) {
    ComposedCode code = compose(build_pmd(build_bcgst_family(a.n, a.lambda)), load_code(a.outer_file, a.outer_name));
    double eps = measure_pmd_epsilon(code.pmd).epsilon;
    rep.metric("layout", code.layout());
    rep.metric("pmd_epsilon", eps);
    std::vector<ErasureAdversary> advs;
    std::vector<std::string> labels;
    if (!a.adversary_file.empty()) {
        advs.push_back(ErasureAdversary::parse(read_file(a.adversary_file), code.n()));
        advs.back().validate(a.budget);
        labels.push_back("file");
    } else {
        for (size_t i = 0; i < a.adversaries; i++) {
            uint64_t s = c.seed + i;
            bool adaptive = a.adaptive == "yes" || (a.adaptive == "alternate" && i % 2 == 1);
            Rng rng(s);
            advs.push_back(ErasureAdversary::random(code.n(), a.budget, adaptive, rng));
            labels.push_back(std::to_string(s));
        }
    }
    std::vector<HarnessReport> res(advs.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < static_cast<int64_t>(advs.size()); i++) res[i] = erasure_harness(code, advs[i], eps);
    rep.columns = {"adversary", "adaptive", "fidelity", "list_size", "bound", "pass"};
    double worst_margin = 1e300, min_fid = 1;
    size_t fails = 0, max_l = 0;
    for (size_t i = 0; i < advs.size(); i++) {
        const auto &r = res[i];
        rep.rows.push_back({labels[i], advs[i].adaptive ? "yes" : "no", fmt_double(r.fidelity), std::to_string(r.list_max),
                            fmt_double(r.bound), r.pass ? "PASS" : "FAIL"});
        worst_margin = std::min(worst_margin, r.fidelity - r.bound);
        min_fid = std::min(min_fid, r.fidelity);
        max_l = std::max(max_l, r.list_max);
        fails += !r.pass;
    }
    rep.metric("min_fidelity", min_fid);
    rep.metric("max_list_size", std::to_string(max_l));
    rep.check("entanglement_fidelity", fails == 0, std::to_string(advs.size() - fails) + "/" + std::to_string(advs.size()) +
                                                        " adversaries, min fidelity " + fmt_double(min_fid),
              ">= 1 - 3 eps^(1/2) L^(3/4) per adversary with realized L");
}

// ---------------------------------------------------------------------------------------------
// auth simulate

struct AuthArgs {
    std::string setup = "small";
    std::string mode = "twirl";
    std::string attack = "random";
    std::string channel_file;
    std::string tamper;
    size_t trials = 5;
};

Auth13Setup make_setup(const std::string &which) {
    Rng rng(which == "big" ? 1302 : 1301);
    if (which == "big") {
        ComposedCode code = compose(build_pmd(build_bcgst_family(4, 2)), named_code("c862"));
        return make_auth13(code, random_nm_code(16, 2, 20, rng));
    }
    ComposedCode code = compose(build_pmd(build_bcgst_family(2, 1)), named_code("c43"));
    return make_auth13(code, random_nm_code(8, 2, 12, rng));
}

CVec maximally_entangled(size_t k) {
    uint64_t d = uint64_t{1} << k;
    CVec v = CVec::Zero(d * d);
    for (uint64_t i = 0; i < d; i++) v[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
    return v;
}

void run_auth_simulate(const AuthArgs &a, const Common &c, Report &rep) {
    Auth13Setup s = make_setup(a.setup);
    Auth13Mode mode = a.mode == "exhaustive" ? Auth13Mode::kExhaustive : Auth13Mode::kTwirl;
    size_t n = s.nq();
    CVec psi = maximally_entangled(s.code.k());
    double eps = measure_pmd_epsilon(s.code.pmd).epsilon;
    rep.metric("quantum_wires", std::to_string(n));
    rep.metric("key_bits", std::to_string(s.key_bits()));
    rep.metric("pmd_epsilon", eps);
    Rng rng(c.seed);
    std::optional<QuantumChannel> fixed;
    if (!a.channel_file.empty()) fixed = QuantumChannel::parse(read_file(a.channel_file), 1);
    std::optional<TamperFunction> tamper;
    if (!a.tamper.empty()) tamper = TamperFunction::parse(a.tamper);

    rep.columns = {"trial", "p_accept", "p_accept_wrong", "bound", "recovered_wrong", "nm_distance", "exact"};
    bool bound_ok = true, recovered_ok = true, complete_ok = true, subst_ok = true;
    double worst_rec = 0, subst_gap = 0;
    size_t trials = a.attack == "identity" ? 1 : a.trials;
    for (size_t t = 0; t < trials; t++) {
        WireAttack w = WireAttack::identity(n, s.nm.n);
        double expected_wrong = -1;
        if (a.attack == "random") {
            for (size_t i = 0; i < n; i++) {
                w.quantum[i] = fixed ? *fixed : QuantumChannel::random(1, {0}, 1 + rng.uniform(3), rng);
            }
            if (tamper) w.classical = *tamper;
        } else if (a.attack == "substitution") {
            uint64_t s0 = rng.uniform(uint64_t{1} << s.key_bits()), r0 = rng.uniform(uint64_t{1} << s.nm.r);
            CVec enc0 = CVec::Zero(uint64_t{1} << n);
            enc0[0] = 1;
            apply_composed_encode(s.code, enc0);
            CVec padded = enc0;
            apply_pauli(pad_pauli(s0, n), padded, n);
            auto marg = qubit_marginals(padded, n);
            for (size_t i = 0; i < n; i++) w.quantum[i] = QuantumChannel::replace(1, {0}, marg[i]);
            w.classical = TamperFunction::constant(s.nm.encode(s0, r0), s.nm.n);
            double overlap = product_state_overlap(s.code, qubit_marginals(enc0, n));
            expected_wrong = (1.0 - std::ldexp(1.0, -2 * static_cast<int>(s.code.k()))) * overlap;
        } else if (a.attack != "identity") {
            throw UsageError("unknown attack '" + a.attack + "'");
        }
        Auth13Report r = auth13_attack_harness(s, w, psi, mode);
        rep.rows.push_back({std::to_string(t), fmt_double(r.p_accept), fmt_double(r.p_accept_wrong), fmt_double(r.bound),
                            fmt_double(r.recovered_accept_wrong), fmt_double(r.nm_distance), r.exact ? "yes" : "no"});
        bound_ok &= r.p_accept_wrong <= r.bound + 1e-12;
        if (w.classical.is_keep_all()) {
            worst_rec = std::max(worst_rec, r.recovered_accept_wrong);
            recovered_ok &= r.recovered_accept_wrong <= eps * eps + 1e-12;
        }
        if (a.attack == "identity") complete_ok = std::abs(r.p_accept - 1) <= 1e-12 && r.p_accept_wrong <= 1e-12;
        if (expected_wrong >= 0) {
            subst_gap = std::max(subst_gap, std::abs(r.p_accept_wrong - expected_wrong));
            subst_ok &= subst_gap <= 1e-9;
        }
    }
    rep.check("wrong_accept_bound", bound_ok, "all trials", "p_accept_wrong <= nm_distance + q_same * recovered + uncorrelated");
    if (a.attack == "identity") rep.check("completeness", complete_ok, "p_accept = 1, p_accept_wrong = 0", "exact");
    if (a.attack == "random" && mode == Auth13Mode::kTwirl && (!tamper || tamper->is_keep_all())) {
        rep.check("recovered_key_branch", recovered_ok, fmt_double(worst_rec), "<= eps^2 = " + fmt_double(eps * eps));
    }
    if (a.attack == "substitution") {
        rep.check("substitution_overlap", subst_ok, "max gap " + fmt_double(subst_gap),
                  "p_accept_wrong = (1 - 4^-k) Tr[Pi rho_1 x ... x rho_N] within 1e-9");
    }
}

// ---------------------------------------------------------------------------------------------
// nm

struct NmSearchArgs {
    size_t k = 2, r = 2, n = 6;
    size_t trials = 20;
    std::string out_code;
    double max_epsilon = 1.0;
};

void run_nm_search(const NmSearchArgs &a, const Common &c, Report &rep) {
    Rng rng(c.seed);
    NmSearchResult res = nm_search(a.k, a.r, a.n, a.trials, rng);
    if (!a.out_code.empty()) {
        std::ofstream of(a.out_code, std::ios::binary);
        if (!of) throw UsageError("cannot write " + a.out_code);
        of << res.code.str();
    }
    rep.metric("epsilon", res.epsilon);
    rep.columns = {"trial", "best_epsilon"};
    for (size_t i = 0; i < res.best_so_far.size(); i++) rep.rows.push_back({std::to_string(i), fmt_double(res.best_so_far[i])});
    rep.check("nm_epsilon", res.epsilon <= a.max_epsilon + 1e-12, fmt_double(res.epsilon), "<= " + fmt_double(a.max_epsilon));
}

struct NmVerifyArgs {
    std::string code;
    double max_epsilon = 1.0;
};

void run_nm_verify(const NmVerifyArgs &a, Report &rep) {
    NmCode code = NmCode::parse(read_file(a.code));
    NmVerifyResult res = nm_verify(code);
    rep.metric("k", std::to_string(code.k));
    rep.metric("r", std::to_string(code.r));
    rep.metric("n", std::to_string(code.n));
    rep.metric("epsilon", res.epsilon);
    rep.metric("worst_tampering", res.worst.str());
    rep.metric("distinct_distributions", std::to_string(res.distinct_distributions));
    double keep = nm_decompose(code, TamperFunction::keep_all(code.n)).distance;
    rep.check("keep_all_simulated", keep <= 1e-12, fmt_double(keep), "= 0");
    rep.check("nm_epsilon", res.epsilon <= a.max_epsilon + 1e-12, fmt_double(res.epsilon), "<= " + fmt_double(a.max_epsilon));
}

// ---------------------------------------------------------------------------------------------
// sweep

struct SweepArgs {
    std::string what = "pmd-epsilon";
    std::string grid = "1,2,3";
    size_t n = 0;
    size_t adversaries = 10;
    std::string plot;
};

void run_sweep(const SweepArgs &a, const Common &c, Report &rep) {
    std::vector<std::string> points = split(a.grid, ',');
    std::vector<long> values;
    for (const auto &p : points) {
        try {
            size_t used = 0;
            long v = std::stol(p, &used);
            if (used != p.size() || v < 0) throw std::invalid_argument(p);
            values.push_back(v);
        } catch (const std::exception &) {
            throw UsageError("bad grid value '" + p + "'");
        }
    }
    std::vector<std::vector<std::string>> rows(values.size());
    std::vector<std::string> errors(values.size());
    if (a.what == "pmd-epsilon") {
        rep.columns = {"lambda", "n", "epsilon", "bound", "status"};
#pragma omp parallel for schedule(dynamic)
        for (int64_t i = 0; i < static_cast<int64_t>(values.size()); i++) {
            int l = static_cast<int>(values[i]);
            size_t n = a.n ? a.n : 2 * static_cast<size_t>(l);
            try {
                PtcFamily fam = build_bcgst_family(n, l);
                PmdCode pmd = build_pmd(fam);
                double eps = measure_pmd_epsilon(pmd).epsilon;
                double b = pmd_epsilon_bound(measure_strong_ptc_error(fam).epsilon.value(),
                                           measure_pairwise_detectability(fam).delta.value(), l);
                rows[i] = {std::to_string(l), std::to_string(n), fmt_double(eps), fmt_double(b), eps <= b + 1e-10 ? "ok" : "bound-failed"};
            } catch (const std::exception &e) {
                rows[i] = {std::to_string(l), std::to_string(n), "", "", "error"};
                errors[i] = e.what();
            }
        }
    } else if (a.what == "aqec-fidelity") {
        rep.columns = {"budget", "adversaries", "min_fidelity", "mean_fidelity", "max_list", "status"};
        ComposedCode code = compose(build_pmd(build_bcgst_family(4, 2)), named_code("c862"));
        double eps = measure_pmd_epsilon(code.pmd).epsilon;
#pragma omp parallel for schedule(dynamic)
        for (int64_t i = 0; i < static_cast<int64_t>(values.size()); i++) {
            size_t budget = static_cast<size_t>(values[i]);
            try {
                double mn = 1, sum = 0;
                size_t ml = 0, fails = 0;
                for (size_t j = 0; j < a.adversaries; j++) {
                    Rng rng(c.seed + j);
                    auto adv = ErasureAdversary::random(code.n(), budget, j % 2 == 1, rng);
                    auto r = erasure_harness(code, adv, eps);
                    mn = std::min(mn, r.fidelity);
                    sum += r.fidelity;
                    ml = std::max(ml, r.list_max);
                    fails += !r.pass;
                }
                double mean = a.adversaries ? sum / static_cast<double>(a.adversaries) : 0;
                rows[i] = {std::to_string(budget), std::to_string(a.adversaries), fmt_double(mn), fmt_double(mean),
                           std::to_string(ml), fails ? "bound-failed" : "ok"};
            } catch (const std::exception &e) {
                rows[i] = {std::to_string(budget), std::to_string(a.adversaries), "", "", "", "error"};
                errors[i] = e.what();
            }
        }
    } else {
        throw UsageError("unknown sweep '" + a.what + "'");
    }
    rep.rows = rows;
    size_t flagged = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].back() != "ok") flagged++;
        if (!errors[i].empty()) rep.metric("error_row_" + std::to_string(i), errors[i]);
    }
    rep.metric("rows", std::to_string(rows.size()));
    rep.metric("flagged_rows", std::to_string(flagged));
    if (!a.plot.empty()) {
        std::ofstream of(a.plot, std::ios::binary);
        if (!of) throw UsageError("cannot write " + a.plot);
        bool pmd = a.what == "pmd-epsilon";
        of << "# gnuplot script; data is the CSV report of the same sweep\n"
           << "set datafile separator ','\n"
           << "set key autotitle columnhead\n"
           << "set xlabel '" << (pmd ? "lambda" : "erasure budget") << "'\n"
           << "set ylabel '" << (pmd ? "epsilon" : "entanglement fidelity") << "'\n"
           << "plot ARG1 using 1:3 with linespoints" << (pmd ? ", ARG1 using 1:4 with lines" : "") << "\n";
    }
    rep.check("sweep_rows", flagged == 0, std::to_string(rows.size() - flagged) + "/" + std::to_string(rows.size()) + " ok",
              "every grid point completes within its bound");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"pmdkit: Pauli manipulation detection and approximate error correction toolkit", "pmdkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("pmdkit ") + kToolkitVersion);

    Common common;
    Report rep;
    std::function<void()> action;
    CLI::App *leaf = nullptr;

    auto leaf_cmd = [&](CLI::App *parent, const std::string &name, const std::string &desc, const std::string &label) {
        CLI::App *sub = parent->add_subcommand(name, desc);
        add_common(sub, common);
        sub->callback([&, sub, label] {
            leaf = sub;
            rep.command = label;
        });
        return sub;
    };

    // ptc check
    CLI::App *ptc = app.add_subcommand("ptc", "purity testing code families")->require_subcommand(1);
    PtcArgs ptc_args;
    CLI::App *ptc_check = leaf_cmd(ptc, "check", "measure the strong PTC error and pairwise detectability", "ptc check");
    ptc_check->add_option("--n", ptc_args.n, "block length")->capture_default_str();
    ptc_check->add_option("--lambda", ptc_args.lambda, "key bits")->capture_default_str();
    ptc_check->add_option("--family", ptc_args.family, "family file (overrides --n/--lambda)");
    ptc_check->add_option("--emit-family", ptc_args.emit_family, "write the family file here");
    ptc_check->add_option("--samples", ptc_args.samples, "sample this many Paulis instead of the exhaustive sweep")->capture_default_str();

    // pmd verify
    CLI::App *pmd = app.add_subcommand("pmd", "Pauli manipulation detection codes")->require_subcommand(1);
    PmdArgs pmd_args;
    CLI::App *pmd_verify = leaf_cmd(pmd, "verify", "measure epsilon and check the PMD bounds", "pmd verify");
    pmd_verify->add_option("--n", pmd_args.n, "block length")->capture_default_str();
    pmd_verify->add_option("--lambda", pmd_args.lambda, "key qubits")->capture_default_str();
    pmd_verify->add_option("--family", pmd_args.family, "PTC family file (overrides --n/--lambda)");
    pmd_verify->add_option("--samples", pmd_args.samples, "sample this many Paulis instead of the exhaustive sweep")->capture_default_str();
    pmd_verify->add_option("--auth-trials", pmd_args.auth_trials, "random trials for the Auth unitary checks")->capture_default_str();

    // qlde
    CLI::App *qlde = app.add_subcommand("qlde", "list decoding from erasures")->require_subcommand(1);
    QldeDecodeArgs dec_args;
    CLI::App *qdec = leaf_cmd(qlde, "decode", "list of logical classes for one erasure pattern and syndrome", "qlde decode");
    qdec->add_option("--code", dec_args.code.code_file, "stabilizer code file");
    qdec->add_option("--code-name", dec_args.code.code_name, "built-in code: rep3 c21 c43 c422 c513 c862 steane")->capture_default_str();
    qdec->add_option("--erased", dec_args.erased, "comma-separated erased qubits, - for none")->capture_default_str();
    qdec->add_option("--syndrome", dec_args.syndrome, "syndrome bits, generator 0 first (default all zero)");
    QldeProfileArgs prof_args;
    CLI::App *qprof = leaf_cmd(qlde, "profile", "worst list size over erasures of at most delta n qubits", "qlde profile");
    qprof->add_option("--code", prof_args.code.code_file, "stabilizer code file");
    qprof->add_option("--code-name", prof_args.code.code_name, "built-in code name")->capture_default_str();
    qprof->add_option("--delta", prof_args.delta, "erasure fraction")->capture_default_str();
    qprof->add_option("--max-list", prof_args.max_list, "fail when the list size exceeds this (0 disables)")->capture_default_str();
    QldeCssArgs css_args;
    CLI::App *qcss = leaf_cmd(qlde, "sample-css", "random CSS code, rate failures and list-size lifting", "qlde sample-css");
    qcss->add_option("--n", css_args.n, "block length")->capture_default_str();
    qcss->add_option("--k", css_args.k, "logical qubits")->capture_default_str();
    qcss->add_option("--draws", css_args.draws, "single draws for the rate-failure count")->capture_default_str();

    // aqec simulate
    CLI::App *aqec = app.add_subcommand("aqec", "approximate erasure correction")->require_subcommand(1);
    AqecArgs aqec_args;
    CLI::App *asim = leaf_cmd(aqec, "simulate", "entanglement fidelity against seeded erasure adversaries", "aqec simulate");
    asim->add_option("--n", aqec_args.n, "PMD block length")->capture_default_str();
    asim->add_option("--lambda", aqec_args.lambda, "PMD key qubits")->capture_default_str();
    asim->add_option("--outer", aqec_args.outer_file, "outer stabilizer code file");
    asim->add_option("--outer-name", aqec_args.outer_name, "built-in outer code")->capture_default_str();
    asim->add_option("--budget", aqec_args.budget, "erased qubits per branch")->capture_default_str();
    asim->add_option("--adversaries", aqec_args.adversaries, "seeded adversaries (seed, seed + 1, ...)")->capture_default_str();
    asim->add_option("--adaptive", aqec_args.adaptive, "adaptivity of generated adversaries")
        ->check(CLI::IsMember({"yes", "no", "alternate"}))
        ->capture_default_str();
    asim->add_option("--adversary", aqec_args.adversary_file, "adversary JSON file instead of generated ones");

    // auth simulate
    CLI::App *auth = app.add_subcommand("auth", "quantum authentication against qubit-wise attacks")->require_subcommand(1);
    AuthArgs auth_args;
    CLI::App *ausim = leaf_cmd(auth, "simulate", "acceptance and wrong-acceptance of the rate-1/3 protocol", "auth simulate");
    ausim->add_option("--setup", auth_args.setup, "small: PMD(2,1) in [[4,3]]; big: PMD(4,2) in [[8,6,2]]")
        ->check(CLI::IsMember({"small", "big"}))
        ->capture_default_str();
    ausim->add_option("--mode", auth_args.mode, "exact enumeration or twirl reduction")
        ->check(CLI::IsMember({"exhaustive", "twirl"}))
        ->capture_default_str();
    ausim->add_option("--attack", auth_args.attack, "identity, random or substitution")
        ->check(CLI::IsMember({"identity", "random", "substitution"}))
        ->capture_default_str();
    ausim->add_option("--channel", auth_args.channel_file, "single-qubit channel JSON applied to every wire (random attack)");
    ausim->add_option("--tamper", auth_args.tamper, "classical tampering, one of 0 1 k f per bit (random attack)");
    ausim->add_option("--trials", auth_args.trials, "attacks to draw")->capture_default_str();

    // nm
    CLI::App *nm = app.add_subcommand("nm", "non-malleable codes against bit-wise tampering")->require_subcommand(1);
    NmSearchArgs search_args;
    CLI::App *nsearch = leaf_cmd(nm, "search", "best of random encoding tables", "nm search");
    nsearch->add_option("--k", search_args.k, "message bits")->capture_default_str();
    nsearch->add_option("--r", search_args.r, "randomness bits")->capture_default_str();
    nsearch->add_option("--n", search_args.n, "codeword bits")->capture_default_str();
    nsearch->add_option("--trials", search_args.trials, "random tables")->capture_default_str();
    nsearch->add_option("--out-code", search_args.out_code, "write the best table here");
    nsearch->add_option("--max-epsilon", search_args.max_epsilon, "fail above this epsilon")->capture_default_str();
    NmVerifyArgs nverify_args;
    CLI::App *nverify = leaf_cmd(nm, "verify", "exact epsilon over every deterministic tampering", "nm verify");
    nverify->add_option("--code", nverify_args.code, "NM table file")->required();
    nverify->add_option("--max-epsilon", nverify_args.max_epsilon, "fail above this epsilon")->capture_default_str();

    // sweep
    SweepArgs sweep_args;
    CLI::App *sweep = leaf_cmd(&app, "sweep", "parameter sweep table", "sweep");
    sweep->add_option("--what", sweep_args.what, "pmd-epsilon (grid over lambda) or aqec-fidelity (grid over budget)")
        ->check(CLI::IsMember({"pmd-epsilon", "aqec-fidelity"}))
        ->capture_default_str();
    sweep->add_option("--grid", sweep_args.grid, "comma-separated grid values, may be empty")->capture_default_str();
    sweep->add_option("--n", sweep_args.n, "PMD block length (0: 2 lambda)")->capture_default_str();
    sweep->add_option("--adversaries", sweep_args.adversaries, "adversaries per budget")->capture_default_str();
    sweep->add_option("--plot", sweep_args.plot, "write a gnuplot script here");

    try {
        std::vector<std::string> full = expand_config(args);
        std::vector<std::string> rev(full.rbegin(), full.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << "pmdkit " << kToolkitVersion << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        CLI::App *ctx = leaf ? leaf : &app;
        err << ctx->help();
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (!leaf) {
        err << app.help();
        return 2;
    }
    rep.seed = common.seed;
    echo_config(leaf, rep);
    try {
        if (leaf == ptc_check) run_ptc_check(ptc_args, common, rep);
        else if (leaf == pmd_verify) run_pmd_verify(pmd_args, common, rep);
        else if (leaf == qdec) run_qlde_decode(dec_args, rep);
        else if (leaf == qprof) run_qlde_profile(prof_args, rep);
        else if (leaf == qcss) run_qlde_sample_css(css_args, common, rep);
        else if (leaf == asim) run_aqec_simulate(aqec_args, common, rep);
        else if (leaf == ausim) run_auth_simulate(auth_args, common, rep);
        else if (leaf == nsearch) run_nm_search(search_args, common, rep);
        else if (leaf == nverify) run_nm_verify(nverify_args, rep);
        else if (leaf == sweep) run_sweep(sweep_args, common, rep);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::string text = rep.render(parse_format(common.format));
    if (common.out.empty()) {
        out << text;
    } else {
        std::ofstream of(common.out, std::ios::binary);
        if (!of) {
            err << "error: cannot write " << common.out << "\n";
            return 2;
        }
        of << text;
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace pmdkit
