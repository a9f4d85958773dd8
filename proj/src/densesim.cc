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

#include "pmdkit/densesim.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "json_util.h"

namespace pmdkit {

size_t max_qubits() {
    static const size_t v = [] {
        const char *s = std::getenv("PMDKIT_MAX_QUBITS");
        if (s == nullptr || *s == 0) return size_t{14};
        long x = std::strtol(s, nullptr, 10);
        if (x <= 0) throw std::invalid_argument("PMDKIT_MAX_QUBITS must be a positive integer");
        return static_cast<size_t>(x);
    }();
    return v;
}

void check_qubits(size_t n, const char *what) {
    if (n > max_qubits()) {
        throw std::length_error(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the dense limit of " +
                                std::to_string(max_qubits()) + " (set PMDKIT_MAX_QUBITS to raise it)");
    }
}

namespace {

inline uint64_t qbit(size_t n, size_t q) { return uint64_t{1} << (n - 1 - q); }

const cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

DenseState DenseState::basis(size_t n, uint64_t index) {
    check_qubits(n, "DenseState::basis");
    DenseState s;
    s.n = n;
    s.amps = CVec::Zero(uint64_t{1} << n);
    s.amps[index] = 1;
    return s;
}

void apply_pauli(const PauliOperator &p, CVec &v, size_t n, size_t offset) {
    if (offset + p.n > n) throw std::invalid_argument("apply_pauli: operator does not fit the register");
    uint64_t xm = 0, zm = 0;
    for (size_t q = 0; q < p.n; q++) {
        if (p.x.get(q)) xm |= qbit(n, offset + q);
        if (p.z.get(q)) zm |= qbit(n, offset + q);
    }
    cplx ph = kPhase[p.phase & 3];
    CVec out(v.size());
    for (uint64_t b = 0; b < static_cast<uint64_t>(v.size()); b++) {
        cplx a = v[b] * ph;
        if (std::popcount(b & zm) & 1) a = -a;
        out[b ^ xm] = a;
    }
    v.swap(out);
}

DenseOperator pauli_matrix(const PauliOperator &p) {
    check_qubits(p.n, "pauli_matrix");
    uint64_t d = uint64_t{1} << p.n;
    DenseOperator op;
    op.m = CMat::Zero(d, d);
    for (uint64_t b = 0; b < d; b++) {
        CVec e = CVec::Zero(d);
        e[b] = 1;
        apply_pauli(p, e, p.n);
        op.m.col(b) = e;
    }
    return op;
}

void apply_gate(const Gate &g, CVec &v, size_t n, size_t offset) {
    uint64_t a = qbit(n, offset + g.q0);
    uint64_t dim = v.size();
    const double s = M_SQRT1_2;
    switch (g.type) {
        case GateType::H:
            for (uint64_t b = 0; b < dim; b++) {
                if (b & a) continue;
                cplx u = v[b], w = v[b | a];
                v[b] = s * (u + w);
                v[b | a] = s * (u - w);
            }
            break;
        case GateType::S:
            for (uint64_t b = 0; b < dim; b++)
                if (b & a) v[b] *= cplx(0, 1);
            break;
        case GateType::X:
            for (uint64_t b = 0; b < dim; b++)
                if (!(b & a)) std::swap(v[b], v[b | a]);
            break;
        case GateType::Z:
            for (uint64_t b = 0; b < dim; b++)
                if (b & a) v[b] = -v[b];
            break;
        case GateType::CNOT: {
            uint64_t t = qbit(n, offset + g.q1);
            for (uint64_t b = 0; b < dim; b++)
                if ((b & a) && !(b & t)) std::swap(v[b], v[b | t]);
            break;
        }
        case GateType::CZ: {
            uint64_t t = qbit(n, offset + g.q1);
            for (uint64_t b = 0; b < dim; b++)
                if ((b & a) && (b & t)) v[b] = -v[b];
            break;
        }
    }
}

void apply_circuit(const Circuit &c, CVec &v, size_t n, size_t offset) {
    if (offset + c.n > n) throw std::invalid_argument("apply_circuit: circuit does not fit the register");
    for (const Gate &g : c.gates) apply_gate(g, v, n, offset);
}

void apply_local(const CMat &m, const std::vector<size_t> &qubits, CVec &v, size_t n) {
    size_t s = qubits.size();
    uint64_t ld = uint64_t{1} << s;
    if (static_cast<uint64_t>(m.rows()) != ld || static_cast<uint64_t>(m.cols()) != ld) {
        throw std::invalid_argument("apply_local: matrix size does not match support");
    }
    std::vector<uint64_t> masks(s);
    uint64_t all = 0;
    for (size_t i = 0; i < s; i++) {
        if (qubits[i] >= n) throw std::invalid_argument("apply_local: qubit out of range");
        masks[i] = qbit(n, qubits[i]);
        if (all & masks[i]) throw std::invalid_argument("apply_local: repeated qubit");
        all |= masks[i];
    }
    std::vector<uint64_t> spread(ld);
    for (uint64_t l = 0; l < ld; l++) {
        uint64_t idx = 0;
        for (size_t i = 0; i < s; i++)
            if ((l >> (s - 1 - i)) & 1) idx |= masks[i];
        spread[l] = idx;
    }
    CVec loc(ld), res(ld);
    for (uint64_t b = 0; b < static_cast<uint64_t>(v.size()); b++) {
        if (b & all) continue;
        for (uint64_t l = 0; l < ld; l++) loc[l] = v[b | spread[l]];
        res.noalias() = m * loc;
        for (uint64_t l = 0; l < ld; l++) v[b | spread[l]] = res[l];
    }
}

void for_each_slice(CVec &v, size_t n, const std::vector<size_t> &qubits,
                    const std::function<void(CVec &slice, uint64_t rest)> &fn) {
    size_t s = qubits.size();
    uint64_t ld = uint64_t{1} << s, all = 0;
    std::vector<uint64_t> spread(ld, 0);
    for (size_t i = 0; i < s; i++) {
        if (qubits[i] >= n) throw std::invalid_argument("for_each_slice: qubit out of range");
        uint64_t m = qbit(n, qubits[i]);
        if (all & m) throw std::invalid_argument("for_each_slice: repeated qubit");
        all |= m;
        for (uint64_t l = 0; l < ld; l++)
            if ((l >> (s - 1 - i)) & 1) spread[l] |= m;
    }
    CVec loc(ld);
    for (uint64_t b = 0; b < static_cast<uint64_t>(v.size()); b++) {
        if (b & all) continue;
        for (uint64_t l = 0; l < ld; l++) loc[l] = v[b | spread[l]];
        fn(loc, b);
        for (uint64_t l = 0; l < ld; l++) v[b | spread[l]] = loc[l];
    }
}

DenseOperator circuit_unitary(const Circuit &c) {
    check_qubits(c.n, "circuit_unitary");
    uint64_t d = uint64_t{1} << c.n;
    DenseOperator op;
    op.m = CMat::Identity(d, d);
    for (uint64_t b = 0; b < d; b++) {
        CVec col = op.m.col(b);
        apply_circuit(c, col, c.n);
        op.m.col(b) = col;
    }
    return op;
}

DenseOperator codespace_isometry(const StabilizerCode &code) {
    size_t n = code.n(), k = code.k(), r = code.r();
    check_qubits(n, "codespace_isometry");
    DenseOperator op;
    op.m = CMat::Zero(uint64_t{1} << n, uint64_t{1} << k);
    for (uint64_t m = 0; m < (uint64_t{1} << k); m++) {
        CVec v = CVec::Zero(uint64_t{1} << n);
        v[m << r] = 1;
        apply_circuit(code.encoder(), v, n);
        op.m.col(m) = v;
    }
    return op;
}

DenseOperator stabilizer_projector(const StabilizerCode &code) {
    check_qubits(code.n(), "stabilizer_projector");
    uint64_t d = uint64_t{1} << code.n();
    DenseOperator op;
    op.m = CMat::Zero(d, d);
    for (const PauliOperator &s : stabilizer_group(code)) op.m += pauli_matrix(s).m;
    op.m /= std::ldexp(1.0, static_cast<int>(code.r()));
    return op;
}

double operator_norm(const CMat &m) {
    if (m.size() == 0) return 0;
    if (std::max(m.rows(), m.cols()) <= 64) {
        // Small case: largest eigenvalue of the Gram matrix on the smaller side.
        CMat g = m.rows() <= m.cols() ? CMat(m * m.adjoint()) : CMat(m.adjoint() * m);
        Eigen::SelfAdjointEigenSolver<CMat> es(g, Eigen::EigenvaluesOnly);
        return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    }
    if (std::max(m.rows(), m.cols()) <= 512) {
        Eigen::JacobiSVD<CMat> svd(m);
        return svd.singularValues()(0);
    }
    // Power iteration on M^dag M from a fixed start vector.
    CVec v = CVec::Ones(m.cols()).normalized();
    double prev = 0;
    for (int it = 0; it < 10000; it++) {
        CVec w = m.adjoint() * (m * v);
        double lam = w.norm();
        if (lam == 0) return 0;
        v = w / lam;
        if (std::abs(lam - prev) <= 1e-14 * lam) return std::sqrt(lam);
        prev = lam;
    }
    throw std::runtime_error("operator_norm: power iteration did not converge");
}

QuantumChannel::QuantumChannel(size_t n_, std::vector<size_t> support_, std::vector<CMat> kraus_)
    : n(n_), support(std::move(support_)), kraus(std::move(kraus_)) {
    if (kraus.empty()) throw std::invalid_argument("channel needs at least one Kraus operator");
    for (size_t q : support)
        if (q >= n) throw std::invalid_argument("channel support qubit " + std::to_string(q) + " out of range");
    int64_t d = int64_t{1} << support.size();
    for (const CMat &k : kraus)
        if (k.rows() != d || k.cols() != d) throw std::invalid_argument("Kraus operator has the wrong size");
    double def = cptp_defect();
    if (def > 1e-10) throw std::invalid_argument("channel is not trace preserving (defect " + std::to_string(def) + ")");
}

double QuantumChannel::cptp_defect() const {
    int64_t d = int64_t{1} << support.size();
    CMat acc = CMat::Zero(d, d);
    for (const CMat &k : kraus) acc += k.adjoint() * k;
    return (acc - CMat::Identity(d, d)).norm();
}

std::string QuantumChannel::str() const {
    nlohmann::json j;
    j["support"] = support;
    j["kraus"] = nlohmann::json::array();
    for (const CMat &k : kraus) j["kraus"].push_back(detail::matrix_to_json(k));
    return j.dump() + "\n";
}

QuantumChannel QuantumChannel::parse(const std::string &text, size_t n) {
    nlohmann::json j = detail::parse_json(text, "channel file");
    if (!j.is_object() || !j.contains("support") || !j.contains("kraus")) {
        throw std::invalid_argument("channel file: expected keys \"support\" and \"kraus\"");
    }
    std::vector<size_t> support;
    try {
        support = j["support"].get<std::vector<size_t>>();
    } catch (const nlohmann::json::exception &) {
        throw std::invalid_argument("channel file: \"support\" must be a list of qubit indices");
    }
    if (!j["kraus"].is_array()) throw std::invalid_argument("channel file: \"kraus\" must be a list");
    std::vector<CMat> kraus;
    for (size_t i = 0; i < j["kraus"].size(); i++) {
        kraus.push_back(detail::matrix_from_json(j["kraus"][i], "channel file: Kraus " + std::to_string(i)));
    }
    return QuantumChannel(n, std::move(support), std::move(kraus));
}

QuantumChannel QuantumChannel::on(size_t n_, std::vector<size_t> support_) const {
    if (support_.size() != support.size()) throw std::invalid_argument("QuantumChannel::on: support size mismatch");
    return QuantumChannel(n_, std::move(support_), kraus);
}

QuantumChannel QuantumChannel::identity(size_t n, size_t q) { return QuantumChannel(n, {q}, {CMat::Identity(2, 2)}); }

QuantumChannel QuantumChannel::unitary(size_t n, std::vector<size_t> support, const CMat &u) {
    return QuantumChannel(n, std::move(support), {u});
}

QuantumChannel QuantumChannel::depolarizing(size_t n, size_t q, double p) {
    std::vector<CMat> ks;
    for (char c : std::string("IXYZ")) {
        double w = c == 'I' ? 1 - 3 * p / 4 : p / 4;
        ks.push_back(std::sqrt(w) * pauli_matrix(PauliOperator::from_string(std::string(1, c))).m);
    }
    return QuantumChannel(n, {q}, ks);
}

QuantumChannel QuantumChannel::dephasing(size_t n, size_t q, double p) {
    return QuantumChannel(n, {q},
                          {std::sqrt(1 - p / 2) * CMat::Identity(2, 2),
                           std::sqrt(p / 2) * pauli_matrix(PauliOperator::from_string("Z")).m});
}

QuantumChannel QuantumChannel::amplitude_damping(size_t n, size_t q, double gamma) {
    CMat k0 = CMat::Zero(2, 2), k1 = CMat::Zero(2, 2);
    k0(0, 0) = 1;
    k0(1, 1) = std::sqrt(1 - gamma);
    k1(0, 1) = std::sqrt(gamma);
    return QuantumChannel(n, {q}, {k0, k1});
}

QuantumChannel QuantumChannel::measure_z(size_t n, size_t q) {
    CMat p0 = CMat::Zero(2, 2), p1 = CMat::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    return QuantumChannel(n, {q}, {p0, p1});
}

QuantumChannel QuantumChannel::replace(size_t n, std::vector<size_t> support, const CMat &sigma) {
    // Kraus sqrt(l_i) |s_i><j| over eigenpairs of sigma and input basis states j.
    Eigen::SelfAdjointEigenSolver<CMat> es(sigma);
    int64_t d = sigma.rows();
    std::vector<CMat> ks;
    for (int64_t i = 0; i < d; i++) {
        double l = es.eigenvalues()(i);
        if (l <= 1e-15) continue;
        for (int64_t j = 0; j < d; j++) {
            CMat k = CMat::Zero(d, d);
            k.col(j) = std::sqrt(l) * es.eigenvectors().col(i);
            ks.push_back(k);
        }
    }
    return QuantumChannel(n, std::move(support), ks);
}

CMat random_gaussian(size_t rows, size_t cols, Rng &rng) {
    CMat m(rows, cols);
    for (size_t a = 0; a < rows; a++)
        for (size_t b = 0; b < cols; b++) {
            double re = rng.normal();
            double im = rng.normal();
            m(a, b) = cplx(re, im);
        }
    return m;
}

CVec random_state(size_t n, Rng &rng) {
    check_qubits(n, "random_state");
    CMat g = random_gaussian(uint64_t{1} << n, 1, rng);
    return g.col(0).normalized();
}

QuantumChannel QuantumChannel::random(size_t n, std::vector<size_t> support, size_t count, Rng &rng) {
    int64_t d = int64_t{1} << support.size();
    CMat g = random_gaussian(count * d, d, rng);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat v = qr.householderQ() * CMat::Identity(count * d, d);
    std::vector<CMat> ks;
    for (size_t i = 0; i < count; i++) ks.push_back(v.block(i * d, 0, d, d));
    return QuantumChannel(n, std::move(support), ks);
}

std::vector<Branch> apply_channel(const QuantumChannel &ch, const std::vector<Branch> &in) {
    std::vector<Branch> out;
    out.reserve(in.size() * ch.kraus.size());
    for (const Branch &b : in) {
        for (const CMat &k : ch.kraus) {
            Branch o;
            o.state = b.state;
            apply_local(k, ch.support, o.state, ch.n);
            double nn = o.state.squaredNorm();
            o.weight = b.weight * nn;
            if (nn > 0) o.state /= std::sqrt(nn);
            out.push_back(std::move(o));
        }
    }
    return out;
}

double entanglement_fidelity(const Pipeline &pipeline, size_t k) {
    uint64_t dk = uint64_t{1} << k;
    std::vector<CVec> traces;  // per branch, vector over aux of sum_m <m, a| K_b |m>
    std::vector<uint64_t> aux;
    for (uint64_t m = 0; m < dk; m++) {
        CVec in = CVec::Zero(dk);
        in[m] = 1;
        std::vector<CVec> outs = pipeline(in);
        if (m == 0) {
            if (outs.empty()) throw std::invalid_argument("entanglement_fidelity: pipeline returned no branches");
            for (const CVec &o : outs) {
                if (o.size() % dk) throw std::invalid_argument("entanglement_fidelity: output dimension not a multiple of 2^k");
                aux.push_back(o.size() / dk);
                traces.push_back(CVec::Zero(aux.back()));
            }
        }
        if (outs.size() != traces.size()) {
            throw std::invalid_argument("entanglement_fidelity: branch count depends on the input");
        }
        for (size_t b = 0; b < outs.size(); b++) {
            if (static_cast<uint64_t>(outs[b].size()) != aux[b] * dk) {
                throw std::invalid_argument("entanglement_fidelity: output dimension depends on the input");
            }
            traces[b] += outs[b].segment(m * aux[b], aux[b]);
        }
    }
    double f = 0;
    for (const CVec &t : traces) f += t.squaredNorm();
    return f / static_cast<double>(dk * dk);
}

double fidelity_distance_bound(double f) { return 2 * std::sqrt(std::max(0.0, 1 - f)); }

}  // namespace pmdkit
