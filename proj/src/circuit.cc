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

#include "pmdkit/circuit.h"

#include <sstream>
#include <stdexcept>

namespace pmdkit {

const char *gate_name(GateType t) {
    switch (t) {
        case GateType::H:
            return "H";
        case GateType::S:
            return "S";
        case GateType::CNOT:
            return "CNOT";
        case GateType::CZ:
            return "CZ";
        case GateType::X:
            return "X";
        case GateType::Z:
            return "Z";
    }
    return "?";
}

Circuit Circuit::inverse() const {
    Circuit out;
    out.n = n;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (it->type == GateType::S) {
            // S^dagger = Z S.
            out.gates.push_back({GateType::S, it->q0, 0});
            out.gates.push_back({GateType::Z, it->q0, 0});
        } else {
            out.gates.push_back(*it);
        }
    }
    return out;
}

std::string Circuit::str() const {
    std::ostringstream os;
    for (const auto &g : gates) {
        os << gate_name(g.type) << ' ' << g.q0;
        if (g.type == GateType::CNOT || g.type == GateType::CZ) os << ' ' << g.q1;
        os << '\n';
    }
    return os.str();
}

Circuit Circuit::parse(const std::string &text, size_t n) {
    Circuit c;
    c.n = n;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        Gate g{GateType::H, 0, 0};
        bool two = false;
        if (name == "H") {
            g.type = GateType::H;
        } else if (name == "S") {
            g.type = GateType::S;
        } else if (name == "X") {
            g.type = GateType::X;
        } else if (name == "Z") {
            g.type = GateType::Z;
        } else if (name == "CNOT") {
            g.type = GateType::CNOT;
            two = true;
        } else if (name == "CZ") {
            g.type = GateType::CZ;
            two = true;
        } else {
            throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": unknown gate " + name);
        }
        if (!(ls >> g.q0) || (two && !(ls >> g.q1)) || g.q0 >= n || (two && (g.q1 >= n || g.q1 == g.q0))) {
            throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": bad qubit operands");
        }
        c.gates.push_back(g);
    }
    return c;
}

PauliOperator conjugate(const Gate &g, const PauliOperator &p) {
    // Work with the Hermitian form and a sign bit, then restore the i^phase representation.
    BitVec x = p.x, z = p.z;
    uint8_t sign = p.sign_exponent();  // 0..3, gates only toggle the (-1) part
    bool flip = false;
    size_t a = g.q0, b = g.q1;
    switch (g.type) {
        case GateType::H: {
            flip = x.get(a) && z.get(a);
            bool xa = x.get(a);
            x.set(a, z.get(a));
            z.set(a, xa);
            break;
        }
        case GateType::S:
            flip = x.get(a) && z.get(a);
            z.set(a, z.get(a) ^ x.get(a));
            break;
        case GateType::X:
            flip = z.get(a);
            break;
        case GateType::Z:
            flip = x.get(a);
            break;
        case GateType::CNOT:
            flip = x.get(a) && z.get(b) && !(x.get(b) ^ z.get(a));
            x.set(b, x.get(b) ^ x.get(a));
            z.set(a, z.get(a) ^ z.get(b));
            break;
        case GateType::CZ:
            flip = x.get(a) && x.get(b) && (z.get(a) ^ z.get(b));
            z.set(b, z.get(b) ^ x.get(a));
            z.set(a, z.get(a) ^ x.get(b));
            break;
    }
    if (flip) sign = (sign + 2) & 3;
    PauliOperator out = PauliOperator::hermitian(std::move(x), std::move(z));
    out.phase = (out.phase + sign) & 3;
    return out;
}

PauliOperator conjugate(const Circuit &c, const PauliOperator &p) {
    // U = G_m ... G_1, so U P U^dagger conjugates by G_1 first.
    PauliOperator q = p;
    for (const auto &g : c.gates) q = conjugate(g, q);
    return q;
}

}  // namespace pmdkit
