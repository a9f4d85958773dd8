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

#ifndef PMDKIT_CIRCUIT_H
#define PMDKIT_CIRCUIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "pmdkit/pauli.h"

namespace pmdkit {

enum class GateType : uint8_t { H, S, CNOT, CZ, X, Z };

struct Gate {
    GateType type;
    uint32_t q0;
    uint32_t q1 = 0;  // target for CNOT, second qubit for CZ

    bool operator==(const Gate &o) const { return type == o.type && q0 == o.q0 && q1 == o.q1; }
};

/// Clifford circuit in time order (gates[0] acts first).
struct Circuit {
    size_t n = 0;
    std::vector<Gate> gates;

    /// Gate sequence of the inverse unitary. S is inverted as S then Z.
    Circuit inverse() const;
    /// One gate per line, e.g. "CNOT 0 3".
    std::string str() const;
    static Circuit parse(const std::string &text, size_t n);
};

const char *gate_name(GateType t);

/// U P U^dagger for a single gate, phases tracked exactly.
PauliOperator conjugate(const Gate &g, const PauliOperator &p);
/// U P U^dagger where U is the whole circuit.
PauliOperator conjugate(const Circuit &c, const PauliOperator &p);

}  // namespace pmdkit

#endif
