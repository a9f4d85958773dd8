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

#ifndef PMDKIT_TESTS_AUTH_SETUPS_H
#define PMDKIT_TESTS_AUTH_SETUPS_H

#include <cmath>

#include "pmdkit/auth.h"
#include "pmdkit/pmd.h"
#include "pmdkit/ptc.h"
#include "test_codes.h"

namespace pmdkit::testing {

/// PMD(2,1) inside a [[4,3]] code: 4 quantum wires, 8 key bits.
inline const Auth13Setup &auth13_small() {
    static const Auth13Setup s = [] {
        Rng rng(1301);
        ComposedCode code = compose(build_pmd(build_bcgst_family(2, 1)), code_from(4, {"XZZX"}));
        return make_auth13(code, random_nm_code(8, 2, 12, rng));
    }();
    return s;
}

/// PMD(4,2) inside [[8,6,2]]: 8 quantum wires, 16 key bits.
inline const Auth13Setup &auth13_big() {
    static const Auth13Setup s = [] {
        Rng rng(1302);
        ComposedCode code =
            compose(build_pmd(build_bcgst_family(4, 2)), code_from(8, {"XXXXXXXX", "ZZZZZZZZ"}));
        return make_auth13(code, random_nm_code(16, 2, 20, rng));
    }();
    return s;
}

/// Outer [[2,1]] over two blocks of PMD(2,1) inside [[4,3]], pad from pairwise-independent GF(16) values.
inline const Auth1Setup &auth1_toy() {
    static const Auth1Setup s = [] {
        Rng rng(1303);
        ComposedCode inner = compose(build_pmd(build_bcgst_family(2, 1)), code_from(4, {"XZZX"}));
        return make_auth1(code_from(2, {"XX"}), inner, 2, 4, random_nm_code(8, 1, 10, rng));
    }();
    return s;
}

/// Maximally entangled state of k message qubits with k reference qubits.
inline CVec max_entangled(size_t k) {
    uint64_t d = uint64_t{1} << k;
    CVec v = CVec::Zero(d * d);
    for (uint64_t i = 0; i < d; i++) v[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
    return v;
}

inline std::vector<QuantumChannel> random_wires(size_t n, Rng &rng) {
    std::vector<QuantumChannel> out;
    for (size_t i = 0; i < n; i++) out.push_back(QuantumChannel::random(1, {0}, 1 + rng.uniform(3), rng));
    return out;
}

}  // namespace pmdkit::testing

#endif
