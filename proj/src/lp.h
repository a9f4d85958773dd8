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

#ifndef PMDKIT_SRC_LP_H
#define PMDKIT_SRC_LP_H

#include <cstddef>
#include <utility>
#include <vector>

namespace pmdkit::detail {

/// min c.x subject to rows and x >= 0.
struct LinearProgram {
    enum class Sense { kLe, kGe, kEq };
    struct Row {
        std::vector<std::pair<size_t, double>> terms;
        Sense sense = Sense::kLe;
        double rhs = 0;
    };
    size_t num_vars = 0;
    std::vector<double> objective;
    std::vector<Row> rows;
};

struct LpSolution {
    bool feasible = false;
    double value = 0;
    std::vector<double> x;
};

/// Dense two-phase tableau simplex with Bland's rule. Unbounded problems throw std::runtime_error.
LpSolution solve_lp(const LinearProgram &lp);

}  // namespace pmdkit::detail

#endif
