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

#include "lp.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pmdkit::detail {

namespace {

constexpr double kTol = 1e-11;

struct Tableau {
    size_t m = 0, cols = 0;  // cols excludes the rhs column
    std::vector<double> t;   // m x (cols + 1)
    std::vector<double> cost;
    std::vector<size_t> basis;

    double &at(size_t i, size_t j) { return t[i * (cols + 1) + j]; }
    double rhs(size_t i) const { return t[i * (cols + 1) + cols]; }

    void pivot(size_t r, size_t c) {
        double p = at(r, c);
        for (size_t j = 0; j <= cols; j++) at(r, j) /= p;
        for (size_t i = 0; i < m; i++) {
            if (i == r) continue;
            double f = at(i, c);
            if (f == 0) continue;
            for (size_t j = 0; j <= cols; j++) at(i, j) -= f * at(r, j);
        }
        double f = cost[c];
        if (f != 0) {
            for (size_t j = 0; j <= cols; j++) cost[j] -= f * at(r, j);
        }
        basis[r] = c;
    }

    // Bland's rule; columns >= limit never enter.
    void optimize(size_t limit) {
        for (size_t iter = 0;; iter++) {
            if (iter > 1000000) throw std::runtime_error("solve_lp: iteration limit");
            size_t enter = limit;
            for (size_t j = 0; j < limit; j++) {
                if (cost[j] < -kTol) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return;
            size_t leave = m;
            double best = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < m; i++) {
                double a = at(i, enter);
                if (a <= kTol) continue;
                double ratio = rhs(i) / a;
                if (ratio < best - kTol || (ratio <= best + kTol && leave < m && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m) throw std::runtime_error("solve_lp: unbounded");
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_lp(const LinearProgram &lp) {
    size_t nv = lp.num_vars, m = lp.rows.size();
    size_t nslack = 0, nart = 0;
    for (const auto &row : lp.rows) {
        bool neg = row.rhs < 0;
        auto sense = row.sense;
        if (neg && sense == LinearProgram::Sense::kLe) sense = LinearProgram::Sense::kGe;
        else if (neg && sense == LinearProgram::Sense::kGe) sense = LinearProgram::Sense::kLe;
        if (sense != LinearProgram::Sense::kEq) nslack++;
        if (sense != LinearProgram::Sense::kLe) nart++;
    }
    Tableau tb;
    tb.m = m;
    tb.cols = nv + nslack + nart;
    tb.t.assign(m * (tb.cols + 1), 0.0);
    tb.basis.assign(m, 0);
    size_t slack = nv, art = nv + nslack;
    for (size_t i = 0; i < m; i++) {
        const auto &row = lp.rows[i];
        double sign = row.rhs < 0 ? -1.0 : 1.0;
        auto sense = row.sense;
        if (sign < 0 && sense == LinearProgram::Sense::kLe) sense = LinearProgram::Sense::kGe;
        else if (sign < 0 && sense == LinearProgram::Sense::kGe) sense = LinearProgram::Sense::kLe;
        for (const auto &[j, a] : row.terms) {
            if (j >= nv) throw std::invalid_argument("solve_lp: variable index out of range");
            tb.at(i, j) += sign * a;
        }
        tb.at(i, tb.cols) = sign * row.rhs;
        if (sense == LinearProgram::Sense::kLe) {
            tb.at(i, slack) = 1;
            tb.basis[i] = slack++;
        } else {
            if (sense == LinearProgram::Sense::kGe) tb.at(i, slack++) = -1;
            tb.at(i, art) = 1;
            tb.basis[i] = art++;
        }
    }

    // Phase 1: minimize the artificial sum.
    tb.cost.assign(tb.cols + 1, 0.0);
    for (size_t j = nv + nslack; j < tb.cols; j++) tb.cost[j] = 1;
    for (size_t i = 0; i < m; i++) {
        if (tb.basis[i] < nv + nslack) continue;
        for (size_t j = 0; j <= tb.cols; j++) tb.cost[j] -= tb.at(i, j);
    }
    tb.optimize(tb.cols);
    LpSolution sol;
    if (-tb.cost[tb.cols] > 1e-9) return sol;

    // Drive zero-level artificials out of the basis where possible.
    for (size_t i = 0; i < m; i++) {
        if (tb.basis[i] < nv + nslack) continue;
        for (size_t j = 0; j < nv + nslack; j++) {
            if (std::abs(tb.at(i, j)) > 1e-9) {
                tb.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2.
    tb.cost.assign(tb.cols + 1, 0.0);
    for (size_t j = 0; j < nv && j < lp.objective.size(); j++) tb.cost[j] = lp.objective[j];
    for (size_t i = 0; i < m; i++) {
        double c = tb.cost[tb.basis[i]];
        if (c == 0) continue;
        for (size_t j = 0; j <= tb.cols; j++) tb.cost[j] -= c * tb.at(i, j);
    }
    tb.optimize(nv + nslack);

    sol.feasible = true;
    sol.x.assign(nv, 0.0);
    for (size_t i = 0; i < m; i++) {
        if (tb.basis[i] < nv) sol.x[tb.basis[i]] = tb.rhs(i);
    }
    sol.value = 0;
    for (size_t j = 0; j < nv && j < lp.objective.size(); j++) sol.value += lp.objective[j] * sol.x[j];
    return sol;
}

}  // namespace pmdkit::detail
