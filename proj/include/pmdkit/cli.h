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

#ifndef PMDKIT_CLI_H
#define PMDKIT_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pmdkit/ptc.h"

namespace pmdkit {

constexpr const char *kToolkitVersion = "0.1.0";

enum class ReportFormat { kText, kCsv, kJson };

/// One bound comparison. `bound` is the expression that was checked, with numbers filled in.
struct ReportCheck {
    std::string name;
    bool pass = false;
    std::string measured;
    std::string bound;
};

/// Deterministic run report. Numbers are stored pre-formatted so every format prints the same digits.
struct Report {
    std::string command;
    uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::pair<std::string, std::string>> metrics;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<ReportCheck> checks;

    void metric(const std::string &name, const std::string &value) { metrics.emplace_back(name, value); }
    void metric(const std::string &name, double value);
    void check(const std::string &name, bool pass, const std::string &measured, const std::string &bound);
    bool all_pass() const;
    std::string render(ReportFormat format) const;
};

/// Shortest round-tripping decimal form, identical across runs.
std::string fmt_double(double v);

/// Text form of a PTC family: header "ptc n=<n> lambda=<lambda>", then "key <k>" and one generator per line.
std::string ptc_family_str(const PtcFamily &family);
PtcFamily parse_ptc_family(const std::string &text);

/// Entry point behind the `pmdkit` binary. Exit codes: 0 all checks pass, 1 a check failed, 2 usage,
/// parse or size-guard error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pmdkit

#endif
