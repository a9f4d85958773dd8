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

#ifndef PMDKIT_SRC_JSON_UTIL_H
#define PMDKIT_SRC_JSON_UTIL_H

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pmdkit/densesim.h"

namespace pmdkit::detail {

inline nlohmann::json matrix_to_json(const CMat &k) {
    nlohmann::json rows = nlohmann::json::array();
    for (int64_t a = 0; a < k.rows(); a++) {
        nlohmann::json row = nlohmann::json::array();
        for (int64_t b = 0; b < k.cols(); b++) row.push_back({k(a, b).real(), k(a, b).imag()});
        rows.push_back(row);
    }
    return rows;
}

inline CMat matrix_from_json(const nlohmann::json &rows, const std::string &what) {
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument(what + ": expected a nonempty matrix");
    CMat k(rows.size(), rows[0].size());
    for (size_t a = 0; a < rows.size(); a++) {
        if (!rows[a].is_array() || rows[a].size() != static_cast<size_t>(k.cols())) {
            throw std::invalid_argument(what + ": row " + std::to_string(a) + " has the wrong length");
        }
        for (size_t b = 0; b < rows[a].size(); b++) {
            const auto &e = rows[a][b];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw std::invalid_argument(what + ": entries must be [re, im] pairs");
            }
            k(a, b) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return k;
}

inline nlohmann::json parse_json(const std::string &text, const std::string &what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

}  // namespace pmdkit::detail

#endif
