/*
 * Copyright 2026 The pfint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pfint/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace pfint {

void Report::add(std::vector<std::string> cells, bool pass) {
    if (cells.size() != columns.size())
        throw std::logic_error("Report::add: row has " + std::to_string(cells.size()) +
                               " cells for " + std::to_string(columns.size()) + " columns");
    rows.push_back({std::move(cells), pass});
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.pass; }));
}

void write_tsv(std::ostream& os, const Report& report) {
    os << '#';
    for (std::size_t j = 0; j < report.columns.size(); ++j) os << (j ? "\t" : "") << report.columns[j];
    os << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t j = 0; j < row.cells.size(); ++j) os << (j ? "\t" : "") << row.cells[j];
        os << '\n';
    }
}

void write_json(std::ostream& os, const Report& report) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t j = 0; j < row.cells.size(); ++j) obj[report.columns[j]] = row.cells[j];
        out.push_back(std::move(obj));
    }
    os << out.dump(2) << '\n';
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

std::string format_diff(double diff) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", diff);
    return buf;
}

}  // namespace pfint
