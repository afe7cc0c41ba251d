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

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace pfint {

/// Tabular verification report; one row per check, rows kept in trial order.
struct Report {
    std::vector<std::string> columns;
    struct Row {
        std::vector<std::string> cells;
        bool pass = true;
    };
    std::vector<Row> rows;

    void add(std::vector<std::string> cells, bool pass);
    std::size_t failures() const;
};

/// Header line prefixed with '#', then tab-separated rows.
void write_tsv(std::ostream& os, const Report& report);

/// JSON array of objects keyed by column name, mirroring the TSV rows.
void write_json(std::ostream& os, const Report& report);

std::string verdict(bool pass);

/// %.3e of a nonnegative difference.
std::string format_diff(double diff);

}  // namespace pfint
