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

/**
 * @brief Batch verification suites behind the pfint command line.
 *
 * Each suite produces a Report; run() never writes files itself so that the
 * suites can be exercised in-process. Exit code 0 means every row passed,
 * 1 means at least one failed, 2 means invalid configuration or input.
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pfint/io.hpp"
#include "pfint/report.hpp"
#include "pfint/scalar.hpp"

namespace pfint {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands understood by run().
const std::vector<std::string>& suite_names();

struct RunConfig {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 10;
    std::size_t n = 4;
    std::size_t points = 3;
    std::size_t lmax = 2;
    std::size_t degree = 8;
    std::size_t nodes = 24;
    std::int64_t range = 3;
    std::string matrix_path;
    std::string measure_path;
    std::string output_path;
    ScalarMode scalar = ScalarMode::Rational;
    Tolerance tolerance;
    Complex center{0.0, 0.0};
    bool json = false;

    /// Throws PreconditionError naming the offending field.
    void validate() const;
};

struct RunResult {
    int exit_code = kExitPass;
    Report report;
    std::string summary;
};

/**
 * Executes the configured suite. Failing randomized instances are dumped to
 * `diagnostics` in full. Configuration and input errors propagate as
 * exceptions (PreconditionError, ParseError, ...).
 */
RunResult run(const RunConfig& config, std::ostream& diagnostics);

}  // namespace pfint
