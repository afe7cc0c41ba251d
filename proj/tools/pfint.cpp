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

// pfint: batch verification driver.
//
//   pfint verify-theorem1 --n 4 --points 3 --lmax 2 --trials 50 --seed 7
//   pfint pf --matrix m.json
//
// Without --out the report goes to stdout and the summary line to stderr;
// with --out the report is written to the file and the summary to stdout.

#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "pfint/cli.hpp"

namespace {

struct Flags {
    pfint::RunConfig config;
    std::uint64_t seed = 0;
    std::string scalar = "rational";
    std::vector<double> center;
};

void add_flags(CLI::App& sub, Flags& f) {
    auto& c = f.config;
    sub.add_option("--seed", f.seed, "base seed; trial t uses seed + t");
    sub.add_option("--trials", c.trials, "number of random instances")->capture_default_str();
    sub.add_option("--n", c.n, "matrix dimension / number of functions")->capture_default_str();
    sub.add_option("--points", c.points, "points in the random measure space")->capture_default_str();
    sub.add_option("--lmax", c.lmax, "largest l checked")->capture_default_str();
    sub.add_option("--degree", c.degree, "largest l for symfun")->capture_default_str();
    sub.add_option("--nodes", c.nodes, "Gauss-Hermite nodes per axis")->capture_default_str();
    sub.add_option("--range", c.range, "random entries are bounded by this")->capture_default_str();
    sub.add_option("--matrix", c.matrix_path, "matrix JSON file")->check(CLI::ExistingFile);
    sub.add_option("--measure", c.measure_path, "measure JSON file")->check(CLI::ExistingFile);
    sub.add_option("--out", c.output_path, "write the report here");
    sub.add_option("--scalar", f.scalar, "rational or complex")
        ->check(CLI::IsMember({"rational", "complex"}))
        ->capture_default_str();
    sub.add_option("--rtol", c.tolerance.relative, "relative tolerance (complex mode)")
        ->capture_default_str();
    sub.add_option("--atol", c.tolerance.absolute, "absolute tolerance floor (complex mode)")
        ->capture_default_str();
    sub.add_option("--center", f.center, "shift of the Gaussian weight: RE IM")->expected(2);
    sub.add_flag("--json", c.json, "emit the report as JSON instead of TSV");
}

const std::map<std::string, std::string> kDescriptions{
    {"pf", "Pfaffian of --matrix, or random matrices checked against the oracle and det"},
    {"symfun", "e_l from power sums: partition sum, Newton recursion, exponential series"},
    {"verify-lemmas", "minor summation lemmas and corollary on random instances"},
    {"de-bruijn", "de Bruijn integral formula on random discrete spaces"},
    {"verify-theorem1", "sigma_l / l! against e_l of half traces of upsilon"},
    {"verify-theorem2", "tau-polynomial identity and the three equivalent forms"},
    {"fredholm", "S(tau)^2 = det(I + tau upsilon) and the scalar-kernel case"},
    {"ginibre-demo", "complex-plane run on the Gauss-Hermite grid"},
};

void write_report(std::ostream& os, const pfint::RunConfig& c, const pfint::Report& r) {
    if (c.json)
        pfint::write_json(os, r);
    else
        pfint::write_tsv(os, r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pfaffian integration identities: exact and numerical verification suites"};
    app.require_subcommand(1);
    Flags flags;
    for (const auto& name : pfint::suite_names())
        add_flags(*app.add_subcommand(name, kDescriptions.at(name)), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? pfint::kExitPass : pfint::kExitUsage;
    }

    pfint::RunConfig& config = flags.config;
    config.command = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--seed") > 0) config.seed = flags.seed;
    if (!flags.center.empty()) config.center = {flags.center[0], flags.center[1]};

    try {
        config.scalar = pfint::parse_scalar_mode(flags.scalar);
        const pfint::RunResult result = pfint::run(config, std::cerr);
        const bool value_only = config.command == "pf" && !config.matrix_path.empty();
        if (!config.output_path.empty()) {
            std::ofstream out(config.output_path);
            if (!out) throw std::runtime_error(config.output_path + ": cannot open for writing");
            write_report(out, config, result.report);
            std::cout << result.summary << '\n';
        } else if (value_only) {
            std::cout << result.summary << '\n';
        } else {
            write_report(std::cout, config, result.report);
            std::cerr << result.summary << '\n';
        }
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "pfint " << config.command << ": error: " << e.what() << '\n';
        return pfint::kExitUsage;
    }
}
