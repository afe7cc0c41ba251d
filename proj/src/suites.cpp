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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>

#include "pfint/cli.hpp"
#include "pfint/measure.hpp"
#include "pfint/minorsum.hpp"
#include "pfint/pfaffian.hpp"
#include "pfint/random.hpp"
#include "pfint/symfun.hpp"
#include "pfint/theorem.hpp"

namespace pfint {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "pf",         "symfun",          "verify-lemmas", "de-bruijn", "verify-theorem1",
        "verify-theorem2", "fredholm", "ginibre-demo"};
    return names;
}

void RunConfig::validate() const {
    if (std::find(suite_names().begin(), suite_names().end(), command) == suite_names().end())
        throw PreconditionError("unknown subcommand \"" + command + "\"");
    auto positive = [](std::size_t v, const char* name) {
        if (v == 0) throw PreconditionError(std::string("--") + name + " must be positive");
    };
    positive(trials, "trials");
    positive(n, "n");
    positive(points, "points");
    positive(lmax, "lmax");
    positive(degree, "degree");
    positive(nodes, "nodes");
    if (range <= 0) throw PreconditionError("--range must be positive");
    if (tolerance.relative < 0 || tolerance.absolute < 0)
        throw PreconditionError("tolerances must be nonnegative");
}

namespace {

template <Scalar T>
std::string fmt(const T& v) {
    return format_scalar(v);
}

std::string num(std::size_t v) { return std::to_string(v); }

std::uint64_t require_seed(const RunConfig& c) {
    if (!c.seed)
        throw PreconditionError(c.command + ": --seed is required for randomized suites");
    return *c.seed;
}

// Denominators drawn for rational instances; keeps the arithmetic genuinely rational.
constexpr std::int64_t kDenominatorMax = 3;

template <Scalar T>
void dump_kernel(std::ostream& os, std::uint64_t seed, const KernelInstance<T>& k) {
    os << "failing instance (seed " << seed << ")\n"
       << "  mu     = " << k.mu << "\n"
       << "  plus   = " << k.basis.plus << "\n"
       << "  minus  = " << k.basis.minus << "\n"
       << "  weights= [";
    for (std::size_t i = 0; i < k.space.weights.size(); ++i)
        os << (i ? ", " : "") << fmt(k.space.weights[i]);
    os << "]\n";
}

// ---------------------------------------------------------------- pf

template <Scalar T>
void pf_rows(Report& r, const std::string& seed, const SkewMatrix<T>& a, const Tolerance& tol,
             std::ostream& diag) {
    const T pf = pfaffian(a);
    bool ok = true;
    if (a.dim() <= kOracleMaxDim) {
        const T oracle = pfaffian_oracle(a);
        const bool pass = scalars_agree(pf, oracle, tol);
        ok = ok && pass;
        r.add({"pf-vs-oracle", seed, num(a.dim()), fmt(pf), fmt(oracle),
               format_diff(abs_diff(pf, oracle)), verdict(pass)},
              pass);
    }
    const T sq = T(pf * pf);
    const T det = determinant(a.matrix());
    const bool pass = scalars_agree(sq, det, tol);
    ok = ok && pass;
    r.add({"pf2-vs-det", seed, num(a.dim()), fmt(sq), fmt(det), format_diff(abs_diff(sq, det)),
           verdict(pass)},
          pass);
    if (!ok) diag << "failing matrix (seed " << seed << "): " << a << '\n';
}

template <Scalar T>
RunResult run_pf_random(const RunConfig& c, std::ostream& diag) {
    const std::uint64_t seed = require_seed(c);
    RunResult out;
    out.report.columns = {"check", "seed", "n", "lhs", "rhs", "abs_diff", "verdict"};
    for (std::size_t t = 0; t < c.trials; ++t) {
        Rng rng(seed + t);
        pf_rows(out.report, num(seed + t), random_skew<T>(rng, c.n, c.range), c.tolerance, diag);
    }
    return out;
}

RunResult run_pf(const RunConfig& c, std::ostream& diag) {
    if (c.matrix_path.empty()) {
        return c.scalar == ScalarMode::Rational ? run_pf_random<Rational>(c, diag)
                                                : run_pf_random<Complex>(c, diag);
    }
    const AnyMatrix parsed = parse_matrix(read_json_file(c.matrix_path));
    return std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m(0, 0))>;
            const SkewMatrix<T> a(m);
            RunResult out;
            out.report.columns = {"check", "seed", "n", "lhs", "rhs", "abs_diff", "verdict"};
            pf_rows(out.report, "-", a, c.tolerance, diag);
            out.summary = fmt(pfaffian(a));
            return out;
        },
        parsed);
}

// ---------------------------------------------------------------- symfun

template <Scalar T>
RunResult run_symfun(const RunConfig& c, std::ostream& diag) {
    const std::uint64_t seed = require_seed(c);
    RunResult out;
    out.report.columns = {"check", "seed", "ell", "lhs", "rhs", "abs_diff", "verdict"};
    for (std::size_t t = 0; t < c.trials; ++t) {
        Rng rng(seed + t);
        std::vector<T> values;
        for (std::size_t j = 0; j < c.degree; ++j)
            values.push_back(random_scalar<T>(rng, c.range, kDenominatorMax));
        const PowerSums<T> p(values);
        const auto series = generating_series_check(p, c.degree);
        const auto newton = elementary_newton_all(c.degree, p);
        bool ok = true;
        for (std::size_t ell = 0; ell <= c.degree; ++ell) {
            const T partition_sum = series.lhs.coeff(ell);
            const bool p1 = scalars_agree(partition_sum, newton[ell], c.tolerance);
            out.report.add({"partition-vs-newton", num(seed + t), num(ell), fmt(partition_sum),
                            fmt(newton[ell]), format_diff(abs_diff(partition_sum, newton[ell])),
                            verdict(p1)},
                           p1);
            const T coeff = series.rhs.coeff(ell);
            const bool p2 = scalars_agree(partition_sum, coeff, c.tolerance);
            out.report.add({"partition-vs-series", num(seed + t), num(ell), fmt(partition_sum),
                            fmt(coeff), format_diff(abs_diff(partition_sum, coeff)), verdict(p2)},
                           p2);
            ok = ok && p1 && p2;
        }
        if (!ok) {
            diag << "failing power sums (seed " << seed + t << "): [";
            for (std::size_t j = 0; j < values.size(); ++j) diag << (j ? ", " : "") << fmt(values[j]);
            diag << "]\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------- verify-lemmas

template <Scalar T>
RunResult run_lemmas(const RunConfig& c, std::ostream& diag) {
    const std::uint64_t seed = require_seed(c);
    if (c.n % 2 == 1)
        throw PreconditionError("verify-lemmas: --n must be even (the minor-sum identities need "
                                "an invertible skew matrix)");
    RunResult out;
    out.report.columns = {"lemma", "seed", "verdict", "lhs", "rhs"};
    const std::size_t n = c.n;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const std::uint64_t s = seed + t;
        Rng rng(s);
        auto emit = [&](const char* id, const T& lhs, const T& rhs, auto&& dump) {
            const bool pass = scalars_agree(lhs, rhs, c.tolerance);
            out.report.add({id, num(s), verdict(pass), fmt(lhs), fmt(rhs)}, pass);
            if (!pass) {
                diag << id << " failing instance (seed " << s << ")\n";
                dump();
            }
        };

        {
            const std::size_t m = 2 * static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n / 2)));
            const auto a = random_matrix<T>(rng, m, n, c.range, kDenominatorMax);
            const auto b = random_skew<T>(rng, n, c.range, kDenominatorMax);
            const auto sides = lemma1_sides(a, b);
            emit("lemma1", sides.lhs, sides.rhs, [&] { diag << "  A = " << a << "\n  B = " << b << '\n'; });
        }
        {
            const auto a = random_invertible_skew<T>(rng, n, c.range, kDenominatorMax);
            const auto mask = static_cast<std::uint64_t>(
                uniform_int(rng, 0, static_cast<std::int64_t>((std::uint64_t{1} << n) - 1)));
            const auto subset = IndexSubset::from_mask(mask, n);
            const auto sides = lemma2_sides(a, subset);
            emit("lemma2", sides.lhs, sides.rhs, [&] { diag << "  A = " << a << "\n  I = " << subset << '\n'; });
        }
        {
            const auto a = random_skew<T>(rng, n, c.range, kDenominatorMax);
            const auto b = random_skew<T>(rng, n, c.range, kDenominatorMax);
            const auto sides = lemma3_sides(a, b);
            emit("lemma3", sides.lhs, sides.rhs, [&] { diag << "  A = " << a << "\n  B = " << b << '\n'; });
        }
        {
            const auto a = random_invertible_skew<T>(rng, n, c.range, kDenominatorMax);
            const auto b = random_skew<T>(rng, n, c.range, kDenominatorMax);
            const auto sides = corollary1_sides(a, b);
            emit("corollary1", sides.lhs, sides.rhs, [&] { diag << "  A = " << a << "\n  B = " << b << '\n'; });
            // Each intermediate step must reproduce the direct side; report the first that does not.
            const auto chain = corollary1_chain(a, b);
            T step = chain.reindexed;
            for (const T* v : {&chain.lemma3_expansion, &chain.lemma2_substituted, &chain.reindexed})
                if (!scalars_agree(chain.direct, *v, c.tolerance)) {
                    step = *v;
                    break;
                }
            emit("corollary1-chain", chain.direct, step,
                 [&] { diag << "  A = " << a << "\n  B = " << b << '\n'; });
        }
    }
    return out;
}

// ---------------------------------------------------------------- de-bruijn

template <Scalar T>
RunResult run_de_bruijn(const RunConfig& c, std::ostream& diag) {
    const std::uint64_t seed = require_seed(c);
    RunResult out;
    out.report.columns = {"check", "seed", "n", "points", "ell", "lhs", "rhs", "abs_diff", "verdict"};
    for (std::size_t t = 0; t < c.trials; ++t) {
        for (std::size_t ell = 1; ell <= c.lmax; ++ell) {
            const std::uint64_t s = seed + t;
            Rng rng(s * 31 + ell);
            const KernelInstance<T> k = random_kernel<T>(rng, 2 * ell, c.points, c.range, kDenominatorMax);
            const auto sides = de_bruijn_sides(k, ell);
            const bool pass = scalars_agree(sides.lhs, sides.rhs, c.tolerance);
            out.report.add({"de-bruijn", num(s), num(2 * ell), num(c.points), num(ell), fmt(sides.lhs),
                            fmt(sides.rhs), format_diff(abs_diff(sides.lhs, sides.rhs)), verdict(pass)},
                           pass);
            if (!pass) dump_kernel(diag, s, k);
        }
    }
    return out;
}

// ---------------------------------------------------------------- theorems

const std::vector<std::string> kTheoremColumns{"theorem", "n", "points", "index",
                                               "lhs",     "rhs", "abs_diff", "verdict"};

template <Scalar T>
bool add_theorem_row(Report& r, const std::string& id, const KernelInstance<T>& k, std::size_t index,
                     const T& lhs, const T& rhs, const Tolerance& tol) {
    const bool pass = scalars_agree(lhs, rhs, tol);
    r.add({id, num(k.n()), num(k.points()), num(index), fmt(lhs), fmt(rhs),
           format_diff(abs_diff(lhs, rhs)), verdict(pass)},
          pass);
    return pass;
}

template <Scalar T>
bool add_poly_rows(Report& r, const std::string& id, const KernelInstance<T>& k, const TauPoly<T>& lhs,
                   const TauPoly<T>& rhs, std::size_t max_degree, const Tolerance& tol) {
    bool ok = true;
    for (std::size_t d = 0; d <= max_degree; ++d)
        ok = add_theorem_row(r, id, k, d, lhs.coeff(d), rhs.coeff(d), tol) && ok;
    return ok;
}

template <Scalar T>
RunResult run_theorem1(const RunConfig& c, std::ostream& diag) {
    const std::uint64_t seed = require_seed(c);
    RunResult out;
    out.report.columns = kTheoremColumns;
    for (std::size_t t = 0; t < c.trials; ++t) {
        Rng rng(seed + t);
        const KernelInstance<T> k = random_kernel<T>(rng, c.n, c.points, c.range, kDenominatorMax);
        bool ok = true;
        for (const auto& row : theorem1_verify(k, c.lmax, c.tolerance))
            ok = add_theorem_row(out.report, "theorem1", k, row.ell, row.lhs, row.rhs, c.tolerance) && ok;
        if (!ok) dump_kernel(diag, seed + t, k);
    }
    return out;
}

template <Scalar T>
RunResult run_theorem2(const RunConfig& c, std::ostream& diag) {
    const std::uint64_t seed = require_seed(c);
    if (c.n % 2 == 1) throw PreconditionError("verify-theorem2: --n must be even (mu invertible)");
    RunResult out;
    out.report.columns = kTheoremColumns;
    const std::size_t half = c.n / 2;
    for (std::size_t t = 0; t < c.trials; ++t) {
        Rng rng(seed + t);
        const KernelInstance<T> k =
            random_kernel_invertible<T>(rng, c.n, c.points, c.range, kDenominatorMax);
        const auto sides = theorem2_sides(k);
        bool ok = add_poly_rows(out.report, "theorem2", k, sides.lhs, sides.rhs, half, c.tolerance);
        ok = add_poly_rows(out.report, "theorem2-transposed", k, sides.rhs, theorem2_rhs_transposed(k),
                           half, c.tolerance) && ok;
        const auto eq = remark13_equivalence(k, c.tolerance);
        ok = add_poly_rows(out.report, "equivalence-exp-vs-sqrtdet", k, eq.exp_trace, eq.sqrt_det, half,
                           c.tolerance) && ok;
        ok = add_poly_rows(out.report, "equivalence-sqrtdet-vs-pf", k, eq.sqrt_det, eq.pfaffian_side, half,
                           c.tolerance) && ok;
        if (!ok) dump_kernel(diag, seed + t, k);
    }
    return out;
}

template <Scalar T>
RunResult run_fredholm(const RunConfig& c, std::ostream& diag) {
    const std::uint64_t seed = require_seed(c);
    RunResult out;
    out.report.columns = kTheoremColumns;
    for (std::size_t t = 0; t < c.trials; ++t) {
        Rng rng(seed + t);
        const KernelInstance<T> k = random_kernel<T>(rng, c.n, c.points, c.range, kDenominatorMax);
        const auto sides = fredholm_det_identity(k);
        bool ok = add_poly_rows(out.report, "fredholm-det", k, sides.lhs, sides.rhs, c.n, c.tolerance);
        if (!ok) dump_kernel(diag, seed + t, k);

        const Matrix<T> kernel = random_matrix<T>(rng, c.points, c.points, c.range, kDenominatorMax);
        const SkewMatrix<T> eps1 = random_skew<T>(rng, c.points, c.range, kDenominatorMax);
        const SkewMatrix<T> eps2 = random_skew<T>(rng, c.points, c.range, kDenominatorMax);
        const auto& space = k.space;
        const auto a = fredholm_scalar_particular_case(kernel, eps1, space);
        const auto b = fredholm_scalar_particular_case(kernel, eps2, space);
        bool ok2 = add_theorem_row(out.report, "fredholm-scalar-eps1", k, 0, a.pfaffian_series,
                                   a.determinant_series, c.tolerance);
        ok2 = add_theorem_row(out.report, "fredholm-scalar-eps2", k, 0, b.pfaffian_series,
                              b.determinant_series, c.tolerance) && ok2;
        ok2 = add_theorem_row(out.report, "fredholm-scalar-eps-independence", k, 0, a.pfaffian_series,
                              b.pfaffian_series, c.tolerance) && ok2;
        if (!ok2) {
            diag << "failing scalar kernel (seed " << seed + t << ")\n  K = " << kernel
                 << "\n  eps1 = " << eps1 << "\n  eps2 = " << eps2 << '\n';
            dump_kernel(diag, seed + t, k);
        }
    }
    return out;
}

// ---------------------------------------------------------------- ginibre-demo

/// Strictly-upper entries all equal to one; pf = 1 for every even n.
SkewMatrix<Complex> all_ones_skew(std::size_t n) {
    SkewMatrix<Complex> mu(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) mu.set(i, j, Complex(1.0, 0.0));
    return mu;
}

SkewMatrix<Complex> to_complex(const AnyMatrix& m) {
    return std::visit(
        [](const auto& x) {
            Matrix<Complex> out(x.rows(), x.cols());
            for (std::size_t i = 0; i < x.rows(); ++i)
                for (std::size_t j = 0; j < x.cols(); ++j) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(x(i, j))>, Rational>)
                        out(i, j) = Complex(x(i, j).get_d(), 0.0);
                    else
                        out(i, j) = x(i, j);
                }
            return SkewMatrix<Complex>(std::move(out));
        },
        m);
}

// |a - b| / max(|a|, |b|, absolute / relative): passes iff <= relative.
double floored_relative_error(Complex a, Complex b, const Tolerance& tol) {
    const double floor = tol.relative > 0 ? tol.absolute / tol.relative : 1.0;
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

RunResult run_ginibre(const RunConfig& c, std::ostream& diag) {
    RunResult out;
    out.report.columns = kTheoremColumns;
    const SkewMatrix<Complex> mu =
        c.matrix_path.empty() ? all_ones_skew(c.n) : to_complex(parse_matrix(read_json_file(c.matrix_path)));
    if (mu.dim() != c.n)
        throw PreconditionError("ginibre-demo: mu from " + c.matrix_path + " is " +
                                std::to_string(mu.dim()) + "x" + std::to_string(mu.dim()) +
                                " but --n is " + std::to_string(c.n));

    MeasureSpace<Complex> space;
    double max_err = 0.0;
    const Tolerance moment_tol{1e-10, 0.0};
    if (c.measure_path.empty()) {
        space = shifted(gauss_hermite_plane(c.nodes), c.center);
        Complex mass(0.0, 0.0);
        Complex second(0.0, 0.0);
        for (std::size_t i = 0; i < space.size(); ++i) {
            const Complex z = std::get<Complex>(space.points[i]) - c.center;
            mass += space.weights[i];
            second += space.weights[i] * std::norm(z);
        }
        const Complex pi(std::numbers::pi, 0.0);
        const bool p1 = scalars_agree(mass, pi, moment_tol);
        const bool p2 = scalars_agree(second, pi, moment_tol);
        out.report.add({"moment-mass", "-", num(space.size()), "0", fmt(mass), fmt(pi),
                        format_diff(std::abs(mass - pi)), verdict(p1)},
                       p1);
        out.report.add({"moment-second", "-", num(space.size()), "2", fmt(second), fmt(pi),
                        format_diff(std::abs(second - pi)), verdict(p2)},
                       p2);
    } else {
        space = parse_measure<Complex>(read_json_file(c.measure_path));
    }

    const KernelInstance<Complex> k = ginibre_kernel(c.n, mu, space);
    bool ok = true;
    for (const auto& row : theorem1_verify(k, c.lmax, c.tolerance)) {
        ok = add_theorem_row(out.report, "theorem1-plane", k, row.ell, row.lhs, row.rhs, c.tolerance) && ok;
        max_err = std::max(max_err, floored_relative_error(row.lhs, row.rhs, c.tolerance));
    }
    if (!ok) diag << "ginibre-demo: theorem1 mismatch, mu = " << mu << '\n';

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", max_err);
    out.summary = std::string("max relative error ") + buf;
    return out;
}

template <template <typename> class Suite>
RunResult dispatch(const RunConfig& c, std::ostream& diag) {
    return c.scalar == ScalarMode::Rational ? Suite<Rational>::run(c, diag)
                                            : Suite<Complex>::run(c, diag);
}

#define PFINT_SUITE(Name, Fn)                                                         \
    template <typename T>                                                             \
    struct Name {                                                                     \
        static RunResult run(const RunConfig& c, std::ostream& d) { return Fn<T>(c, d); } \
    };

PFINT_SUITE(SymfunSuite, run_symfun)
PFINT_SUITE(LemmaSuite, run_lemmas)
PFINT_SUITE(DeBruijnSuite, run_de_bruijn)
PFINT_SUITE(Theorem1Suite, run_theorem1)
PFINT_SUITE(Theorem2Suite, run_theorem2)
PFINT_SUITE(FredholmSuite, run_fredholm)

#undef PFINT_SUITE

}  // namespace

RunResult run(const RunConfig& config, std::ostream& diagnostics) {
    config.validate();
    static const std::map<std::string, std::function<RunResult(const RunConfig&, std::ostream&)>> table{
        {"pf", run_pf},
        {"symfun", dispatch<SymfunSuite>},
        {"verify-lemmas", dispatch<LemmaSuite>},
        {"de-bruijn", dispatch<DeBruijnSuite>},
        {"verify-theorem1", dispatch<Theorem1Suite>},
        {"verify-theorem2", dispatch<Theorem2Suite>},
        {"fredholm", dispatch<FredholmSuite>},
        {"ginibre-demo", run_ginibre},
    };
    RunResult result = table.at(config.command)(config, diagnostics);
    const std::size_t failures = result.report.failures();
    result.exit_code = failures == 0 ? kExitPass : kExitFail;
    std::string line = config.command + ": " + std::to_string(result.report.rows.size()) + " rows, " +
                       std::to_string(failures) + " failed";
    if (!result.summary.empty()) line += "; " + result.summary;
    result.summary = config.command == "pf" && !config.matrix_path.empty() ? result.summary : line;
    return result;
}

}  // namespace pfint
