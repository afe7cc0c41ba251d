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

// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
// Detail lines are indented below the verdict. Exit status is 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "pfint/measure.hpp"
#include "pfint/minorsum.hpp"
#include "pfint/pfaffian.hpp"
#include "pfint/random.hpp"
#include "pfint/symfun.hpp"
#include "pfint/theorem.hpp"

using namespace pfint;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (failures <= 5) notes.push_back("mismatch: " + what);
        }
    }
    void note(std::string s) { notes.push_back(std::move(s)); }
};

struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;
    std::function<void(Tally&)> body;
};

std::string num(std::size_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- AC1

void pfaffian_oracle_equivalence(Tally& t) {
    const std::size_t sizes[] = {2, 4, 6, 8, 10};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = sizes[seed % 5];
        Rng rng(1000 + seed);
        const auto a = random_skew<Rational>(rng, n, 5, 4);
        const Rational pf = pfaffian(a);
        t.expect(pf == pfaffian_oracle(a), "pf vs oracle, seed " + num(seed) + ", N=" + num(n));
        t.expect(pf * pf == determinant(a.matrix()), "pf^2 vs det, seed " + num(seed));
    }
    t.note("200 matrices, N in {2,4,6,8,10}, exact rational");
}

// ---------------------------------------------------------------- AC2

void symmetric_function_agreement(Tally& t) {
    constexpr std::size_t kMaxEll = 10;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(2000 + seed);
        std::vector<Rational> v;
        for (std::size_t j = 0; j < kMaxEll; ++j) v.push_back(random_scalar<Rational>(rng, 5, 6));
        const PowerSums<Rational> p(v);
        const auto newton = elementary_newton_all(kMaxEll, p);
        const auto series = generating_series_check(p, kMaxEll);
        for (std::size_t ell = 0; ell <= kMaxEll; ++ell) {
            const Rational partition_sum = elementary_from_powersums(ell, p);
            t.expect(partition_sum == newton[ell], "partition vs Newton, seed " + num(seed) + ", l=" + num(ell));
            t.expect(partition_sum == series.rhs.coeff(ell),
                     "partition vs exponential series, seed " + num(seed) + ", l=" + num(ell));
        }
    }
    t.note("100 power-sum vectors, l = 0..10, three evaluation paths");
}

// ---------------------------------------------------------------- AC3

void minor_summation(Tally& t) {
    const std::size_t sizes[] = {2, 4, 6, 8};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(3000 + seed);
        const std::size_t n = sizes[seed % 4];

        const std::size_t m = 2 * (seed % 3);  // M in {0, 2, 4}
        const std::size_t n1 = std::max<std::size_t>(n, 4);
        const auto a1 = random_matrix<Rational>(rng, m, n1, 5, 3);
        const auto b1 = random_skew<Rational>(rng, n1, 5, 3);
        const auto l1 = lemma1_sides(a1, b1);
        t.expect(l1.lhs == l1.rhs, "lemma1 seed " + num(seed));

        const auto a2 = random_invertible_skew<Rational>(rng, n, 5, 3);
        const auto subset = IndexSubset::from_mask(
            static_cast<std::uint64_t>(uniform_int(rng, 0, (std::int64_t{1} << n) - 1)), n);
        const auto l2 = lemma2_sides(a2, subset);
        t.expect(l2.lhs == l2.rhs, "lemma2 seed " + num(seed));

        const auto a3 = random_skew<Rational>(rng, n, 5, 3);
        const auto b3 = random_skew<Rational>(rng, n, 5, 3);
        const auto l3 = lemma3_sides(a3, b3);
        t.expect(l3.lhs == l3.rhs, "lemma3 seed " + num(seed));

        const auto ac = random_invertible_skew<Rational>(rng, n, 5, 3);
        const auto bc = random_skew<Rational>(rng, n, 5, 3);
        const auto c1 = corollary1_sides(ac, bc);
        t.expect(c1.lhs == c1.rhs, "corollary1 seed " + num(seed));
        const auto chain = corollary1_chain(ac, bc);
        t.expect(chain.direct == chain.lemma3_expansion && chain.direct == chain.lemma2_substituted &&
                     chain.direct == chain.reindexed,
                 "corollary1 chain seed " + num(seed));
    }
    t.note("100 instances each of lemma1 (M in {0,2,4}), lemma2, lemma3, corollary1 + chain, N <= 8");

    // Canary: with |I| summed over 0-based indices, Lemma 2 should break on
    // some subset of a fixed instance.
    const auto fixed = random_skew(6, 314, 5);
    std::size_t broken = 0;
    std::size_t contributing = 0;
    for (const auto& s : all_subsets(6)) {
        const auto zero_based = lemma2_sides(fixed, s, IndexBase::Zero);
        if (!is_zero(zero_based.rhs)) ++contributing;
        if (zero_based.lhs != zero_based.rhs) ++broken;
    }
    t.note("canary: 0-based |I| broke lemma2 on " + num(broken) + " of 64 subsets (" + num(contributing) +
           " with nonzero sides) of the fixed 6x6 instance");
    if (broken == 0)
        t.note("canary: no subset can break: for even #I the 0-based sum differs by #I (even), "
               "for odd #I both sides are 0");
    t.expect(broken > 0, "0-based |I| canary did not break lemma2");
}

// ---------------------------------------------------------------- AC4

void de_bruijn_formula(Tally& t) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(4000 + seed);
        const std::size_t ell = 1 + seed % 3;
        const std::size_t points = 1 + (seed / 3) % 4;
        const auto k = random_kernel<Rational>(rng, 2 * ell, points, 5, 3);
        const auto s = de_bruijn_sides(k, ell);
        t.expect(s.lhs == s.rhs, "de Bruijn seed " + num(seed) + ", l=" + num(ell) + ", points=" + num(points));
    }
    t.note("50 instances, l in {1,2,3}, points in 1..4");
}

// ---------------------------------------------------------------- AC5

void theorem1_exact(Tally& t) {
    const std::size_t sizes[] = {2, 4, 6};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(5000 + seed);
        const std::size_t n = sizes[seed % 3];
        const std::size_t points = 1 + (seed / 3) % 4;
        const auto k = random_kernel<Rational>(rng, n, points, 5, 3);
        for (const auto& row : theorem1_verify(k, 3)) {
            t.expect(row.lhs == row.rhs, "theorem1 seed " + num(seed) + ", l=" + num(row.ell));
            if (2 * row.ell > n) t.expect(is_zero(row.lhs), "sigma_l != 0 for 2l > n, seed " + num(seed));
        }
        // n-1 instance padded by a zero function and a zero row/column of mu
        const auto small = random_kernel<Rational>(rng, n - 1, points, 5, 3);
        const auto before = theorem1_verify(small, 3);
        const auto after = theorem1_verify(pad_degenerate(small), 3);
        for (std::size_t ell = 0; ell <= 3; ++ell)
            t.expect(before[ell].lhs == after[ell].lhs && before[ell].rhs == after[ell].rhs &&
                         after[ell].lhs == after[ell].rhs,
                     "padding invariance seed " + num(seed) + ", l=" + num(ell));
    }
    t.note("50 instances, n in {2,4,6}, points in 1..4, l = 0..3, plus padded n-1 instances");
}

// ---------------------------------------------------------------- AC6 / AC7

KernelInstance<Rational> theorem2_instance(std::uint64_t seed) {
    const std::size_t sizes[] = {2, 4, 6};
    Rng rng(6000 + seed);
    return random_kernel_invertible<Rational>(rng, sizes[seed % 3], 1 + (seed / 3) % 4, 5, 3);
}

void theorem2_exact(Tally& t) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto k = theorem2_instance(seed);
        const auto s = theorem2_sides(k);
        t.expect(s.lhs == s.rhs, "theorem2 seed " + num(seed));
        t.expect(theorem2_rhs_transposed(k) == s.rhs, "theorem2 -tau g vs +tau g^T, seed " + num(seed));
        const auto eq = remark13_equivalence(k);
        t.expect(eq.exp_trace == eq.sqrt_det && eq.sqrt_det == eq.pfaffian_side,
                 "three-way equivalence seed " + num(seed));
        t.expect(eq.pfaffian_side == s.rhs, "pfaffian side vs theorem2 rhs, seed " + num(seed));
    }
    t.note("50 instances with invertible mu, n in {2,4,6}, coefficient-wise exact");
}

void fredholm_identities(Tally& t) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto k = theorem2_instance(seed);
        const auto s = fredholm_det_identity(k);
        t.expect(s.lhs == s.rhs, "S^2 vs det(I + tau upsilon), seed " + num(seed));
        t.expect(is_perfect_square(s.rhs), "det(I + tau upsilon) not a square, seed " + num(seed));
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(7000 + seed);
        const auto kernel = random_matrix<Rational>(rng, 3, 3, 5, 3);
        std::vector<Rational> w;
        for (int i = 0; i < 3; ++i) w.push_back(random_scalar<Rational>(rng, 3, 4));
        const auto space = discrete_space<Rational>(std::move(w));
        const auto a = fredholm_scalar_particular_case(kernel, random_skew<Rational>(rng, 3, 5, 3), space);
        const auto b = fredholm_scalar_particular_case(kernel, random_skew<Rational>(rng, 3, 5, 3), space);
        t.expect(a.pfaffian_series == a.determinant_series, "scalar case eps1, seed " + num(seed));
        t.expect(b.pfaffian_series == b.determinant_series, "scalar case eps2, seed " + num(seed));
        t.expect(a.pfaffian_series == b.pfaffian_series, "eps independence, seed " + num(seed));
    }
    t.note("50 squared-identity instances, 50 three-point scalar kernels with two eps each");
}

// ---------------------------------------------------------------- AC8

void ginibre_plane_instance(Tally& t, Complex center, const char* label) {
    const double pi = std::numbers::pi;
    const auto space = shifted(gauss_hermite_plane(24), center);
    Complex mass(0.0, 0.0), second(0.0, 0.0);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const Complex z = std::get<Complex>(space.points[i]) - center;
        mass += space.weights[i];
        second += space.weights[i] * std::norm(z);
    }
    t.expect(std::abs(mass - pi) <= 1e-10 * pi, std::string(label) + " mass");
    t.expect(std::abs(second - pi) <= 1e-10 * pi, std::string(label) + " second moment");

    SkewMatrix<Complex> mu(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) mu.set(i, j, Complex(1.0, 0.0));
    const auto k = ginibre_kernel(4, mu, space);
    const Tolerance tol{1e-8, 1e-10};
    double worst = 0.0;
    for (const auto& row : theorem1_verify(k, 2, tol)) {
        if (row.ell == 0) continue;
        t.expect(row.pass, std::string(label) + " theorem1 l=" + num(row.ell));
        const double scale = std::max({std::abs(row.lhs), std::abs(row.rhs), tol.absolute / tol.relative});
        worst = std::max(worst, std::abs(row.lhs - row.rhs) / scale);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s l=%zu: lhs=(%.6g, %.6g) rhs=(%.6g, %.6g)", label, row.ell,
                      row.lhs.real(), row.lhs.imag(), row.rhs.real(), row.rhs.imag());
        t.note(buf);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: |mass - pi| = %.2e, |second - pi| = %.2e, max relative error %.2e", label,
                  std::abs(mass - pi), std::abs(second - pi), worst);
    t.note(buf);
}

void ginibre_plane(Tally& t) {
    ginibre_plane_instance(t, Complex(0.0, 0.0), "gaussian");
    // Off-center weight exp(-|z - c|^2) so that g and both sides are nonzero.
    ginibre_plane_instance(t, Complex(0.5, -0.3), "shifted");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "Pfaffian oracle equivalence", 10, pfaffian_oracle_equivalence},
        {"AC2", "symmetric-function triple agreement", 5, symmetric_function_agreement},
        {"AC3", "minor summation lemmas and corollary", 60, minor_summation},
        {"AC4", "de Bruijn formula", 30, de_bruijn_formula},
        {"AC5", "theorem 1 exact", 120, theorem1_exact},
        {"AC6", "theorem 2 exact and three-way equivalence", 120, theorem2_exact},
        {"AC7", "Fredholm identities", 30, fredholm_identities},
        {"AC8", "complex-plane Ginibre run", 60, ginibre_plane},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Tally tally;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(tally);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool pass = error.empty() && tally.failures == 0 && tally.checks > 0 && in_time;
        if (!pass) ++failed;
        std::printf("%s %s  %s  [%zu checks, %zu failed, %.2f s / %.0f s]\n", c.id, pass ? "PASS" : "FAIL",
                    c.title, tally.checks, tally.failures, seconds, c.budget_seconds);
        for (const auto& n : tally.notes) std::printf("    %s\n", n.c_str());
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (!in_time) std::printf("    over the time budget\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
