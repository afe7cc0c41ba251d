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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "pfint/io.hpp"
#include "pfint/pfaffian.hpp"
#include "pfint/random.hpp"

using namespace pfint;

namespace {

Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

// Cofactor expansion along the first row; independent of the elimination code.
Rational laplace_det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return q(1);
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix<Rational> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const Rational term = m(0, j) * laplace_det(minor);
        acc += (j % 2 == 0) ? term : Rational(-term);
    }
    return acc;
}

Matrix<Rational> permutation_matrix(const std::vector<std::size_t>& perm) {
    Matrix<Rational> p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1;
    return p;
}

}  // namespace

TEST_CASE("oracle: 2x2 gives the upper entry") {
    const auto a = SkewMatrix<Rational>::from_upper(2, {q(7, 3)});
    CHECK(pfaffian_oracle(a) == q(7, 3));
}

TEST_CASE("empty matrix has pf 1 and det 1") {
    const SkewMatrix<Rational> a(0);
    CHECK(pfaffian_oracle(a) == 1);
    CHECK(pfaffian(a) == 1);
    CHECK(determinant(a.matrix()) == 1);
}

TEST_CASE("oracle: generic 4x4 matches the three-matching formula") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_skew<Rational>(rng, 4, 9, 4);
        const Rational expected =
            a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
        CHECK(pfaffian_oracle(a) == expected);
        CHECK(pfaffian(a) == expected);
    }
}

TEST_CASE("oracle refuses dimensions beyond its guard") {
    const SkewMatrix<Rational> a(kOracleMaxDim + 2);
    CHECK_THROWS_AS(pfaffian_oracle(a), SizeLimitError);
}

TEST_CASE("pfaffian: small exact cases") {
    CHECK(pfaffian(SkewMatrix<Rational>::from_upper(2, {q(3, 2)})) == q(3, 2));
    Rng rng(3);
    for (int t = 0; t < 5; ++t) CHECK(pfaffian(random_skew<Rational>(rng, 3, 5, 3)) == 0);
    CHECK(pfaffian(random_skew<Rational>(rng, 7, 5, 3)) == 0);
}

TEST_CASE("pfaffian: seeded 8x8 agrees with the oracle") {
    const auto a = random_skew(8, 2024, 6);
    CHECK(pfaffian(a) == pfaffian_oracle(a));
}

TEST_CASE("pfaffian: zero leading column forces a pivot swap") {
    // First row is zero except the last entry, so elimination must pivot.
    auto a = SkewMatrix<Rational>::from_upper(4, {0, 0, 5, 2, 3, 0});
    CHECK(pfaffian(a) == pfaffian_oracle(a));
    CHECK(pfaffian(a) == q(5 * 2 - 0 * 3 + 0));
}

TEST_CASE("pfaffian: all-ones and singular 4x4") {
    const auto a = SkewMatrix<Rational>::from_upper(4, {1, 1, 1, 1, 1, 1});
    CHECK(pfaffian(a) == 1);
    CHECK(pfaffian_oracle(a) == 1);
    const auto z = SkewMatrix<Rational>::from_upper(4, {1, 2, 0, 2, 0, 0});
    CHECK(pfaffian(z) == 0);
    CHECK(pfaffian_oracle(z) == 0);
}

TEST_CASE("pf^2 = det for every even size up to 12") {
    for (std::size_t n = 2; n <= 12; n += 2) {
        Rng rng(100 + n);
        for (int t = 0; t < 4; ++t) {
            const auto a = random_skew<Rational>(rng, n, 4, 3);
            const Rational pf = pfaffian(a);
            CHECK(pf * pf == determinant(a.matrix()));
        }
    }
}

TEST_CASE("pf = oracle for every size up to 10") {
    for (std::size_t n = 0; n <= 10; ++n) {
        Rng rng(200 + n);
        for (int t = 0; t < 3; ++t) {
            const auto a = random_skew<Rational>(rng, n, 5, 2);
            CHECK(pfaffian(a) == pfaffian_oracle(a));
        }
    }
}

TEST_CASE("pf(P A P^T) = det(P) pf(A)") {
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 6;
        const auto a = random_skew<Rational>(rng, n, 5, 2);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto p = permutation_matrix(perm);
        const auto b = congruence(p, a);
        CHECK(pfaffian(b) == determinant(p) * pfaffian(a));
    }
}

TEST_CASE("pf(cA) = c^(N/2) pf(A)") {
    Rng rng(6);
    const auto a = random_skew<Rational>(rng, 6, 5, 3);
    const Rational c = q(-5, 7);
    CHECK(pfaffian(c * a) == ipow(c, 3) * pfaffian(a));
}

TEST_CASE("complex pfaffian agrees with the oracle and det") {
    Rng rng(7);
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        const auto a = random_skew<Complex>(rng, n, 2);
        const Complex pf = pfaffian(a);
        CHECK(scalars_agree(pf, pfaffian_oracle(a)));
        CHECK(scalars_agree(pf * pf, determinant(a.matrix())));
    }
}

TEST_CASE("determinant: Bareiss matches cofactor expansion") {
    Rng rng(8);
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto m = random_matrix<Rational>(rng, n, n, 4, 3);
        CHECK(determinant(m) == laplace_det(m));
    }
    Matrix<Rational> singular{{1, 2}, {2, 4}};
    CHECK(determinant(singular) == 0);
    Matrix<Rational> needs_pivot{{0, 1}, {1, 0}};
    CHECK(determinant(needs_pivot) == -1);
}

TEST_CASE("inverse: exact round trip and singular error") {
    Rng rng(9);
    const auto a = random_invertible_skew<Rational>(rng, 6, 4, 2);
    const auto inv = inverse(a);
    CHECK(a.matrix() * inv.matrix() == Matrix<Rational>::identity(6));
    CHECK(inverse_transpose(a).matrix() == inv.matrix().transpose());
    CHECK(inverse_transpose(a) == -inv);
    Matrix<Rational> singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(inverse(singular), SingularMatrixError);
}

TEST_CASE("submatrix examples") {
    Matrix<Rational> t{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(submatrix(t, IndexSubset::full(3), IndexSubset::full(3)) == t);
    Matrix<Rational> t2{{1, 2}, {3, 4}};
    const auto one_entry = submatrix(t2, IndexSubset({1}, 2), IndexSubset({2}, 2));
    CHECK(one_entry.rows() == 1);
    CHECK(one_entry(0, 0) == 2);

    const auto a = random_skew(4, 1, 5);
    const auto sub = principal(a, IndexSubset({2, 4}, 4));
    CHECK(sub(0, 0) == 0);
    CHECK(sub(0, 1) == a(1, 3));
    CHECK(sub(1, 0) == -a(1, 3));

    CHECK_THROWS_AS(submatrix(t2, IndexSubset({3}, 3), IndexSubset({1}, 2)), std::out_of_range);
}

TEST_CASE("random_skew determinism and shape") {
    CHECK(random_skew(0, 1, 5).dim() == 0);
    CHECK(random_skew(6, 42, 5) == random_skew(6, 42, 5));
    CHECK_FALSE(random_skew(6, 42, 5) == random_skew(6, 43, 5));
    const auto a = random_skew(4, 1, 5);
    const Rational pf = pfaffian(a);
    CHECK(pf * pf == determinant(a.matrix()));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(a(i, j) == -a(j, i));
            CHECK(abs(a(i, j)) <= 5);
        }
}

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    const Rational r = parse_rational(nlohmann::json("6/-8"), "x");
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 4);
    const Rational s = Rational(q(1, 6) + q(1, 3));
    CHECK(s.get_num() == 1);
    CHECK(s.get_den() == 2);
}

TEST_CASE("skew validation: exact and floating") {
    CHECK_THROWS_AS(SkewMatrix<Rational>(Matrix<Rational>{{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SkewMatrix<Rational>(Matrix<Rational>{{1, 1}, {-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SkewMatrix<Rational>(Matrix<Rational>(2, 3)), std::invalid_argument);

    // A tiny violation is symmetrized away.
    Matrix<Complex> near{{Complex(1e-14, 0), Complex(2.0, 0)},
                         {Complex(-2.0 + 1e-13, 0), Complex(0, 0)}};
    const SkewMatrix<Complex> s(near);
    CHECK(s(0, 0) == Complex(0, 0));
    CHECK(s(0, 1) == -s(1, 0));
    CHECK(std::abs(s(0, 1) - Complex(2.0, 0)) < 1e-12);

    Matrix<Complex> far{{Complex(0, 0), Complex(2.0, 0)}, {Complex(-1.9, 0), Complex(0, 0)}};
    CHECK_THROWS_AS(SkewMatrix<Complex>{far}, std::invalid_argument);
}

TEST_CASE("IndexSubset invariants and enumeration") {
    CHECK_THROWS(IndexSubset({2, 1}, 3));
    CHECK_THROWS(IndexSubset({1, 1}, 3));
    CHECK_THROWS(IndexSubset({0}, 3));
    CHECK_THROWS(IndexSubset({4}, 3));

    const IndexSubset s({1, 3, 4}, 5);
    CHECK(s.element_sum() == 8);
    CHECK(s.element_sum_sign() == 1);
    CHECK(s.complement() == IndexSubset({2, 5}, 5));
    CHECK(IndexSubset::from_mask(0b1101, 5) == s);

    const auto all = all_subsets(3);
    REQUIRE(all.size() == 8);
    const std::vector<std::vector<std::size_t>> expected{{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (std::size_t k = 0; k < all.size(); ++k)
        CHECK(std::vector<std::size_t>(all[k].indices().begin(), all[k].indices().end()) == expected[k]);
    CHECK(subsets_of_size(6, 2).size() == 15);
    CHECK(all_subsets(kMaxSubsetUniverse).size() == 4096);
    CHECK_THROWS_AS(all_subsets(kMaxSubsetUniverse + 1), SizeLimitError);
}
