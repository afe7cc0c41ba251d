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
 * @brief Minor summation formulas for Pfaffians as two-sided computations.
 *
 * Every *_sides function returns (lhs, rhs) computed along independent
 * routes; callers decide equality (exact, or with a Tolerance for complex
 * scalars). Subsets I are 1-based and |I| denotes the sum of their elements.
 */

#include <cstddef>
#include <string>

#include "pfint/errors.hpp"
#include "pfint/matrix.hpp"
#include "pfint/pfaffian.hpp"

namespace pfint {

template <Scalar T>
struct ScalarPair {
    T lhs;
    T rhs;
};

/// Index convention for |I|; only One matches the identities.
enum class IndexBase { One, Zero };

namespace detail {

template <Scalar T>
T signed_term(int sign, const T& v) {
    return sign > 0 ? v : T(-v);
}

inline int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

inline std::size_t element_sum(const IndexSubset& s, IndexBase base) {
    return base == IndexBase::One ? s.element_sum() : s.element_sum() - s.size();
}

template <Scalar T>
void require_same_dim(const SkewMatrix<T>& a, const SkewMatrix<T>& b, const char* who) {
    if (a.dim() != b.dim())
        throw PreconditionError(std::string(who) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace detail

/**
 * sum_{I in [N], #I = M} pf[B^I_I] det[A with columns I]  versus  pf[A B A^T],
 * for an M x N matrix A (M <= N, M even) and N x N skew B.
 */
template <Scalar T>
ScalarPair<T> lemma1_sides(const Matrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.dim() != n)
        throw PreconditionError("lemma1_sides: B is " + std::to_string(b.dim()) + "x" +
                                std::to_string(b.dim()) + " but A has " + std::to_string(n) +
                                " columns");
    if (m % 2 == 1) throw PreconditionError("lemma1_sides: row count M must be even");
    if (m > n) throw PreconditionError("lemma1_sides: requires M <= N");

    T lhs = zero<T>();
    for (const auto& subset : subsets_of_size(n, m))
        lhs += pfaffian(principal(b, subset)) * determinant(column_submatrix(a, subset));
    return {lhs, pfaffian(congruence(a, b))};
}

/**
 * pf[A] pf[(A^{-1})^I_I]  versus  (-1)^{|I|} pf[A^{I'}_{I'}] with I' the
 * complement. `base` exists only to demonstrate the convention.
 */
template <Scalar T>
ScalarPair<T> lemma2_sides(const SkewMatrix<T>& a, const IndexSubset& subset,
                           IndexBase base = IndexBase::One) {
    if (subset.universe() != a.dim())
        throw PreconditionError("lemma2_sides: subset universe does not match dimension");
    if (a.dim() % 2 == 1) throw SingularMatrixError("lemma2_sides: odd dimension, A is singular");
    const T pf_a = pfaffian(a);
    if (is_zero(pf_a)) throw SingularMatrixError("lemma2_sides: A is singular (pf A = 0)");
    const SkewMatrix<T> a_inv = inverse(a);
    const T lhs = T(pf_a * pfaffian(principal(a_inv, subset)));
    const T rhs = detail::signed_term(detail::parity_sign(detail::element_sum(subset, base)),
                                      pfaffian(principal(a, subset.complement())));
    return {lhs, rhs};
}

/**
 * pf[A + B]  versus  sum_r sum_{#I = 2r} (-1)^{|I| - r} pf[A^I_I] pf[B^{I'}_{I'}].
 * With include_odd the odd-size subsets are also visited (they contribute 0).
 */
template <Scalar T>
ScalarPair<T> lemma3_sides(const SkewMatrix<T>& a, const SkewMatrix<T>& b,
                           bool include_odd = false) {
    detail::require_same_dim(a, b, "lemma3_sides");
    const std::size_t n = a.dim();
    T rhs = zero<T>();
    for (std::size_t k = 0; k <= n; ++k) {
        if (k % 2 == 1 && !include_odd) continue;
        for (const auto& subset : subsets_of_size(n, k)) {
            const int sign = detail::parity_sign(subset.element_sum() + k / 2);
            rhs += detail::signed_term(sign, T(pfaffian(principal(a, subset)) *
                                               pfaffian(principal(b, subset.complement()))));
        }
    }
    return {pfaffian(a + b), rhs};
}

/**
 * sum_I pf[A^I_I] pf[B^I_I] over all even subsets (including empty and [N])
 * versus pf[A] pf[A^{-1 T} + B].
 */
template <Scalar T>
ScalarPair<T> corollary1_sides(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    detail::require_same_dim(a, b, "corollary1_sides");
    const std::size_t n = a.dim();
    if (n % 2 == 1) throw SingularMatrixError("corollary1_sides: odd dimension, A is singular");
    const T pf_a = pfaffian(a);
    if (is_zero(pf_a)) throw SingularMatrixError("corollary1_sides: A is singular (pf A = 0)");
    T lhs = zero<T>();
    for (std::size_t k = 0; k <= n; k += 2)
        for (const auto& subset : subsets_of_size(n, k))
            lhs += pfaffian(principal(a, subset)) * pfaffian(principal(b, subset));
    return {lhs, T(pf_a * pfaffian(inverse_transpose(a) + b))};
}

/// Intermediate values of the derivation of corollary1 from lemmas 3 and 2.
template <Scalar T>
struct CorollaryChain {
    T direct;              // pf[A^{-1 T} + B]
    T lemma3_expansion;    // sum (-1)^{|I|} pf[(A^{-1})^I_I] pf[B^{I'}_{I'}]
    T lemma2_substituted;  // (1/pf A) sum pf[A^{I'}_{I'}] pf[B^{I'}_{I'}]
    T reindexed;           // (1/pf A) sum pf[A^I_I] pf[B^I_I]
};

/// Re-executes the derivation step by step; every field should equal `direct`.
template <Scalar T>
CorollaryChain<T> corollary1_chain(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    detail::require_same_dim(a, b, "corollary1_chain");
    const std::size_t n = a.dim();
    const T pf_a = pfaffian(a);
    if (n % 2 == 1 || is_zero(pf_a))
        throw SingularMatrixError("corollary1_chain: A is singular");
    const SkewMatrix<T> a_inv = inverse(a);

    CorollaryChain<T> out{pfaffian(inverse_transpose(a) + b), zero<T>(), zero<T>(), zero<T>()};
    for (std::size_t k = 0; k <= n; k += 2) {
        for (const auto& subset : subsets_of_size(n, k)) {
            const IndexSubset comp = subset.complement();
            const T pf_b_comp = pfaffian(principal(b, comp));
            out.lemma3_expansion += detail::signed_term(
                detail::parity_sign(subset.element_sum()),
                T(pfaffian(principal(a_inv, subset)) * pf_b_comp));
            out.lemma2_substituted += pfaffian(principal(a, comp)) * pf_b_comp;
            out.reindexed += pfaffian(principal(a, subset)) * pfaffian(principal(b, subset));
        }
    }
    out.lemma2_substituted /= pf_a;
    out.reindexed /= pf_a;
    return out;
}

}  // namespace pfint
