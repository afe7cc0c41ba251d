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
 * @brief Pfaffians, determinants and inverses over exact and complex scalars.
 *
 * pfaffian() uses Parlett-Reid skew elimination: at step k the pivot row is
 * chosen among rows k+1..N-1 of column k, swapped into place with a
 * simultaneous row+column swap (flipping the sign), and the trailing block is
 * updated by a rank-2 skew correction. pfaffian_oracle() sums over perfect
 * matchings and exists to check it.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "pfint/errors.hpp"
#include "pfint/matrix.hpp"

namespace pfint {

/// Largest dimension accepted by pfaffian_oracle (k <= 6 pairs).
inline constexpr std::size_t kOracleMaxDim = 12;

namespace detail {

// Picks a pivot row in [from, n) for column `col`: any nonzero entry for exact
// scalars (first found), the largest magnitude otherwise. Returns n if none.
template <Scalar T>
std::size_t choose_pivot(const Matrix<T>& a, std::size_t col, std::size_t from) {
    const std::size_t n = a.rows();
    std::size_t best = n;
    double best_mag = 0.0;
    for (std::size_t i = from; i < n; ++i) {
        if (is_zero(a(i, col))) continue;
        if constexpr (ScalarTraits<T>::exact) {
            return i;
        } else {
            const double m = magnitude(a(i, col));
            if (best == n || m > best_mag) {
                best = i;
                best_mag = m;
            }
        }
    }
    return best;
}

template <Scalar T>
void oracle_matchings(const SkewMatrix<T>& a, std::vector<bool>& used, T partial, int sign,
                      T& acc) {
    const std::size_t n = a.dim();
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
        acc += sign > 0 ? partial : T(-partial);
        return;
    }
    used[first] = true;
    // Partners of `first` among the free indices; the crossing parity equals
    // the number of free indices skipped over between them.
    int skipped = 0;
    for (std::size_t j = first + 1; j < n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        oracle_matchings(a, used, T(partial * a(first, j)), (skipped % 2 == 0) ? sign : -sign, acc);
        used[j] = false;
        ++skipped;
    }
    used[first] = false;
}

}  // namespace detail

/**
 * Pfaffian as the signed sum over perfect matchings. pf of the empty matrix
 * is 1, odd dimensions give 0. Throws SizeLimitError above kOracleMaxDim.
 */
template <Scalar T>
T pfaffian_oracle(const SkewMatrix<T>& a) {
    const std::size_t n = a.dim();
    if (n > kOracleMaxDim)
        throw SizeLimitError("pfaffian_oracle: dimension " + std::to_string(n) +
                             " exceeds the matching-enumeration limit of " +
                             std::to_string(kOracleMaxDim));
    if (n % 2 == 1) return zero<T>();
    std::vector<bool> used(n, false);
    T acc = zero<T>();
    detail::oracle_matchings(a, used, one<T>(), 1, acc);
    return acc;
}

namespace detail {

// Parlett-Reid elimination on a skew matrix that is consumed in place. The
// caller guarantees antisymmetry.
template <Scalar T>
T pfaffian_in_place(Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n == 0) return one<T>();
    if (n % 2 == 1) return zero<T>();

    T result = one<T>();
    std::vector<T> tau(n);

    for (std::size_t k = 0; k + 1 < n; k += 2) {
        const std::size_t kp = choose_pivot(a, k, k + 1);
        if (kp == n) return zero<T>();
        if (kp != k + 1) {
            a.swap_rows(k + 1, kp);
            a.swap_cols(k + 1, kp);
            result = T(-result);
        }

        const T pivot = a(k, k + 1);
        result *= pivot;

        // a(i, j) += tau_i * a(j, k+1) - tau_j * a(i, k+1), tau_i = a(k, i) / pivot
        for (std::size_t i = k + 2; i < n; ++i) tau[i] = T(a(k, i) / pivot);
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const T delta = T(tau[i] * a(j, k + 1) - tau[j] * a(i, k + 1));
                a(i, j) += delta;
                a(j, i) -= delta;
            }
        }
    }
    return result;
}

}  // namespace detail

/// Pfaffian by Parlett-Reid elimination with pivoting; exact for rationals.
template <Scalar T>
T pfaffian(const SkewMatrix<T>& skew) {
    Matrix<T> a = skew.matrix();
    return detail::pfaffian_in_place(a);
}

/**
 * Determinant by Bareiss fraction-free elimination with row pivoting.
 * det of the empty matrix is 1.
 */
template <Scalar T>
T determinant(const Matrix<T>& m) {
    if (!m.is_square()) throw PreconditionError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return one<T>();

    Matrix<T> a = m;
    T prev = one<T>();
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = detail::choose_pivot(a, k, k);
        if (p == n) return zero<T>();
        if (p != k) {
            a.swap_rows(p, k);
            sign = -sign;
        }
        const T pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = T((a(i, j) * pivot - a(i, k) * a(k, j)) / prev);
            a(i, k) = zero<T>();
        }
        prev = pivot;
    }
    return sign > 0 ? a(n - 1, n - 1) : T(-a(n - 1, n - 1));
}

/// Inverse by Gauss-Jordan elimination; throws SingularMatrixError.
template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw PreconditionError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = detail::choose_pivot(a, k, k);
        if (p == n)
            throw SingularMatrixError("inverse: matrix is singular (no pivot in column " +
                                      std::to_string(k) + ")");
        a.swap_rows(p, k);
        inv.swap_rows(p, k);
        const T scale = T(one<T>() / a(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= scale;
            inv(k, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(a(i, k))) continue;
            const T f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

/// Inverse of a skew matrix, which is again skew.
template <Scalar T>
SkewMatrix<T> inverse(const SkewMatrix<T>& a) {
    return SkewMatrix<T>(inverse(a.matrix()));
}

/// A^{-1 T}: transpose of the inverse, computed literally in that order.
template <Scalar T>
SkewMatrix<T> inverse_transpose(const SkewMatrix<T>& a) {
    return SkewMatrix<T>(inverse(a.matrix()).transpose());
}

/// pf(A B A^T) for general A and skew B; the product is skew by construction.
template <Scalar T>
SkewMatrix<T> congruence(const Matrix<T>& a, const SkewMatrix<T>& b) {
    return SkewMatrix<T>(a * b.matrix() * a.transpose());
}

}  // namespace pfint
