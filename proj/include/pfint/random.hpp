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

// Seeded instance generators. Every generator takes its engine or seed
// explicitly; nothing here touches global state.

#include <cstdint>
#include <random>

#include "pfint/matrix.hpp"
#include "pfint/pfaffian.hpp"

namespace pfint {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/**
 * Random scalar with "small" entries: for rationals p/q with |p| <= range and
 * q in 1..denominator_max; for complex values both parts uniform in
 * [-range, range].
 */
template <Scalar T>
T random_scalar(Rng& rng, std::int64_t range, std::int64_t denominator_max = 1) {
    if constexpr (ScalarTraits<T>::exact) {
        const auto p = uniform_int(rng, -range, range);
        const auto q = uniform_int(rng, 1, std::max<std::int64_t>(1, denominator_max));
        return ScalarTraits<T>::from_ratio(p, q);
    } else {
        std::uniform_real_distribution<double> d(-static_cast<double>(range),
                                                 static_cast<double>(range));
        const double re = d(rng);
        const double im = d(rng);
        return T(re, im);
    }
}

template <Scalar T>
Matrix<T> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t range,
                        std::int64_t denominator_max = 1) {
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar<T>(rng, range, denominator_max);
    return m;
}

template <Scalar T>
SkewMatrix<T> random_skew(Rng& rng, std::size_t dim, std::int64_t range,
                          std::int64_t denominator_max = 1) {
    SkewMatrix<T> s(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            s.set(i, j, random_scalar<T>(rng, range, denominator_max));
    return s;
}

/**
 * Deterministic skew matrix over exact rationals: strictly-upper entries are
 * integers uniform in [-entry_range, entry_range], lower triangle mirrored.
 */
inline SkewMatrix<Rational> random_skew(std::size_t dim, std::uint64_t seed,
                                        std::int64_t entry_range) {
    Rng rng(seed);
    return random_skew<Rational>(rng, dim, entry_range);
}

/// Redraws until pf != 0 (even dim only).
template <Scalar T>
SkewMatrix<T> random_invertible_skew(Rng& rng, std::size_t dim, std::int64_t range,
                                     std::int64_t denominator_max = 1) {
    if (dim % 2 == 1) throw PreconditionError("random_invertible_skew: odd dimension");
    for (;;) {
        auto s = random_skew<T>(rng, dim, range, denominator_max);
        if (!is_zero(pfaffian(s))) return s;
    }
}

}  // namespace pfint
