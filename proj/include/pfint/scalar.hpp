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
 * @brief Scalar fields used throughout pfint.
 *
 * Two fields are supported: exact rationals (GMP mpq_class, always
 * canonicalized) and double-precision complex numbers. Generic code talks to
 * them through ScalarTraits.
 */

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>

namespace pfint {

using Rational = mpq_class;
using Complex = std::complex<double>;

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";

    static Rational from_int(std::int64_t v) {
        return Rational(static_cast<long>(v));
    }
    static Rational from_ratio(std::int64_t p, std::int64_t q) {
        Rational r(static_cast<long>(p), static_cast<unsigned long>(q > 0 ? q : -q));
        if (q < 0) r = -r;
        r.canonicalize();
        return r;
    }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
    static std::string format(const Rational& v) { return v.get_str(); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr const char* name = "complex";

    static Complex from_int(std::int64_t v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_ratio(std::int64_t p, std::int64_t q) {
        return Complex(static_cast<double>(p) / static_cast<double>(q), 0.0);
    }
    static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
    static double magnitude(const Complex& v) { return std::abs(v); }
    static std::string format(const Complex& v);
};

/// Field scalar accepted by the generic algorithms.
template <typename T>
concept Scalar = requires(const T& a, const T& b) {
    { a + b };
    { a - b };
    { a * b };
    { a / b };
    { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
};

template <Scalar T>
T zero() {
    return ScalarTraits<T>::from_int(0);
}

template <Scalar T>
T one() {
    return ScalarTraits<T>::from_int(1);
}

template <Scalar T>
bool is_zero(const T& v) {
    return ScalarTraits<T>::is_zero(v);
}

template <Scalar T>
double magnitude(const T& v) {
    return ScalarTraits<T>::magnitude(v);
}

template <Scalar T>
std::string format_scalar(const T& v) {
    return ScalarTraits<T>::format(v);
}

/// Integer power by repeated squaring; exponent >= 0.
template <Scalar T>
T ipow(T base, unsigned exponent) {
    T result = one<T>();
    while (exponent != 0) {
        if (exponent & 1u) result = T(result * base);
        base = T(base * base);
        exponent >>= 1u;
    }
    return result;
}

template <Scalar T>
T factorial(std::size_t k) {
    T f = one<T>();
    for (std::size_t i = 2; i <= k; ++i) f *= ScalarTraits<T>::from_int(static_cast<std::int64_t>(i));
    return f;
}

/// Float comparison tolerances used for complex verification verdicts.
struct Tolerance {
    double relative = 1e-8;
    double absolute = 1e-10;
};

/**
 * Verdict equality: exact scalars compare exactly; complex values pass when
 * |a - b| <= max(absolute, relative * max(|a|, |b|)).
 */
template <Scalar T>
bool scalars_agree(const T& a, const T& b, const Tolerance& tol = {}) {
    if constexpr (ScalarTraits<T>::exact) {
        return a == b;
    } else {
        const double diff = magnitude<T>(T(a - b));
        const double scale = std::max(magnitude(a), magnitude(b));
        return diff <= std::max(tol.absolute, tol.relative * scale);
    }
}

/// |a - b| as a double, for reporting.
template <Scalar T>
double abs_diff(const T& a, const T& b) {
    return magnitude<T>(T(a - b));
}

}  // namespace pfint
