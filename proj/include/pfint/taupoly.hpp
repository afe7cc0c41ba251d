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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "pfint/errors.hpp"
#include "pfint/scalar.hpp"

namespace pfint {

/**
 * Polynomial (or truncated formal power series) in tau with dense
 * coefficients; coefficient k multiplies tau^k. Exact polynomials keep
 * trailing zeros trimmed.
 */
template <Scalar T>
class TauPoly {
public:
    TauPoly() = default;
    explicit TauPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    TauPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static TauPoly constant(const T& v) { return TauPoly(std::vector<T>{v}); }
    static TauPoly monomial(const T& v, std::size_t power) {
        std::vector<T> c(power + 1, zero<T>());
        c[power] = v;
        return TauPoly(std::move(c));
    }

    /// Coefficient of tau^k; zero beyond the stored range.
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : zero<T>(); }
    void set_coeff(std::size_t k, const T& v) {
        if (k >= c_.size()) c_.resize(k + 1, zero<T>());
        c_[k] = v;
        trim();
    }

    /// Number of stored coefficients (degree + 1, 0 for the zero polynomial when exact).
    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coefficients() const { return c_; }

    /// Degree, or -1 for the zero polynomial.
    long degree() const {
        for (std::size_t k = c_.size(); k > 0; --k)
            if (!is_zero(c_[k - 1])) return static_cast<long>(k - 1);
        return -1;
    }

    TauPoly truncated(std::size_t max_degree) const {
        std::vector<T> c(c_.begin(), c_.begin() + std::min(c_.size(), max_degree + 1));
        return TauPoly(std::move(c));
    }

    T evaluate(const T& tau) const {
        T acc = zero<T>();
        for (std::size_t k = c_.size(); k > 0; --k) acc = T(acc * tau + c_[k - 1]);
        return acc;
    }

    TauPoly& operator+=(const TauPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero<T>());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    TauPoly& operator-=(const TauPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero<T>());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    TauPoly& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
    friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
    friend TauPoly operator*(TauPoly a, const T& s) { return a *= s; }
    friend TauPoly operator*(const T& s, TauPoly a) { return a *= s; }

    friend TauPoly operator*(const TauPoly& a, const TauPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return TauPoly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, zero<T>());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return TauPoly(std::move(c));
    }

    friend bool operator==(const TauPoly& a, const TauPoly& b) {
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t k = 0; k < n; ++k)
            if (a.coeff(k) != b.coeff(k)) return false;
        return true;
    }

private:
    void trim() {
        if constexpr (ScalarTraits<T>::exact) {
            while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
        }
    }

    std::vector<T> c_;
};

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const TauPoly<T>& p) {
    os << '[';
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? ", " : "") << format_scalar(p.coeff(k));
    return os << ']';
}

/// Coefficient-wise agreement up to the larger degree, using scalars_agree.
template <Scalar T>
bool polys_agree(const TauPoly<T>& a, const TauPoly<T>& b, const Tolerance& tol = {}) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
        if (!scalars_agree(a.coeff(k), b.coeff(k), tol)) return false;
    return true;
}

/**
 * exp(h) truncated at tau^max_degree for a series with h(0) = 0, from the
 * recurrence k f_k = sum_{j=1..k} j h_j f_{k-j}.
 */
template <Scalar T>
TauPoly<T> series_exp(const TauPoly<T>& h, std::size_t max_degree) {
    if (!is_zero(h.coeff(0))) throw PreconditionError("series_exp: constant term must vanish");
    std::vector<T> f(max_degree + 1, zero<T>());
    f[0] = one<T>();
    for (std::size_t k = 1; k <= max_degree; ++k) {
        T acc = zero<T>();
        for (std::size_t j = 1; j <= k; ++j)
            acc += ScalarTraits<T>::from_int(static_cast<std::int64_t>(j)) * h.coeff(j) * f[k - j];
        f[k] = T(acc / ScalarTraits<T>::from_int(static_cast<std::int64_t>(k)));
    }
    return TauPoly<T>(std::move(f));
}

/**
 * Formal square root with constant term +1, truncated at tau^max_degree:
 * s_k = (p_k - sum_{j=1..k-1} s_j s_{k-j}) / 2. Requires p(0) = 1.
 */
template <Scalar T>
TauPoly<T> series_sqrt(const TauPoly<T>& p, std::size_t max_degree) {
    if (p.coeff(0) != one<T>()) throw PreconditionError("series_sqrt: constant term must be 1");
    std::vector<T> s(max_degree + 1, zero<T>());
    s[0] = one<T>();
    const T two = ScalarTraits<T>::from_int(2);
    for (std::size_t k = 1; k <= max_degree; ++k) {
        T acc = p.coeff(k);
        for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = T(acc / two);
    }
    return TauPoly<T>(std::move(s));
}

}  // namespace pfint
