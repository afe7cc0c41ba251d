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
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pfint/scalar.hpp"

namespace pfint {

/// Dense row-major matrix over a scalar field.
template <Scalar T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, zero<T>()) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("Matrix: entry count " + std::to_string(data_.size()) +
                                        " does not match " + std::to_string(rows_) + "x" +
                                        std::to_string(cols_));
        }
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one<T>();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> entries() const { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& c) {
        for (auto& v : data_) v *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
    friend Matrix operator*(const T& c, Matrix a) { return a *= c; }
    friend Matrix operator-(Matrix a) { return a *= T(-one<T>()); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("Matrix product: inner dimensions " +
                                        std::to_string(a.cols_) + " and " +
                                        std::to_string(b.rows_) + " differ");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero_matrix() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& v) { return is_zero(v); });
    }

    double max_magnitude() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, magnitude(v));
        return m;
    }

    T trace() const {
        T t = zero<T>();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << format_scalar(m(i, j));
        os << ']';
    }
    return os << ']';
}

/// Skewness tolerance for complex inputs, relative to the largest entry.
inline constexpr double kSkewTolerance = 1e-12;

/**
 * Square antisymmetric matrix. Construction validates skewness: exact
 * scalars must be exactly skew; complex inputs within kSkewTolerance are
 * replaced by (A - A^T)/2, larger violations are rejected.
 */
template <Scalar T>
class SkewMatrix {
public:
    SkewMatrix() = default;

    explicit SkewMatrix(std::size_t n) : m_(n, n) {}

    explicit SkewMatrix(Matrix<T> m) : m_(std::move(m)) { validate(); }

    SkewMatrix(std::initializer_list<std::initializer_list<T>> rows)
        : SkewMatrix(Matrix<T>(rows)) {}

    /// Builds from strictly-upper-triangular values (i < j), mirrored with negation.
    static SkewMatrix from_upper(std::size_t n, const std::vector<T>& upper) {
        if (upper.size() != n * (n - (n ? 1 : 0)) / 2)
            throw std::invalid_argument("SkewMatrix::from_upper: wrong entry count");
        SkewMatrix s(n);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s.set(i, j, upper[k++]);
        return s;
    }

    std::size_t dim() const { return m_.rows(); }
    const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    /// Sets entry (i, j) and its mirror (j, i) = -value.
    void set(std::size_t i, std::size_t j, const T& value) {
        if (i == j) {
            if (!is_zero(value)) throw std::invalid_argument("SkewMatrix: nonzero diagonal");
            return;
        }
        m_(i, j) = value;
        m_(j, i) = T(-value);
    }

    const Matrix<T>& matrix() const { return m_; }

    SkewMatrix transpose() const { return SkewMatrix(Trusted{}, m_.transpose()); }

    friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) {
        return SkewMatrix(Trusted{}, a.m_ + b.m_);
    }
    friend SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b) {
        return SkewMatrix(Trusted{}, a.m_ - b.m_);
    }
    friend SkewMatrix operator*(const T& c, const SkewMatrix& a) {
        return SkewMatrix(Trusted{}, c * a.m_);
    }
    friend SkewMatrix operator-(const SkewMatrix& a) { return SkewMatrix(Trusted{}, -a.m_); }
    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.m_ == b.m_; }

private:
    struct Trusted {};
    SkewMatrix(Trusted, Matrix<T> m) : m_(std::move(m)) {}

    void validate() {
        if (!m_.is_square()) throw std::invalid_argument("SkewMatrix: matrix is not square");
        const std::size_t n = m_.rows();
        if constexpr (ScalarTraits<T>::exact) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (m_(i, j) != T(-m_(j, i)))
                        throw std::invalid_argument("SkewMatrix: entries (" + std::to_string(i) +
                                                    "," + std::to_string(j) +
                                                    ") violate antisymmetry");
        } else {
            const double bound = kSkewTolerance * m_.max_magnitude();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (magnitude<T>(T(m_(i, j) + m_(j, i))) > bound)
                        throw std::invalid_argument("SkewMatrix: entries (" + std::to_string(i) +
                                                    "," + std::to_string(j) +
                                                    ") violate antisymmetry beyond tolerance");
            const T half = ScalarTraits<T>::from_ratio(1, 2);
            for (std::size_t i = 0; i < n; ++i) {
                m_(i, i) = zero<T>();
                for (std::size_t j = i + 1; j < n; ++j) {
                    const T v = half * (m_(i, j) - m_(j, i));
                    m_(i, j) = v;
                    m_(j, i) = -v;
                }
            }
        }
    }

    Matrix<T> m_;
};

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const SkewMatrix<T>& m) {
    return os << m.matrix();
}

/**
 * Strictly increasing set of 1-based indices drawn from [N] = {1, ..., N}.
 */
class IndexSubset {
public:
    IndexSubset() = default;

    /// Throws if `indices` is not strictly increasing or leaves 1..universe.
    IndexSubset(std::vector<std::size_t> indices, std::size_t universe);

    /// The full set [n].
    static IndexSubset full(std::size_t n);

    /// Subset from a bitmask: bit k set means index k + 1 is present.
    static IndexSubset from_mask(std::uint64_t mask, std::size_t universe);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    std::size_t universe() const { return universe_; }
    std::span<const std::size_t> indices() const { return idx_; }
    std::size_t operator[](std::size_t k) const { return idx_[k]; }

    /// Sum of the 1-based elements.
    std::size_t element_sum() const { return std::accumulate(idx_.begin(), idx_.end(), std::size_t{0}); }

    /// (-1)^{element_sum()} as +1 / -1.
    int element_sum_sign() const { return element_sum() % 2 == 0 ? 1 : -1; }

    IndexSubset complement() const;

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

private:
    std::vector<std::size_t> idx_;
    std::size_t universe_ = 0;
};

std::ostream& operator<<(std::ostream& os, const IndexSubset& s);

/**
 * All subsets of [n] ordered by increasing size, lexicographic within a size.
 * Exhaustive enumeration is limited to n <= kMaxSubsetUniverse.
 */
inline constexpr std::size_t kMaxSubsetUniverse = 12;
std::vector<IndexSubset> all_subsets(std::size_t n);

/// Subsets of [n] of exactly `k` elements, lexicographic.
std::vector<IndexSubset> subsets_of_size(std::size_t n, std::size_t k);

/// T^I_J: rows `rows`, columns `cols`, kept in increasing index order.
template <Scalar T>
Matrix<T> submatrix(const Matrix<T>& t, const IndexSubset& rows, const IndexSubset& cols) {
    for (auto r : rows.indices())
        if (r < 1 || r > t.rows())
            throw std::out_of_range("submatrix: row index " + std::to_string(r) + " outside 1.." +
                                    std::to_string(t.rows()));
    for (auto c : cols.indices())
        if (c < 1 || c > t.cols())
            throw std::out_of_range("submatrix: column index " + std::to_string(c) +
                                    " outside 1.." + std::to_string(t.cols()));
    Matrix<T> s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = t(rows[i] - 1, cols[j] - 1);
    return s;
}

/// Principal submatrix A^I_I of a skew matrix, which is again skew.
template <Scalar T>
SkewMatrix<T> principal(const SkewMatrix<T>& a, const IndexSubset& rows) {
    return SkewMatrix<T>(submatrix(a.matrix(), rows, rows));
}

/// Submatrix keeping every row and the columns in `cols`.
template <Scalar T>
Matrix<T> column_submatrix(const Matrix<T>& t, const IndexSubset& cols) {
    return submatrix(t, IndexSubset::full(t.rows()), cols);
}

}  // namespace pfint
