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
 * @brief Finite measure spaces, function-vector tables and the moment matrix.
 *
 * A measure is always a finite list of weighted points: discrete atoms for
 * exact work, or quadrature nodes whose weights already include the density,
 * so that sum_i w_i f(x_i) stands in for the integral of f.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pfint/errors.hpp"
#include "pfint/matrix.hpp"
#include "pfint/pfaffian.hpp"
#include "pfint/random.hpp"

namespace pfint {

/// Opaque atom identifier.
struct Atom {
    std::size_t id = 0;
    friend bool operator==(const Atom&, const Atom&) = default;
};

using PointLabel = std::variant<Atom, double, Complex>;

template <Scalar T>
struct MeasureSpace {
    std::vector<PointLabel> points;
    std::vector<T> weights;

    std::size_t size() const { return points.size(); }

    void validate() const {
        if (points.size() != weights.size())
            throw PreconditionError("MeasureSpace: " + std::to_string(points.size()) +
                                    " points but " + std::to_string(weights.size()) + " weights");
        if constexpr (!ScalarTraits<T>::exact) {
            for (std::size_t i = 0; i < weights.size(); ++i)
                if (!std::isfinite(weights[i].real()) || !std::isfinite(weights[i].imag()))
                    throw PreconditionError("MeasureSpace: weight " + std::to_string(i) +
                                            " is not finite");
        }
    }
};

/// `count` atoms labelled 0..count-1 with the given weights.
template <Scalar T>
MeasureSpace<T> discrete_space(std::vector<T> weights) {
    MeasureSpace<T> m;
    for (std::size_t i = 0; i < weights.size(); ++i) m.points.emplace_back(Atom{i});
    m.weights = std::move(weights);
    return m;
}

/// phi+_j(x_i) and phi-_j(x_i), one row per point, one column per function.
template <Scalar T>
struct BasisTable {
    Matrix<T> plus;
    Matrix<T> minus;

    std::size_t points() const { return plus.rows(); }
    std::size_t functions() const { return plus.cols(); }

    void validate() const {
        if (plus.rows() != minus.rows() || plus.cols() != minus.cols())
            throw PreconditionError("BasisTable: plus and minus tables differ in shape");
    }
};

template <Scalar T>
struct KernelInstance {
    SkewMatrix<T> mu;
    BasisTable<T> basis;
    MeasureSpace<T> space;

    std::size_t n() const { return mu.dim(); }
    std::size_t points() const { return space.size(); }

    void validate() const {
        space.validate();
        basis.validate();
        if (basis.functions() != mu.dim())
            throw PreconditionError("KernelInstance: basis has " +
                                    std::to_string(basis.functions()) +
                                    " functions but mu is " + std::to_string(mu.dim()) + "x" +
                                    std::to_string(mu.dim()));
        if (basis.points() != space.size())
            throw PreconditionError("KernelInstance: basis has " + std::to_string(basis.points()) +
                                    " rows but the measure has " + std::to_string(space.size()) +
                                    " points");
    }
};

/// Maximum number of terms visited by any brute-force tuple sum.
inline constexpr std::uint64_t kWorkGuard = 10'000'000;

namespace detail {

/// points^ell, throwing WorkGuardError when it exceeds kWorkGuard.
std::uint64_t guarded_tuple_count(std::size_t points, std::size_t ell, const char* who,
                                  const char* advice);

/// Visits all ordered ell-tuples of {0..points-1} in lexicographic order.
template <typename Fn>
void for_each_tuple(std::size_t points, std::size_t ell, Fn&& fn) {
    std::vector<std::size_t> t(ell, 0);
    if (ell > 0 && points == 0) return;
    for (;;) {
        fn(std::span<const std::size_t>(t));
        std::size_t pos = ell;
        while (pos > 0) {
            if (++t[pos - 1] < points) break;
            t[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return;
    }
}

}  // namespace detail

/**
 * g = sum_i w_i (phi-(x_i)^T phi+(x_i) - phi+(x_i)^T phi-(x_i)), i.e.
 * g_jk = sum_i w_i (phi-_j phi+_k - phi+_j phi-_k)(x_i).
 */
template <Scalar T>
SkewMatrix<T> moment_matrix_g(const BasisTable<T>& basis, const MeasureSpace<T>& space) {
    basis.validate();
    if (basis.points() != space.size())
        throw PreconditionError("moment_matrix_g: basis rows do not match measure points");
    const std::size_t n = basis.functions();
    Matrix<T> g(n, n);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const T& w = space.weights[i];
        const auto plus = basis.plus.row(i);
        const auto minus = basis.minus.row(i);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                g(j, k) += w * (minus[j] * plus[k] - plus[j] * minus[k]);
    }
    return SkewMatrix<T>(std::move(g));
}

template <Scalar T>
SkewMatrix<T> moment_matrix_g(const KernelInstance<T>& k) {
    k.validate();
    return moment_matrix_g(k.basis, k.space);
}

/**
 * Two sides of de Bruijn's formula for 2*ell functions:
 *   lhs = sum over ordered ell-tuples (prod w) det D,  rhs = ell! pf[g^T],
 * where D is 2ell x 2ell with row j = function index and columns
 * (2i, 2i+1) = (phi+_j(x_i), phi-_j(x_i)). mu is not used.
 */
template <Scalar T>
struct DeBruijnSides {
    T lhs;
    T rhs;
};

template <Scalar T>
DeBruijnSides<T> de_bruijn_sides(const BasisTable<T>& basis, const MeasureSpace<T>& space,
                                 std::size_t ell) {
    basis.validate();
    space.validate();
    if (basis.functions() != 2 * ell)
        throw PreconditionError("de_bruijn_sides: basis has " + std::to_string(basis.functions()) +
                                " functions, expected 2*ell = " + std::to_string(2 * ell));
    if (basis.points() != space.size())
        throw PreconditionError("de_bruijn_sides: basis rows do not match measure points");
    detail::guarded_tuple_count(space.size(), ell, "de_bruijn_sides", "reduce ell or points");

    const std::size_t dim = 2 * ell;
    T lhs = zero<T>();
    Matrix<T> d(dim, dim);
    detail::for_each_tuple(space.size(), ell, [&](std::span<const std::size_t> tuple) {
        T weight = one<T>();
        for (std::size_t i = 0; i < ell; ++i) {
            const std::size_t x = tuple[i];
            weight *= space.weights[x];
            for (std::size_t j = 0; j < dim; ++j) {
                d(j, 2 * i) = basis.plus(x, j);
                d(j, 2 * i + 1) = basis.minus(x, j);
            }
        }
        if (!is_zero(weight)) lhs += weight * determinant(d);
    });
    const T rhs = T(factorial<T>(ell) *
                    pfaffian(moment_matrix_g(basis, space).transpose()));
    return {lhs, rhs};
}

template <Scalar T>
DeBruijnSides<T> de_bruijn_sides(const KernelInstance<T>& k, std::size_t ell) {
    return de_bruijn_sides(k.basis, k.space, ell);
}

/**
 * Tensor Gauss-Hermite grid on the complex plane: z = x + iy with weights
 * w_x w_y, so that sum w f(z) approximates the integral of exp(-|z|^2) f(z)
 * over dx dy. Exact for polynomials of degree < 2*nodes_per_axis per axis.
 */
MeasureSpace<Complex> gauss_hermite_plane(std::size_t nodes_per_axis);

/// Translates every point by `center`; the weight becomes exp(-|z - center|^2).
MeasureSpace<Complex> shifted(const MeasureSpace<Complex>& space, Complex center);

/// Coefficients of q(z) = sum_k c[k] z^k.
using PolynomialCoefficients = std::vector<Complex>;

/// Monic monomials q_j(z) = z^j for j < n.
std::vector<PolynomialCoefficients> monic_monomials(std::size_t n);

Complex evaluate_polynomial(const PolynomialCoefficients& q, Complex z);

/**
 * Maps the complex-plane setting onto a KernelInstance: phi+_j(z) = q_j(z),
 * phi-_j(z) = q_j(conj z), evaluated at the conjugated point. q_j must have
 * order exactly j; the default is z^j.
 */
KernelInstance<Complex> ginibre_kernel(std::size_t n, const SkewMatrix<Complex>& mu,
                                       const MeasureSpace<Complex>& space,
                                       const std::vector<PolynomialCoefficients>& polys = {});

/// Random exact/complex instance: weights, tables and mu with small entries.
template <Scalar T>
KernelInstance<T> random_kernel(Rng& rng, std::size_t n, std::size_t points, std::int64_t range,
                                std::int64_t denominator_max = 1) {
    KernelInstance<T> k;
    k.mu = random_skew<T>(rng, n, range, denominator_max);
    k.basis.plus = random_matrix<T>(rng, points, n, range, denominator_max);
    k.basis.minus = random_matrix<T>(rng, points, n, range, denominator_max);
    std::vector<T> w;
    for (std::size_t i = 0; i < points; ++i) w.push_back(random_scalar<T>(rng, range, denominator_max));
    k.space = discrete_space<T>(std::move(w));
    return k;
}

}  // namespace pfint
