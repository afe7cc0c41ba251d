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
 * @brief The Pfaffian integration theorem, both sides.
 *
 * Integration side: sigma_l is the sum over ordered l-tuples of points
 * (x_1, ..., x_l), weighted by w(x_1)...w(x_l), of the Pfaffian of the
 * 2l x 2l matrix with rows/columns ordered x_1+, x_1-, x_2+, x_2-, ... and
 * 2x2 block (i, j) equal to
 *
 *     [ Phi++(x_i, x_j)  Phi+-(x_i, x_j) ]     Phi^{ab}(x, y) = phi^a(x) mu phi^b(y)^T.
 *     [ Phi-+(x_i, x_j)  Phi--(x_i, x_j) ]
 *
 * Trace side: with g the moment matrix and upsilon = mu g,
 *
 *     sigma_l / l! = e_l(tr(upsilon)/2, ..., tr(upsilon^l)/2),
 *     sum_l tau^l sigma_l / l! = pf(mu) pf(mu^{-1 T} - tau g) = sqrt(det(I + tau upsilon)).
 *
 * On a finite space every series here is a polynomial in tau.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "pfint/errors.hpp"
#include "pfint/matrix.hpp"
#include "pfint/measure.hpp"
#include "pfint/minorsum.hpp"
#include "pfint/pfaffian.hpp"
#include "pfint/symfun.hpp"
#include "pfint/taupoly.hpp"

namespace pfint {

template <Scalar T>
struct TauPolyPair {
    TauPoly<T> lhs;
    TauPoly<T> rhs;
};

/**
 * All pairwise kernel values: the (2P x 2P) skew matrix whose entry
 * (2a+s, 2b+t) is Phi^{st}(x_a, x_b), s, t in {+, -} (0 = +, 1 = -).
 */
template <Scalar T>
Matrix<T> kernel_gram(const KernelInstance<T>& k) {
    k.validate();
    const std::size_t p = k.points();
    const std::size_t n = k.n();
    Matrix<T> stacked(2 * p, n);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t j = 0; j < n; ++j) {
            stacked(2 * a, j) = k.basis.plus(a, j);
            stacked(2 * a + 1, j) = k.basis.minus(a, j);
        }
    Matrix<T> gram = stacked * k.mu.matrix() * stacked.transpose();
    if constexpr (!ScalarTraits<T>::exact) {
        // Rounding leaves gram only nearly skew; elimination needs it exact.
        const T half = ScalarTraits<T>::from_ratio(1, 2);
        for (std::size_t i = 0; i < gram.rows(); ++i) {
            gram(i, i) = zero<T>();
            for (std::size_t j = i + 1; j < gram.cols(); ++j) {
                const T v = half * (gram(i, j) - gram(j, i));
                gram(i, j) = v;
                gram(j, i) = -v;
            }
        }
    }
    return gram;
}

/// sigma_l by brute-force summation over ordered l-tuples; sigma_0 = 1.
template <Scalar T>
T sigma_ell(const KernelInstance<T>& k, std::size_t ell) {
    k.validate();
    if (ell == 0) return one<T>();
    detail::guarded_tuple_count(k.points(), ell, "sigma_ell",
                                "use the trace formula (theorem1_rhs) or the Pfaffian "
                                "expansion (theorem2_sides) instead");
    const Matrix<T> gram = kernel_gram(k);
    const std::size_t dim = 2 * ell;
    Matrix<T> block(dim, dim);
    T total = zero<T>();
    detail::for_each_tuple(k.points(), ell, [&](std::span<const std::size_t> tuple) {
        T weight = one<T>();
        for (auto x : tuple) weight *= k.space.weights[x];
        if (is_zero(weight)) return;
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                block(r, c) = gram(2 * tuple[r / 2] + r % 2, 2 * tuple[c / 2] + c % 2);
        total += weight * detail::pfaffian_in_place(block);
    });
    return total;
}

/// upsilon = mu g.
template <Scalar T>
Matrix<T> upsilon(const KernelInstance<T>& k) {
    return k.mu.matrix() * moment_matrix_g(k).matrix();
}

/// p_j = tr(upsilon^j) / 2 for j = 1..count.
template <Scalar T>
PowerSums<T> half_trace_power_sums(const Matrix<T>& ups, std::size_t count) {
    std::vector<T> p;
    p.reserve(count);
    const T half = ScalarTraits<T>::from_ratio(1, 2);
    Matrix<T> power = Matrix<T>::identity(ups.rows());
    for (std::size_t j = 1; j <= count; ++j) {
        power = power * ups;
        p.push_back(T(half * power.trace()));
    }
    return PowerSums<T>(std::move(p));
}

/// e_l(tr(upsilon)/2, ..., tr(upsilon^l)/2) by the Newton recursion.
template <Scalar T>
T theorem1_rhs(const KernelInstance<T>& k, std::size_t ell) {
    if (ell == 0) return one<T>();
    return elementary_newton(ell, half_trace_power_sums(upsilon(k), ell));
}

template <Scalar T>
struct Theorem1Row {
    std::size_t ell = 0;
    T lhs;  // sigma_l / l!
    T rhs;  // e_l of half-trace power sums
    bool pass = false;
};

template <Scalar T>
std::vector<Theorem1Row<T>> theorem1_verify(const KernelInstance<T>& k, std::size_t ell_max,
                                            const Tolerance& tol = {}) {
    std::vector<Theorem1Row<T>> rows;
    const PowerSums<T> p = half_trace_power_sums(upsilon(k), ell_max);
    const std::vector<T> e = elementary_newton_all(ell_max, p);
    for (std::size_t ell = 0; ell <= ell_max; ++ell) {
        Theorem1Row<T> row;
        row.ell = ell;
        row.lhs = T(sigma_ell(k, ell) / factorial<T>(ell));
        row.rhs = e[ell];
        row.pass = scalars_agree(row.lhs, row.rhs, tol);
        rows.push_back(std::move(row));
    }
    return rows;
}

/**
 * S(tau) = sum_l tau^l sigma_l / l!, summed while terms can be nonzero:
 * l <= min(n, 2 * points) / 2.
 */
template <Scalar T>
TauPoly<T> fredholm_pfaffian(const KernelInstance<T>& k) {
    k.validate();
    const std::size_t top = std::min(k.n(), 2 * k.points()) / 2;
    std::vector<T> c(top + 1, zero<T>());
    for (std::size_t ell = 0; ell <= top; ++ell) c[ell] = T(sigma_ell(k, ell) / factorial<T>(ell));
    return TauPoly<T>(std::move(c));
}

namespace detail {

template <Scalar T>
void require_invertible_mu(const KernelInstance<T>& k, const char* who) {
    if (k.n() % 2 == 1 || is_zero(pfaffian(k.mu)))
        throw SingularMatrixError(std::string(who) + ": mu is singular (pf mu = 0)");
}

/**
 * Expands pf(A + tau B) as a polynomial in tau through the subset sum
 * sum_I (-1)^{|I| - r} pf(A_I) pf((tau B)_{I'}), #I = 2r.
 */
template <Scalar T>
TauPoly<T> pfaffian_of_pencil(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = a.dim();
    std::vector<T> c(n / 2 + 1, zero<T>());
    for (std::size_t size = 0; size <= n; size += 2) {
        const std::size_t complement_half = (n - size) / 2;
        if ((n - size) % 2 == 1) continue;
        for (const auto& subset : subsets_of_size(n, size)) {
            const T term = T(pfaffian(principal(a, subset)) *
                             pfaffian(principal(b, subset.complement())));
            const int sign = parity_sign(subset.element_sum() + size / 2);
            c[complement_half] += signed_term(sign, term);
        }
    }
    return TauPoly<T>(std::move(c));
}

}  // namespace detail

/// pf(mu) pf(mu^{-1 T} - tau g) as a polynomial in tau.
template <Scalar T>
TauPoly<T> theorem2_rhs(const KernelInstance<T>& k) {
    detail::require_invertible_mu(k, "theorem2_rhs");
    const SkewMatrix<T> g = moment_matrix_g(k);
    return pfaffian(k.mu) * detail::pfaffian_of_pencil(inverse_transpose(k.mu), -g);
}

/// pf(mu) pf(mu^{-1 T} + tau g^T); equal to theorem2_rhs since g^T = -g.
template <Scalar T>
TauPoly<T> theorem2_rhs_transposed(const KernelInstance<T>& k) {
    detail::require_invertible_mu(k, "theorem2_rhs_transposed");
    const SkewMatrix<T> g = moment_matrix_g(k);
    return pfaffian(k.mu) * detail::pfaffian_of_pencil(inverse_transpose(k.mu), g.transpose());
}

/// sum_l tau^l sum_{#I = 2l} pf(mu_I) pf((g^T)_I): the intermediate form of the linear-algebra route.
template <Scalar T>
TauPoly<T> theorem2_minor_expansion(const KernelInstance<T>& k) {
    const SkewMatrix<T> gt = moment_matrix_g(k).transpose();
    const std::size_t n = k.n();
    std::vector<T> c(n / 2 + 1, zero<T>());
    for (std::size_t ell = 0; 2 * ell <= n; ++ell)
        for (const auto& subset : subsets_of_size(n, 2 * ell))
            c[ell] += pfaffian(principal(k.mu, subset)) * pfaffian(principal(gt, subset));
    return TauPoly<T>(std::move(c));
}

/// lhs = sum_{l <= n/2} tau^l sigma_l / l!, rhs = pf(mu) pf(mu^{-1 T} - tau g).
template <Scalar T>
TauPolyPair<T> theorem2_sides(const KernelInstance<T>& k) {
    k.validate();
    detail::require_invertible_mu(k, "theorem2_sides");
    std::vector<T> c(k.n() / 2 + 1, zero<T>());
    for (std::size_t ell = 0; ell < c.size(); ++ell) c[ell] = T(sigma_ell(k, ell) / factorial<T>(ell));
    return {TauPoly<T>(std::move(c)), theorem2_rhs(k)};
}

/**
 * det(I + tau M) as a polynomial: the coefficient of tau^s is the sum of the
 * principal s x s minors of M.
 */
template <Scalar T>
TauPoly<T> det_identity_plus_tau(const Matrix<T>& m) {
    if (!m.is_square()) throw PreconditionError("det_identity_plus_tau: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<T> c(n + 1, zero<T>());
    for (std::size_t s = 0; s <= n; ++s)
        for (const auto& subset : subsets_of_size(n, s)) c[s] += determinant(submatrix(m, subset, subset));
    return TauPoly<T>(std::move(c));
}

/// (S(tau)^2, det(I + tau upsilon)).
template <Scalar T>
TauPolyPair<T> fredholm_det_identity(const KernelInstance<T>& k) {
    const TauPoly<T> s = fredholm_pfaffian(k);
    return {s * s, det_identity_plus_tau(upsilon(k))};
}

/// Formal square root of det(I + tau upsilon) with constant term +1.
template <Scalar T>
TauPoly<T> sqrt_det_series(const KernelInstance<T>& k, std::size_t max_degree) {
    return series_sqrt(det_identity_plus_tau(upsilon(k)), max_degree);
}

/**
 * True when `p` (constant term 1) is the square of a polynomial of degree
 * <= deg(p)/2; the root is the formal square root with constant term +1.
 */
template <Scalar T>
bool is_perfect_square(const TauPoly<T>& p, const Tolerance& tol = {}) {
    if (!scalars_agree(p.coeff(0), one<T>(), tol)) return false;
    const std::size_t n = p.size() == 0 ? 0 : p.size() - 1;
    const TauPoly<T> root = series_sqrt(p, n / 2);
    return polys_agree(root * root, p, tol);
}

/// Kernel values on a finite X for the scalar Fredholm identities.
template <Scalar T>
struct ScalarKernelPair {
    T pfaffian_series;    // pf_X[J + ((eps, K), (-K^T, 0))]
    T determinant_series; // det_X[I + K]
};

/**
 * Fredholm Pfaffian of the 2x2 kernel ((eps(x,y), K(x,y)), (-K(y,x), 0))
 * against the Fredholm determinant of K, both as finite series over ordered
 * tuples of the weighted points (terms with l > points vanish).
 */
template <Scalar T>
ScalarKernelPair<T> fredholm_scalar_particular_case(const Matrix<T>& kernel,
                                                    const SkewMatrix<T>& eps,
                                                    const MeasureSpace<T>& space) {
    space.validate();
    const std::size_t p = space.size();
    if (kernel.rows() != p || kernel.cols() != p || eps.dim() != p)
        throw PreconditionError("fredholm_scalar_particular_case: kernels must be " +
                                std::to_string(p) + "x" + std::to_string(p));
    detail::guarded_tuple_count(p, p, "fredholm_scalar_particular_case", "reduce the point count");

    T pf_total = zero<T>();
    T det_total = zero<T>();
    for (std::size_t ell = 0; ell <= p; ++ell) {
        T pf_sum = zero<T>();
        T det_sum = zero<T>();
        Matrix<T> pf_block(2 * ell, 2 * ell);
        Matrix<T> det_block(ell, ell);
        detail::for_each_tuple(p, ell, [&](std::span<const std::size_t> t) {
            T weight = one<T>();
            for (auto x : t) weight *= space.weights[x];
            if (is_zero(weight)) return;
            for (std::size_t i = 0; i < ell; ++i)
                for (std::size_t j = 0; j < ell; ++j) {
                    pf_block(2 * i, 2 * j) = eps(t[i], t[j]);
                    pf_block(2 * i, 2 * j + 1) = kernel(t[i], t[j]);
                    pf_block(2 * i + 1, 2 * j) = T(-kernel(t[j], t[i]));
                    pf_block(2 * i + 1, 2 * j + 1) = zero<T>();
                    det_block(i, j) = kernel(t[i], t[j]);
                }
            pf_sum += weight * detail::pfaffian_in_place(pf_block);
            det_sum += weight * determinant(det_block);
        });
        const T f = factorial<T>(ell);
        pf_total += pf_sum / f;
        det_total += det_sum / f;
    }
    return {pf_total, det_total};
}

/// Three forms of the generating function, each truncated at tau^{n/2}.
template <Scalar T>
struct EquivalenceReport {
    TauPoly<T> exp_trace;        // exp(sum_j (-1)^{j-1} tau^j tr(upsilon^j) / (2j))
    TauPoly<T> sqrt_det;         // formal sqrt(det(I + tau upsilon))
    TauPoly<T> pfaffian_side;    // pf(mu) pf(mu^{-1 T} - tau g)
    bool agree = false;
};

template <Scalar T>
EquivalenceReport<T> remark13_equivalence(const KernelInstance<T>& k, const Tolerance& tol = {}) {
    k.validate();
    detail::require_invertible_mu(k, "remark13_equivalence");
    const std::size_t degree = k.n() / 2;
    const Matrix<T> ups = upsilon(k);
    EquivalenceReport<T> r;
    r.exp_trace = generating_series_check(half_trace_power_sums(ups, degree), degree).rhs;
    r.sqrt_det = series_sqrt(det_identity_plus_tau(ups), degree);
    r.pfaffian_side = theorem2_rhs(k).truncated(degree);
    r.agree = polys_agree(r.exp_trace, r.sqrt_det, tol) && polys_agree(r.sqrt_det, r.pfaffian_side, tol);
    return r;
}

/**
 * Embeds an instance of size n into size n + 1 by appending phi_n = 0 to
 * both tables and a zero last row and column to mu.
 */
template <Scalar T>
KernelInstance<T> pad_degenerate(const KernelInstance<T>& k) {
    k.validate();
    const std::size_t n = k.n();
    KernelInstance<T> out;
    out.space = k.space;
    SkewMatrix<T> mu(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) mu.set(i, j, k.mu(i, j));
    out.mu = std::move(mu);
    out.basis.plus = Matrix<T>(k.points(), n + 1);
    out.basis.minus = Matrix<T>(k.points(), n + 1);
    for (std::size_t a = 0; a < k.points(); ++a)
        for (std::size_t j = 0; j < n; ++j) {
            out.basis.plus(a, j) = k.basis.plus(a, j);
            out.basis.minus(a, j) = k.basis.minus(a, j);
        }
    return out;
}

/// random_kernel with mu redrawn until invertible (n even).
template <Scalar T>
KernelInstance<T> random_kernel_invertible(Rng& rng, std::size_t n, std::size_t points,
                                           std::int64_t range, std::int64_t denominator_max = 1) {
    KernelInstance<T> k = random_kernel<T>(rng, n, points, range, denominator_max);
    k.mu = random_invertible_skew<T>(rng, n, range, denominator_max);
    return k;
}

}  // namespace pfint
