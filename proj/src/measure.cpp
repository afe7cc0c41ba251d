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

#include "pfint/measure.hpp"

#include <gsl/gsl_integration.h>

#include <memory>

namespace pfint {

namespace detail {

std::uint64_t guarded_tuple_count(std::size_t points, std::size_t ell, const char* who,
                                  const char* advice) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < ell; ++i) {
        if (points != 0 && count > kWorkGuard / points) {
            count = kWorkGuard + 1;
            break;
        }
        count *= points;
    }
    if (count > kWorkGuard)
        throw WorkGuardError(std::string(who) + ": " + std::to_string(points) + "^" +
                             std::to_string(ell) + " tuples exceed the budget of " +
                             std::to_string(kWorkGuard) + " evaluations; " + advice);
    return count;
}

}  // namespace detail

namespace {

struct FixedWorkspaceDeleter {
    void operator()(gsl_integration_fixed_workspace* w) const { gsl_integration_fixed_free(w); }
};

}  // namespace

MeasureSpace<Complex> gauss_hermite_plane(std::size_t nodes_per_axis) {
    if (nodes_per_axis == 0) throw PreconditionError("gauss_hermite_plane: need at least one node");
    // weight exp(-(x - 0)^2), i.e. a = 0, b = 1, alpha = 0
    std::unique_ptr<gsl_integration_fixed_workspace, FixedWorkspaceDeleter> ws(
        gsl_integration_fixed_alloc(gsl_integration_fixed_hermite, nodes_per_axis, 0.0, 1.0, 0.0,
                                    0.0));
    if (!ws) throw std::runtime_error("gauss_hermite_plane: quadrature allocation failed");
    const double* x = gsl_integration_fixed_nodes(ws.get());
    const double* w = gsl_integration_fixed_weights(ws.get());

    MeasureSpace<Complex> m;
    m.points.reserve(nodes_per_axis * nodes_per_axis);
    m.weights.reserve(nodes_per_axis * nodes_per_axis);
    for (std::size_t i = 0; i < nodes_per_axis; ++i)
        for (std::size_t j = 0; j < nodes_per_axis; ++j) {
            m.points.emplace_back(Complex(x[i], x[j]));
            m.weights.emplace_back(w[i] * w[j], 0.0);
        }
    return m;
}

MeasureSpace<Complex> shifted(const MeasureSpace<Complex>& space, Complex center) {
    MeasureSpace<Complex> m = space;
    for (auto& p : m.points) {
        const Complex* z = std::get_if<Complex>(&p);
        if (z == nullptr) throw PreconditionError("shifted: measure points must be complex");
        p = *z + center;
    }
    return m;
}

std::vector<PolynomialCoefficients> monic_monomials(std::size_t n) {
    std::vector<PolynomialCoefficients> q(n);
    for (std::size_t j = 0; j < n; ++j) {
        q[j].assign(j + 1, Complex(0.0, 0.0));
        q[j][j] = Complex(1.0, 0.0);
    }
    return q;
}

Complex evaluate_polynomial(const PolynomialCoefficients& q, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = q.size(); k > 0; --k) acc = acc * z + q[k - 1];
    return acc;
}

KernelInstance<Complex> ginibre_kernel(std::size_t n, const SkewMatrix<Complex>& mu,
                                       const MeasureSpace<Complex>& space,
                                       const std::vector<PolynomialCoefficients>& polys) {
    if (mu.dim() != n)
        throw PreconditionError("ginibre_kernel: mu is " + std::to_string(mu.dim()) + "x" +
                                std::to_string(mu.dim()) + ", expected n = " + std::to_string(n));
    const std::vector<PolynomialCoefficients> q = polys.empty() ? monic_monomials(n) : polys;
    if (q.size() != n)
        throw PreconditionError("ginibre_kernel: expected " + std::to_string(n) + " polynomials");
    for (std::size_t j = 0; j < n; ++j)
        if (q[j].size() != j + 1 || q[j][j] == Complex(0.0, 0.0))
            throw PreconditionError("ginibre_kernel: q_" + std::to_string(j) +
                                    " must have order exactly " + std::to_string(j));
    space.validate();

    KernelInstance<Complex> k;
    k.mu = mu;
    k.space = space;
    k.basis.plus = Matrix<Complex>(space.size(), n);
    k.basis.minus = Matrix<Complex>(space.size(), n);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const Complex* z = std::get_if<Complex>(&space.points[i]);
        if (z == nullptr)
            throw PreconditionError("ginibre_kernel: point " + std::to_string(i) +
                                    " is not a complex number");
        for (std::size_t j = 0; j < n; ++j) {
            k.basis.plus(i, j) = evaluate_polynomial(q[j], *z);
            k.basis.minus(i, j) = evaluate_polynomial(q[j], std::conj(*z));
        }
    }
    return k;
}

}  // namespace pfint
