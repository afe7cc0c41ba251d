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
 * @brief Elementary symmetric functions written through power sums.
 *
 * Two independent evaluators are provided and are expected to agree exactly:
 *
 *   e_l = (-1)^l sum_{|lambda| = l} prod_j (1/s_j!) (-p_{l_j} / l_j)^{s_j}
 *
 * summed over partitions lambda = (l_1^{s_1}, ..., l_g^{s_g}) in frequency
 * form, and the Newton recursion l e_l = sum_{j=1..l} (-1)^{j-1} p_j e_{l-j}.
 * The generating identity sum_l tau^l e_l = exp(sum_j (-1)^{j-1} tau^j p_j / j)
 * is exposed as a pair of truncated series.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pfint/errors.hpp"
#include "pfint/taupoly.hpp"

namespace pfint {

/// One (part, multiplicity) pair of a partition in frequency form.
struct PartFrequency {
    std::size_t part = 0;
    std::size_t multiplicity = 0;
    friend bool operator==(const PartFrequency&, const PartFrequency&) = default;
};

/// Partition in frequency representation, parts strictly decreasing.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<PartFrequency> parts);

    /// From parts listed with repetition, in non-increasing order.
    static Partition from_parts(const std::vector<std::size_t>& parts);

    const std::vector<PartFrequency>& parts() const { return parts_; }
    std::size_t size() const;  // |lambda|
    std::size_t distinct_parts() const { return parts_.size(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<PartFrequency> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/**
 * All partitions of `size`, largest first part first, and within equal
 * leading parts in decreasing lexicographic order of the part sequence.
 * partitions_of(0) is the single empty partition.
 */
std::vector<Partition> partitions_of(std::size_t size);

/// Power sums p_1..p_L (stored 0-based; access is 1-based).
template <Scalar T>
class PowerSums {
public:
    PowerSums() = default;
    explicit PowerSums(std::vector<T> values) : v_(std::move(values)) {}

    std::size_t length() const { return v_.size(); }

    /// p_j for j >= 1; throws naming the missing index.
    const T& at(std::size_t j) const {
        if (j == 0 || j > v_.size())
            throw PreconditionError("power sum p_" + std::to_string(j) +
                                    " is not available (have p_1..p_" +
                                    std::to_string(v_.size()) + ")");
        return v_[j - 1];
    }

    const std::vector<T>& values() const { return v_; }

private:
    std::vector<T> v_;
};

namespace detail {

template <Scalar T>
void require_power_sums(std::size_t ell, const PowerSums<T>& p) {
    if (ell > p.length())
        throw PreconditionError("power sum p_" + std::to_string(p.length() + 1) +
                                " is missing: e_" + std::to_string(ell) + " needs p_1..p_" +
                                std::to_string(ell));
}

}  // namespace detail

/// e_l by the literal partition sum.
template <Scalar T>
T elementary_from_powersums(std::size_t ell, const PowerSums<T>& p) {
    detail::require_power_sums(ell, p);
    T total = zero<T>();
    for (const auto& lambda : partitions_of(ell)) {
        T term = one<T>();
        for (const auto& [part, mult] : lambda.parts()) {
            const T base = T(-p.at(part) / ScalarTraits<T>::from_int(static_cast<std::int64_t>(part)));
            term *= ipow(base, static_cast<unsigned>(mult));
            term /= factorial<T>(mult);
        }
        total += term;
    }
    return ell % 2 == 0 ? total : T(-total);
}

/// e_0..e_ell by the Newton recursion.
template <Scalar T>
std::vector<T> elementary_newton_all(std::size_t ell, const PowerSums<T>& p) {
    detail::require_power_sums(ell, p);
    std::vector<T> e(ell + 1, zero<T>());
    e[0] = one<T>();
    for (std::size_t k = 1; k <= ell; ++k) {
        T acc = zero<T>();
        for (std::size_t j = 1; j <= k; ++j) {
            const T term = T(p.at(j) * e[k - j]);
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        e[k] = T(acc / ScalarTraits<T>::from_int(static_cast<std::int64_t>(k)));
    }
    return e;
}

/// e_l by the Newton recursion.
template <Scalar T>
T elementary_newton(std::size_t ell, const PowerSums<T>& p) {
    return elementary_newton_all(ell, p).back();
}

/// The two sides of the generating identity, truncated at tau^degree.
template <Scalar T>
struct SeriesPair {
    TauPoly<T> lhs;  // sum_l tau^l e_l from the partition sum
    TauPoly<T> rhs;  // exp(sum_j (-1)^{j-1} tau^j p_j / j)
};

/// Inner series sum_{j=1..degree} (-1)^{j-1} tau^j p_j / j.
template <Scalar T>
TauPoly<T> log_generating_series(const PowerSums<T>& p, std::size_t degree) {
    detail::require_power_sums(degree, p);
    std::vector<T> h(degree + 1, zero<T>());
    for (std::size_t j = 1; j <= degree; ++j) {
        T v = T(p.at(j) / ScalarTraits<T>::from_int(static_cast<std::int64_t>(j)));
        h[j] = j % 2 == 1 ? v : T(-v);
    }
    return TauPoly<T>(std::move(h));
}

template <Scalar T>
SeriesPair<T> generating_series_check(const PowerSums<T>& p, std::size_t degree) {
    detail::require_power_sums(degree, p);
    std::vector<T> lhs(degree + 1, zero<T>());
    for (std::size_t ell = 0; ell <= degree; ++ell) lhs[ell] = elementary_from_powersums(ell, p);
    return {TauPoly<T>(std::move(lhs)), series_exp(log_generating_series(p, degree), degree)};
}

}  // namespace pfint
