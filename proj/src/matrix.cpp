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

#include "pfint/matrix.hpp"

#include <cstdio>

#include "pfint/errors.hpp"

namespace pfint {

std::string ScalarTraits<Complex>::format(const Complex& v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", v.real(), v.imag());
    return buf;
}

IndexSubset::IndexSubset(std::vector<std::size_t> indices, std::size_t universe)
    : idx_(std::move(indices)), universe_(universe) {
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        if (idx_[k] < 1 || idx_[k] > universe_)
            throw std::out_of_range("IndexSubset: index " + std::to_string(idx_[k]) +
                                    " outside 1.." + std::to_string(universe_));
        if (k > 0 && idx_[k] <= idx_[k - 1])
            throw std::invalid_argument("IndexSubset: indices must be strictly increasing");
    }
}

IndexSubset IndexSubset::full(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{1});
    return IndexSubset(std::move(idx), n);
}

IndexSubset IndexSubset::from_mask(std::uint64_t mask, std::size_t universe) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < universe; ++k)
        if (mask >> k & 1u) idx.push_back(k + 1);
    return IndexSubset(std::move(idx), universe);
}

IndexSubset IndexSubset::complement() const {
    std::vector<std::size_t> out;
    out.reserve(universe_ - idx_.size());
    std::size_t k = 0;
    for (std::size_t i = 1; i <= universe_; ++i) {
        if (k < idx_.size() && idx_[k] == i) {
            ++k;
            continue;
        }
        out.push_back(i);
    }
    return IndexSubset(std::move(out), universe_);
}

std::ostream& operator<<(std::ostream& os, const IndexSubset& s) {
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
    return os << '}';
}

std::vector<IndexSubset> subsets_of_size(std::size_t n, std::size_t k) {
    if (n > kMaxSubsetUniverse)
        throw SizeLimitError("subset enumeration over [" + std::to_string(n) +
                             "] exceeds the limit of " + std::to_string(kMaxSubsetUniverse));
    std::vector<IndexSubset> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{1});
    while (true) {
        out.emplace_back(cur, n);
        // advance to the next combination in lexicographic order
        std::size_t pos = k;
        while (pos > 0 && cur[pos - 1] == n - k + pos) --pos;
        if (pos == 0) break;
        ++cur[pos - 1];
        for (std::size_t q = pos; q < k; ++q) cur[q] = cur[q - 1] + 1;
    }
    return out;
}

std::vector<IndexSubset> all_subsets(std::size_t n) {
    if (n > kMaxSubsetUniverse)
        throw SizeLimitError("subset enumeration over [" + std::to_string(n) +
                             "] exceeds the limit of " + std::to_string(kMaxSubsetUniverse));
    std::vector<IndexSubset> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t k = 0; k <= n; ++k) {
        auto level = subsets_of_size(n, k);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

}  // namespace pfint
