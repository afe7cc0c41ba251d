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

#include "pfint/symfun.hpp"

#include <ostream>

namespace pfint {

Partition::Partition(std::vector<PartFrequency> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k].part == 0 || parts_[k].multiplicity == 0)
            throw std::invalid_argument("Partition: parts and multiplicities must be >= 1");
        if (k > 0 && parts_[k].part >= parts_[k - 1].part)
            throw std::invalid_argument("Partition: parts must be strictly decreasing");
    }
}

Partition Partition::from_parts(const std::vector<std::size_t>& parts) {
    std::vector<PartFrequency> freq;
    for (auto p : parts) {
        if (!freq.empty() && freq.back().part == p)
            ++freq.back().multiplicity;
        else
            freq.push_back({p, 1});
    }
    return Partition(std::move(freq));
}

std::size_t Partition::size() const {
    std::size_t s = 0;
    for (const auto& f : parts_) s += f.part * f.multiplicity;
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t k = 0; k < p.parts().size(); ++k)
        os << (k ? "," : "") << p.parts()[k].part << '^' << p.parts()[k].multiplicity;
    return os << ')';
}

std::vector<Partition> partitions_of(std::size_t size) {
    std::vector<Partition> out;
    if (size == 0) {
        out.emplace_back();
        return out;
    }
    // Reverse-lexicographic walk over non-increasing part sequences.
    std::vector<std::size_t> parts{size};
    for (;;) {
        out.push_back(Partition::from_parts(parts));
        // Strip trailing ones, then decrement the last part > 1 and refill.
        std::size_t ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty()) break;
        const std::size_t head = --parts.back();
        std::size_t remaining = ones + 1;
        while (remaining > head) {
            parts.push_back(head);
            remaining -= head;
        }
        if (remaining > 0) parts.push_back(remaining);
    }
    return out;
}

}  // namespace pfint
