/*
    Copyright 2026 The rbac-sev Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "rbacsev/ahp.hpp"

#include <stdexcept>

#include "rbacsev/error.hpp"

namespace rbacsev::ahp {

namespace {

void check_counts(std::span<const std::uint64_t> counts) {
    if (counts.empty()) {
        throw EmptyGroup();
    }
    for (const auto c : counts) {
        if (c == 0) {
            throw std::invalid_argument("permission count must be positive");
        }
    }
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

} // namespace

PairwiseMatrix::PairwiseMatrix(std::size_t dim, std::vector<Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("pairwise matrix needs dim*dim entries with dim >= 1");
    }
}

PairwiseMatrix PairwiseMatrix::equal_preference(std::size_t dim) {
    return PairwiseMatrix(dim, std::vector<Rational>(dim * dim, Rational(1)));
}

PairwiseMatrix build_matrix(std::span<const std::uint64_t> counts) {
    check_counts(counts);
    const std::size_t k = counts.size();
    std::vector<Rational> entries;
    entries.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            entries.push_back(ratio(counts[i], counts[j]));
        }
    }
    return PairwiseMatrix(k, std::move(entries));
}

WeightVector weights_via_matrix(const PairwiseMatrix& matrix) {
    const std::size_t k = matrix.dim();

    std::vector<Rational> column_sums(k, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            column_sums[j] += matrix.at(i, j);
        }
    }

    WeightVector out;
    out.weights.reserve(k);
    const Rational dim(static_cast<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < k; ++j) {
            row += matrix.at(i, j) / column_sums[j];
        }
        out.weights.push_back(row / dim);
    }
    return out;
}

WeightVector weights_closed_form(std::span<const std::uint64_t> counts) {
    check_counts(counts);
    BigInt total = 0;
    for (const auto c : counts) {
        total += c;
    }
    WeightVector out;
    out.weights.reserve(counts.size());
    for (const auto c : counts) {
        out.weights.emplace_back(BigInt(c), total);
    }
    return out;
}

bool check_consistency(const PairwiseMatrix& matrix) {
    const std::size_t k = matrix.dim();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t j = 0; j < k; ++j) {
                if (matrix.at(i, j) != matrix.at(i, s) * matrix.at(s, j)) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace rbacsev::ahp
