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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rbacsev/rational.hpp"

namespace rbacsev::ahp {

/// Square matrix of pairwise comparisons between the members of one sibling
/// group. Entry (i, j) says how much member i outweighs member j.
///
/// Any square matrix may be held here so that check_consistency() can
/// reject corrupted ones; build_matrix() only produces positive,
/// reciprocal, ideally consistent matrices.
class PairwiseMatrix {
public:
    /// Row-major entries; throws std::invalid_argument unless dim*dim entries.
    PairwiseMatrix(std::size_t dim, std::vector<Rational> entries);

    /// All entries 1: every member is as important as every other. This is
    /// the multiplicative identity of pairwise comparison.
    static PairwiseMatrix equal_preference(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const Rational& at(std::size_t row, std::size_t col) const { return entries_.at(row * dim_ + col); }

    friend bool operator==(const PairwiseMatrix&, const PairwiseMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

/// Relative weights of one sibling group, aligned with the group order.
struct WeightVector {
    std::vector<Rational> weights;

    std::size_t size() const noexcept { return weights.size(); }
    const Rational& operator[](std::size_t i) const { return weights[i]; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// entries[i][j] = counts[i] / counts[j]. Throws EmptyGroup, or
/// std::invalid_argument on a zero count.
PairwiseMatrix build_matrix(std::span<const std::uint64_t> counts);

/// Normalizes every column to sum 1, then averages each row.
WeightVector weights_via_matrix(const PairwiseMatrix& matrix);

/// w_i = counts[i] / sum(counts). Same preconditions as build_matrix().
WeightVector weights_closed_form(std::span<const std::uint64_t> counts);

/// True iff m[i][j] == m[i][s] * m[s][j] for every triple.
bool check_consistency(const PairwiseMatrix& matrix);

} // namespace rbacsev::ahp
