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
#include <string>

#include "rbacsev/model.hpp"

namespace rbacsev {

struct GenParams {
    std::size_t roles = 1;
    std::size_t perms = 1;
    std::size_t max_children = 4;
    std::size_t max_leaf_perms = 5;
    std::uint64_t seed = 0;
};

/// Random valid policy with roles `r1..rN` and permissions `p1..pM`.
///
/// Roles are attached one at a time to a uniformly chosen role that still
/// has room for a child. Each leaf then draws a non-empty random subset of
/// at most max_leaf_perms permissions, and a final pass places any
/// permission that no leaf drew. Deterministic for a given seed on a given
/// standard library. Throws InvalidParams when the constraints cannot be met.
RoleTree generate_tree(const GenParams& params);

/// serialize(generate_tree(params)).
std::string generate_policy(const GenParams& params);

} // namespace rbacsev
