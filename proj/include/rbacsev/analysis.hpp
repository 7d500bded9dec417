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
#include <vector>

#include "rbacsev/inherit.hpp"
#include "rbacsev/model.hpp"
#include "rbacsev/severity.hpp"

namespace rbacsev {

/// Where a permission sits in the hierarchy and how severe it is.
struct PermissionProfile {
    PermissionId permission;
    Rational severity;
    std::size_t num_roles = 0; // roles whose RP contains the permission
    std::size_t min_level = 0;
    std::size_t max_level = 0;
};

struct Analysis {
    PermissionClosure closure;
    WeightedTree weighted;
    SeverityReport report;
    std::vector<PermissionProfile> profiles; // ranking order
};

/// Full pipeline: closure, extended tree, weights, path-product severities.
Analysis analyze(const RoleTree& tree);

} // namespace rbacsev
