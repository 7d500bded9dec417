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

#include "rbacsev/analysis.hpp"

#include <algorithm>

namespace rbacsev {

Analysis analyze(const RoleTree& tree) {
    auto closure = compute_closure(tree);
    auto weighted = assign_weights(extend(tree), closure);
    auto report = severity_by_paths(weighted);

    std::vector<PermissionProfile> profiles;
    profiles.reserve(report.ranking().size());
    for (const auto& perm : report.ranking()) {
        PermissionProfile row{perm, report.severity(perm)};
        bool first = true;
        for (RoleIndex r = 0; r < tree.size(); ++r) {
            if (!closure.contains(r, perm)) {
                continue;
            }
            const std::size_t level = tree.depth(r);
            ++row.num_roles;
            row.min_level = first ? level : std::min(row.min_level, level);
            row.max_level = first ? level : std::max(row.max_level, level);
            first = false;
        }
        profiles.push_back(std::move(row));
    }
    return Analysis{std::move(closure), std::move(weighted), std::move(report), std::move(profiles)};
}

} // namespace rbacsev
