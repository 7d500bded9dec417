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

#include "rbacsev/inherit.hpp"

#include <algorithm>
#include <set>

#include "rbacsev/error.hpp"

namespace rbacsev {

bool PermissionClosure::contains(RoleIndex role, const PermissionId& perm) const {
    const auto& set = rp_.at(role);
    return std::find(set.begin(), set.end(), perm) != set.end();
}

PermissionClosure compute_closure(const RoleTree& tree) {
    PermissionClosure closure;
    closure.roles_ = tree.ids();
    closure.rp_.resize(tree.size());

    // Preorder indices: every child has a larger index than its parent.
    for (RoleIndex r = tree.size(); r-- > 0;) {
        auto& out = closure.rp_[r];
        if (tree.is_leaf(r)) {
            out.assign(tree.direct_perms(r).begin(), tree.direct_perms(r).end());
            continue;
        }
        std::set<PermissionId> seen;
        for (const RoleIndex child : tree.children(r)) {
            for (const auto& perm : closure.rp_[child]) {
                if (seen.insert(perm).second) {
                    out.push_back(perm);
                }
            }
        }
    }

    closure.counts_.reserve(tree.size());
    for (const auto& set : closure.rp_) {
        closure.counts_.push_back(set.size());
    }
    return closure;
}

std::vector<RoleId> permission_carriers(const PermissionClosure& closure, const PermissionId& perm) {
    std::vector<RoleId> out;
    for (RoleIndex r = 0; r < closure.size(); ++r) {
        if (closure.contains(r, perm)) {
            out.push_back(closure.roles()[r]);
        }
    }
    if (out.empty()) {
        throw UnknownPermission(perm.str());
    }
    return out;
}

} // namespace rbacsev
