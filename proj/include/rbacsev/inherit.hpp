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
#include <span>
#include <vector>

#include "rbacsev/model.hpp"

namespace rbacsev {

/// Full permission set RP(r) of every role, aligned with RoleTree indices.
///
/// A leaf's set is its direct assignment; an internal role's set is the
/// union over its children. Each set is ordered by first depth-first
/// appearance, so rp(root) lists the whole permission set of the policy.
class PermissionClosure {
public:
    std::size_t size() const noexcept { return rp_.size(); }

    std::span<const PermissionId> rp(RoleIndex role) const { return rp_.at(role); }
    std::size_t count(RoleIndex role) const { return rp_.at(role).size(); }
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

    /// Role ids in depth-first order (same indexing as the tree).
    const std::vector<RoleId>& roles() const noexcept { return roles_; }

    /// Every permission in the policy, in first depth-first appearance order.
    std::span<const PermissionId> permissions() const { return rp_.at(0); }

    bool contains(RoleIndex role, const PermissionId& perm) const;

private:
    friend PermissionClosure compute_closure(const RoleTree& tree);

    std::vector<RoleId> roles_;
    std::vector<std::vector<PermissionId>> rp_;
    std::vector<std::size_t> counts_;
};

/// Single bottom-up pass over the tree.
PermissionClosure compute_closure(const RoleTree& tree);

/// Roles whose RP contains `perm`, in depth-first order. Throws UnknownPermission.
std::vector<RoleId> permission_carriers(const PermissionClosure& closure, const PermissionId& perm);

} // namespace rbacsev
