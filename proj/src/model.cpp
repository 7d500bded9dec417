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

#include "rbacsev/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "rbacsev/error.hpp"

namespace rbacsev {

bool is_valid_token(std::string_view token) noexcept {
    if (token.empty()) {
        return false;
    }
    return std::all_of(token.begin(), token.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
               c == ':' || c == '-';
    });
}

RoleTree RoleTree::from_parts(const RoleTreeParts& parts) {
    // Gather adjacency keyed by id, children in edge order.
    std::unordered_map<RoleId, std::vector<RoleId>, IdHash> kids;
    std::unordered_map<RoleId, RoleId, IdHash> parent_of;
    for (const auto& [parent, child] : parts.edges) {
        auto [it, inserted] = parent_of.emplace(child, parent);
        if (!inserted) {
            if (it->second != parent) {
                throw Error("role '" + child.str() + "' has two parents");
            }
            continue;
        }
        kids[parent].push_back(child);
    }
    if (parent_of.contains(parts.root)) {
        throw Error("root '" + parts.root.str() + "' has a parent");
    }

    RoleTree tree;
    std::vector<std::pair<RoleId, std::optional<RoleIndex>>> stack{{parts.root, std::nullopt}};
    while (!stack.empty()) {
        auto [id, parent] = std::move(stack.back());
        stack.pop_back();
        const RoleIndex index = tree.ids_.size();
        if (!tree.index_.emplace(id, index).second) {
            throw Error("role '" + id.str() + "' reached twice");
        }
        tree.ids_.push_back(id);
        tree.parents_.push_back(parent);
        tree.children_.emplace_back();
        tree.direct_perms_.emplace_back();
        tree.depths_.push_back(parent ? tree.depths_[*parent] + 1 : 0);
        if (parent) {
            tree.children_[*parent].push_back(index);
        }
        if (auto it = kids.find(id); it != kids.end()) {
            for (auto child = it->second.rbegin(); child != it->second.rend(); ++child) {
                stack.emplace_back(*child, index);
            }
        }
    }
    if (tree.ids_.size() != parent_of.size() + 1) {
        throw Error("edges do not form a single tree rooted at '" + parts.root.str() + "'");
    }

    for (const auto& [role, perms] : parts.assignments) {
        const RoleIndex index = tree.index_of(role);
        if (!tree.is_leaf(index)) {
            throw Error("permissions assigned to internal role '" + role.str() + "'");
        }
        auto& target = tree.direct_perms_[index];
        for (const auto& perm : perms) {
            if (std::find(target.begin(), target.end(), perm) == target.end()) {
                target.push_back(perm);
            }
        }
    }
    for (RoleIndex r = 0; r < tree.size(); ++r) {
        if (tree.is_leaf(r) && tree.direct_perms_[r].empty()) {
            throw Error("leaf role '" + tree.ids_[r].str() + "' has no permissions");
        }
    }
    return tree;
}

std::optional<RoleIndex> RoleTree::find(const RoleId& id) const {
    if (auto it = index_.find(id); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

RoleIndex RoleTree::index_of(const RoleId& id) const {
    if (auto found = find(id)) {
        return *found;
    }
    throw UnknownRole(id.str());
}

std::size_t RoleTree::height() const noexcept {
    return depths_.empty() ? 0 : *std::max_element(depths_.begin(), depths_.end());
}

std::vector<RoleId> leaves(const RoleTree& tree) {
    std::vector<RoleId> out;
    for (RoleIndex r = 0; r < tree.size(); ++r) {
        if (tree.is_leaf(r)) {
            out.push_back(tree.id(r));
        }
    }
    return out;
}

std::size_t depth(const RoleTree& tree, const RoleId& role) {
    return tree.depth(tree.index_of(role));
}

SeverityLevel::SeverityLevel(Rational value) : value_(std::move(value)) {
    if (value_ < Rational(0) || Rational(1) < value_) {
        throw std::out_of_range("severity " + value_.to_string() + " outside [0, 1]");
    }
}

} // namespace rbacsev
