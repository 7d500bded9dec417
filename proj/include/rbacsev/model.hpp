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

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rbacsev/rational.hpp"

namespace rbacsev {

/// True when `token` matches `[A-Za-z0-9_.:-]+`.
bool is_valid_token(std::string_view token) noexcept;

namespace detail {

// Roles and permissions share a token grammar but are distinct types.
template <typename Tag>
class Id {
public:
    Id() = default;
    explicit Id(std::string value) : value_(std::move(value)) {}

    const std::string& str() const noexcept { return value_; }

    friend bool operator==(const Id&, const Id&) = default;
    friend auto operator<=>(const Id&, const Id&) = default;

private:
    std::string value_;
};

} // namespace detail

using RoleId = detail::Id<struct RoleTag>;
using PermissionId = detail::Id<struct PermissionTag>;

/// Index of a role inside a RoleTree. Indices follow depth-first preorder
/// from the root, so index 0 is always the root.
using RoleIndex = std::size_t;

class RoleTree;

/// Builds a RoleTree from already-checked parts. Used by the validator;
/// callers must guarantee the tree invariants.
struct RoleTreeParts {
    RoleId root;
    std::vector<std::pair<RoleId, RoleId>> edges;
    std::vector<std::pair<RoleId, std::vector<PermissionId>>> assignments;
};

/// Oriented role tree with leaf-only permission assignment.
///
/// Immutable after construction. Children keep the order in which their
/// edges first appeared in the input; a leaf's permissions keep their first
/// listed order with duplicates collapsed.
class RoleTree {
public:
    /// Throws rbacsev::Error if the parts do not describe a valid tree.
    static RoleTree from_parts(const RoleTreeParts& parts);

    std::size_t size() const noexcept { return ids_.size(); }
    RoleIndex root() const noexcept { return 0; }

    const RoleId& id(RoleIndex role) const { return ids_.at(role); }
    std::optional<RoleIndex> find(const RoleId& id) const;
    /// Throws UnknownRole.
    RoleIndex index_of(const RoleId& id) const;

    std::optional<RoleIndex> parent(RoleIndex role) const { return parents_.at(role); }
    std::span<const RoleIndex> children(RoleIndex role) const { return children_.at(role); }
    std::span<const PermissionId> direct_perms(RoleIndex role) const { return direct_perms_.at(role); }
    bool is_leaf(RoleIndex role) const { return children_.at(role).empty(); }

    /// Number of edges from the root.
    std::size_t depth(RoleIndex role) const { return depths_.at(role); }
    std::size_t height() const noexcept;

    /// Roles in depth-first preorder.
    const std::vector<RoleId>& ids() const noexcept { return ids_; }

    friend bool operator==(const RoleTree&, const RoleTree&) = default;

private:
    RoleTree() = default;

    struct IdHash {
        std::size_t operator()(const RoleId& id) const noexcept { return std::hash<std::string>{}(id.str()); }
    };

    std::vector<RoleId> ids_;
    std::vector<std::optional<RoleIndex>> parents_;
    std::vector<std::vector<RoleIndex>> children_;
    std::vector<std::vector<PermissionId>> direct_perms_;
    std::vector<std::size_t> depths_;
    std::unordered_map<RoleId, RoleIndex, IdHash> index_;
};

/// Leaf roles in depth-first order.
std::vector<RoleId> leaves(const RoleTree& tree);

/// Throws UnknownRole.
std::size_t depth(const RoleTree& tree, const RoleId& role);

/// Severity of one permission; the value always lies in [0, 1].
class SeverityLevel {
public:
    /// Throws std::out_of_range outside [0, 1].
    explicit SeverityLevel(Rational value);

    const Rational& value() const noexcept { return value_; }

    friend bool operator==(const SeverityLevel&, const SeverityLevel&) = default;
    friend auto operator<=>(const SeverityLevel& lhs, const SeverityLevel& rhs) { return lhs.value_ <=> rhs.value_; }

private:
    Rational value_;
};

} // namespace rbacsev
