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
#include <optional>
#include <span>
#include <vector>

#include "rbacsev/inherit.hpp"
#include "rbacsev/model.hpp"
#include "rbacsev/rational.hpp"

namespace rbacsev {

using VertexIndex = std::size_t;

/// Vertex of the extended tree: either an original role or a permission
/// vertex hung under a leaf role.
struct ExtendedVertex {
    RoleIndex role = 0; // the role itself, or the leaf that owns the permission vertex
    std::optional<PermissionId> permission;
    std::optional<VertexIndex> parent;
    std::vector<VertexIndex> children;

    bool is_permission() const noexcept { return permission.has_value(); }
};

/// Role tree with one single-permission child per (leaf, permission) pair.
///
/// Vertices [0, base().size()) are the roles with their tree indices;
/// permission vertices follow in leaf order, then in each leaf's stored
/// permission order.
class ExtendedRoleTree {
public:
    const RoleTree& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const ExtendedVertex& vertex(VertexIndex v) const { return vertices_.at(v); }
    std::size_t permission_vertex_count() const noexcept { return vertices_.size() - base_.size(); }

    /// Roles from the root down to `v` (for a permission vertex, down to its leaf).
    std::vector<RoleId> role_path(VertexIndex v) const;

private:
    friend ExtendedRoleTree extend(const RoleTree& tree);

    explicit ExtendedRoleTree(RoleTree base) : base_(std::move(base)) {}

    RoleTree base_;
    std::vector<ExtendedVertex> vertices_;
};

ExtendedRoleTree extend(const RoleTree& tree);

/// Extended tree plus the relative weight of every non-root vertex.
class WeightedTree {
public:
    const ExtendedRoleTree& extended() const noexcept { return extended_; }

    /// Empty for the root.
    const std::optional<Rational>& weight(VertexIndex v) const { return weights_.at(v); }

private:
    friend WeightedTree assign_weights(const ExtendedRoleTree& ext, const PermissionClosure& closure);

    WeightedTree(ExtendedRoleTree ext, std::vector<std::optional<Rational>> weights)
        : extended_(std::move(ext)), weights_(std::move(weights)) {}

    ExtendedRoleTree extended_;
    std::vector<std::optional<Rational>> weights_;
};

/// Each sibling group is weighted by its members' permission counts
/// (a permission vertex counts 1). `closure` must come from ext.base().
WeightedTree assign_weights(const ExtendedRoleTree& ext, const PermissionClosure& closure);

/// One root-to-permission-vertex path and the product of its weights.
struct PathContribution {
    std::vector<RoleId> roles; // root first, owning leaf last
    PermissionId permission;
    Rational product;

    friend bool operator==(const PathContribution&, const PathContribution&) = default;
};

struct PermissionSeverity {
    PermissionId permission;
    SeverityLevel severity;
    std::vector<PathContribution> contributions; // depth-first order

    friend bool operator==(const PermissionSeverity&, const PermissionSeverity&) = default;
};

class SeverityReport {
public:
    /// Entries in first depth-first appearance order.
    explicit SeverityReport(std::vector<PermissionSeverity> entries);

    const std::vector<PermissionSeverity>& entries() const noexcept { return entries_; }

    /// Severity descending, ties by permission id ascending.
    const std::vector<PermissionId>& ranking() const noexcept { return ranking_; }

    /// Throws UnknownPermission.
    const PermissionSeverity& at(const PermissionId& perm) const;
    const Rational& severity(const PermissionId& perm) const { return at(perm).severity.value(); }

    Rational total() const;

    friend bool operator==(const SeverityReport&, const SeverityReport&) = default;

private:
    std::vector<PermissionSeverity> entries_;
    std::vector<PermissionId> ranking_;
};

/// Enumerates every root-to-permission-vertex path and multiplies the
/// weights along it (the root carries no weight).
SeverityReport severity_by_paths(const WeightedTree& wt);

/// Pushes unit mass from the root down, splitting it by child weight, and
/// collects what lands on each permission's vertices. Equal to
/// severity_by_paths() by distributivity; kept as its independent check.
SeverityReport severity_by_mass_flow(const WeightedTree& wt);

/// Stored path breakdown for `perm`. Throws UnknownPermission.
std::vector<PathContribution> explain(const SeverityReport& report, const PermissionId& perm);

} // namespace rbacsev
