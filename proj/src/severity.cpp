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

#include "rbacsev/severity.hpp"

#include <algorithm>
#include <map>

#include "rbacsev/ahp.hpp"
#include "rbacsev/error.hpp"

namespace rbacsev {

std::vector<RoleId> ExtendedRoleTree::role_path(VertexIndex v) const {
    std::vector<RoleId> path;
    std::optional<VertexIndex> cursor = v;
    while (cursor) {
        const auto& vert = vertices_.at(*cursor);
        if (!vert.is_permission()) {
            path.push_back(base_.id(vert.role));
        }
        cursor = vert.parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

ExtendedRoleTree extend(const RoleTree& tree) {
    ExtendedRoleTree ext(tree);
    auto& vertices = ext.vertices_;
    vertices.reserve(tree.size());
    for (RoleIndex r = 0; r < tree.size(); ++r) {
        ExtendedVertex v;
        v.role = r;
        v.parent = tree.parent(r);
        v.children.assign(tree.children(r).begin(), tree.children(r).end());
        vertices.push_back(std::move(v));
    }
    for (RoleIndex r = 0; r < tree.size(); ++r) {
        if (!tree.is_leaf(r)) {
            continue;
        }
        for (const auto& perm : tree.direct_perms(r)) {
            const VertexIndex index = vertices.size();
            vertices.push_back(ExtendedVertex{r, perm, r, {}});
            vertices[r].children.push_back(index);
        }
    }
    return ext;
}

WeightedTree assign_weights(const ExtendedRoleTree& ext, const PermissionClosure& closure) {
    std::vector<std::optional<Rational>> weights(ext.size());
    std::vector<std::uint64_t> counts;
    for (VertexIndex v = 0; v < ext.size(); ++v) {
        const auto& children = ext.vertex(v).children;
        if (children.empty()) {
            continue;
        }
        counts.clear();
        for (const VertexIndex c : children) {
            const auto& child = ext.vertex(c);
            counts.push_back(child.is_permission() ? 1 : closure.count(child.role));
        }
        const auto group = ahp::weights_closed_form(counts);
        for (std::size_t i = 0; i < children.size(); ++i) {
            weights[children[i]] = group[i];
        }
    }
    return WeightedTree(ext, std::move(weights));
}

SeverityReport::SeverityReport(std::vector<PermissionSeverity> entries) : entries_(std::move(entries)) {
    std::vector<const PermissionSeverity*> order;
    order.reserve(entries_.size());
    for (const auto& e : entries_) {
        order.push_back(&e);
    }
    std::stable_sort(order.begin(), order.end(), [](const PermissionSeverity* a, const PermissionSeverity* b) {
        if (a->severity != b->severity) {
            return b->severity < a->severity;
        }
        return a->permission < b->permission;
    });
    ranking_.reserve(order.size());
    for (const auto* e : order) {
        ranking_.push_back(e->permission);
    }
}

const PermissionSeverity& SeverityReport::at(const PermissionId& perm) const {
    const auto it = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const PermissionSeverity& e) { return e.permission == perm; });
    if (it == entries_.end()) {
        throw UnknownPermission(perm.str());
    }
    return *it;
}

Rational SeverityReport::total() const {
    Rational sum(0);
    for (const auto& e : entries_) {
        sum += e.severity.value();
    }
    return sum;
}

namespace {

// Collects contributions per permission, keeping first-appearance order.
class ReportBuilder {
public:
    void add(PathContribution contribution) {
        auto [it, inserted] = slot_.emplace(contribution.permission, order_.size());
        if (inserted) {
            order_.push_back(contribution.permission);
            paths_.emplace_back();
        }
        paths_[it->second].push_back(std::move(contribution));
    }

    SeverityReport finish() && {
        std::vector<PermissionSeverity> entries;
        entries.reserve(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            Rational sum(0);
            for (const auto& c : paths_[i]) {
                sum += c.product;
            }
            entries.push_back({order_[i], SeverityLevel(sum), std::move(paths_[i])});
        }
        return SeverityReport(std::move(entries));
    }

private:
    std::map<PermissionId, std::size_t> slot_;
    std::vector<PermissionId> order_;
    std::vector<std::vector<PathContribution>> paths_;
};

} // namespace

SeverityReport severity_by_paths(const WeightedTree& wt) {
    const auto& ext = wt.extended();
    ReportBuilder builder;

    // Explicit depth-first walk that carries the vertex path; each product is
    // formed from scratch along its own path.
    std::vector<VertexIndex> path;
    std::vector<std::pair<VertexIndex, std::size_t>> stack{{0, 0}};
    path.push_back(0);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& vert = ext.vertex(v);
        if (vert.is_permission()) {
            Rational product(1);
            std::vector<RoleId> roles;
            for (const VertexIndex step : path) {
                if (const auto& w = wt.weight(step)) {
                    product *= *w;
                }
                if (!ext.vertex(step).is_permission()) {
                    roles.push_back(ext.base().id(ext.vertex(step).role));
                }
            }
            builder.add({std::move(roles), *vert.permission, std::move(product)});
        }
        if (next == vert.children.size()) {
            stack.pop_back();
            path.pop_back();
            continue;
        }
        const VertexIndex child = vert.children[next++];
        stack.emplace_back(child, 0);
        path.push_back(child);
    }
    return std::move(builder).finish();
}

SeverityReport severity_by_mass_flow(const WeightedTree& wt) {
    const auto& ext = wt.extended();

    // Parents always precede children in vertex order.
    std::vector<Rational> mass(ext.size(), Rational(0));
    mass[0] = Rational(1);
    for (VertexIndex v = 0; v < ext.size(); ++v) {
        for (const VertexIndex c : ext.vertex(v).children) {
            mass[c] = mass[v] * *wt.weight(c);
        }
    }

    // Visit permission vertices in depth-first order so contributions line
    // up with severity_by_paths().
    ReportBuilder builder;
    std::vector<VertexIndex> stack{0};
    while (!stack.empty()) {
        const VertexIndex v = stack.back();
        stack.pop_back();
        const auto& vert = ext.vertex(v);
        if (vert.is_permission()) {
            builder.add({ext.role_path(v), *vert.permission, mass[v]});
        }
        for (auto it = vert.children.rbegin(); it != vert.children.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    return std::move(builder).finish();
}

std::vector<PathContribution> explain(const SeverityReport& report, const PermissionId& perm) {
    return report.at(perm).contributions;
}

} // namespace rbacsev
