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

#include "rbacsev/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rbacsev/error.hpp"

namespace rbacsev {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

void require_token(std::string_view token, std::size_t line) {
    if (!is_valid_token(token)) {
        throw SyntaxError(line, "invalid identifier '" + std::string(token) + "' (expected [A-Za-z0-9_.:-]+)");
    }
}

Diagnostic make_error(DiagnosticCode code, std::optional<std::size_t> line, std::string message) {
    return Diagnostic{DiagnosticSeverity::error, code, line, std::move(message)};
}

struct RoleHash {
    std::size_t operator()(const RoleId& id) const noexcept { return std::hash<std::string>{}(id.str()); }
};

} // namespace

std::string_view to_string(DiagnosticCode code) noexcept {
    switch (code) {
    case DiagnosticCode::syntax:
        return "syntax";
    case DiagnosticCode::multi_parent:
        return "multi-parent";
    case DiagnosticCode::cycle:
        return "cycle";
    case DiagnosticCode::multi_root:
        return "multi-root";
    case DiagnosticCode::no_root:
        return "no-root";
    case DiagnosticCode::assign_internal:
        return "assign-internal";
    case DiagnosticCode::leaf_no_perms:
        return "leaf-no-perms";
    case DiagnosticCode::unknown_role:
        return "unknown-role";
    case DiagnosticCode::duplicate_assign:
        return "duplicate-assign";
    }
    return "unknown";
}

std::string Diagnostic::format() const {
    std::ostringstream out;
    out << to_string(code) << ':';
    if (line) {
        out << *line;
    } else {
        out << '-';
    }
    out << ": " << message;
    return out.str();
}

PolicyDocument parse(std::string_view text) {
    PolicyDocument doc;
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (line.ends_with('\r')) {
            line.remove_suffix(1);
        }
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }

        if (tokens[0] == "edge") {
            if (tokens.size() != 3) {
                throw SyntaxError(line_no, "'edge' takes exactly two role ids");
            }
            require_token(tokens[1], line_no);
            require_token(tokens[2], line_no);
            doc.edges.push_back({RoleId(std::string(tokens[1])), RoleId(std::string(tokens[2])), line_no});
        } else if (tokens[0] == "assign") {
            if (tokens.size() < 3) {
                throw SyntaxError(line_no, "'assign' takes a leaf role id and at least one permission id");
            }
            AssignEntry entry{RoleId(std::string(tokens[1])), {}, line_no};
            require_token(tokens[1], line_no);
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                require_token(tokens[i], line_no);
                entry.perms.emplace_back(std::string(tokens[i]));
            }
            doc.assignments.push_back(std::move(entry));
        } else {
            throw SyntaxError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
        }
    }
    return doc;
}

ValidationResult validate(const PolicyDocument& doc) {
    std::vector<Diagnostic> diags;

    // Roles mentioned by edges, in first-appearance order.
    std::vector<RoleId> roles;
    std::unordered_map<RoleId, std::size_t, RoleHash> role_index;
    std::vector<std::size_t> first_line;
    auto intern = [&](const RoleId& id, std::size_t line) {
        auto [it, inserted] = role_index.emplace(id, roles.size());
        if (inserted) {
            roles.push_back(id);
            first_line.push_back(line);
        }
        return it->second;
    };

    // Distinct edges, plus the first parent seen for each child.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out_edges; // (child, line)
    std::vector<std::optional<std::size_t>> first_parent;
    std::vector<std::size_t> parent_count;
    std::set<std::pair<std::size_t, std::size_t>> seen_edges;
    std::vector<std::pair<RoleId, RoleId>> tree_edges;

    for (const auto& edge : doc.edges) {
        const std::size_t p = intern(edge.parent, edge.line);
        const std::size_t c = intern(edge.child, edge.line);
        out_edges.resize(roles.size());
        first_parent.resize(roles.size());
        parent_count.resize(roles.size());
        if (!seen_edges.emplace(p, c).second) {
            continue;
        }
        out_edges[p].emplace_back(c, edge.line);
        ++parent_count[c];
        if (!first_parent[c]) {
            first_parent[c] = p;
            tree_edges.emplace_back(edge.parent, edge.child);
        } else {
            diags.push_back(make_error(DiagnosticCode::multi_parent, edge.line,
                                       "role '" + edge.child.str() + "' already has parent '" +
                                           roles[*first_parent[c]].str() + "', cannot also be a child of '" +
                                           edge.parent.str() + "'"));
        }
    }

    // Cycles: iterative three-colour DFS; every back edge is one report.
    {
        enum class Colour { white, grey, black };
        std::vector<Colour> colour(roles.size(), Colour::white);
        for (std::size_t start = 0; start < roles.size(); ++start) {
            if (colour[start] != Colour::white) {
                continue;
            }
            std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
            colour[start] = Colour::grey;
            while (!stack.empty()) {
                auto& [node, next] = stack.back();
                if (next == out_edges[node].size()) {
                    colour[node] = Colour::black;
                    stack.pop_back();
                    continue;
                }
                const auto [child, line] = out_edges[node][next++];
                if (colour[child] == Colour::grey) {
                    diags.push_back(make_error(DiagnosticCode::cycle, line,
                                               "edge '" + roles[node].str() + "' -> '" + roles[child].str() +
                                                   "' closes a cycle"));
                } else if (colour[child] == Colour::white) {
                    colour[child] = Colour::grey;
                    stack.emplace_back(child, 0);
                }
            }
        }
    }

    // Roots.
    std::optional<RoleId> root;
    const bool edgeless = doc.edges.empty();
    if (!edgeless) {
        std::vector<std::size_t> roots;
        for (std::size_t r = 0; r < roles.size(); ++r) {
            if (parent_count[r] == 0) {
                roots.push_back(r);
            }
        }
        if (roots.empty()) {
            diags.push_back(make_error(DiagnosticCode::no_root, std::nullopt, "every role has a parent"));
        } else if (roots.size() > 1) {
            std::string names;
            for (const auto r : roots) {
                names += (names.empty() ? "'" : ", '") + roles[r].str() + "'";
            }
            diags.push_back(make_error(DiagnosticCode::multi_root, first_line[roots[1]],
                                       std::to_string(roots.size()) + " roles have no parent: " + names));
        } else {
            root = roles[roots.front()];
        }
    } else {
        std::vector<RoleId> targets;
        for (const auto& a : doc.assignments) {
            if (std::find(targets.begin(), targets.end(), a.leaf) == targets.end()) {
                targets.push_back(a.leaf);
            }
        }
        if (targets.empty()) {
            diags.push_back(make_error(DiagnosticCode::no_root, std::nullopt, "policy declares no roles"));
        } else if (targets.size() == 1) {
            root = targets.front();
            intern(targets.front(), doc.assignments.front().line);
            out_edges.resize(roles.size());
        }
    }

    // Assignments.
    std::map<std::size_t, std::vector<PermissionId>> perms_of;
    std::map<std::size_t, std::size_t> last_assign_line;
    for (const auto& a : doc.assignments) {
        const auto it = role_index.find(a.leaf);
        if (it == role_index.end()) {
            diags.push_back(make_error(DiagnosticCode::unknown_role, a.line,
                                       "role '" + a.leaf.str() + (edgeless ? "' is not the only role in an edgeless policy"
                                                                            : "' appears in no edge")));
            continue;
        }
        const std::size_t r = it->second;
        if (!out_edges[r].empty()) {
            diags.push_back(make_error(DiagnosticCode::assign_internal, a.line,
                                       "role '" + a.leaf.str() + "' has children; only leaf roles receive permissions"));
            continue;
        }
        if (last_assign_line.contains(r)) {
            diags.push_back(Diagnostic{DiagnosticSeverity::warning, DiagnosticCode::duplicate_assign, a.line,
                                       "role '" + a.leaf.str() + "' already assigned on line " +
                                           std::to_string(last_assign_line[r]) + "; permission sets merged"});
        }
        last_assign_line[r] = a.line;
        auto& perms = perms_of[r];
        perms.insert(perms.end(), a.perms.begin(), a.perms.end());
    }

    for (std::size_t r = 0; r < roles.size(); ++r) {
        if (!out_edges[r].empty()) {
            continue;
        }
        const auto it = perms_of.find(r);
        if (it == perms_of.end() || it->second.empty()) {
            const bool listed = last_assign_line.contains(r);
            diags.push_back(make_error(DiagnosticCode::leaf_no_perms, listed ? last_assign_line[r] : first_line[r],
                                       "leaf role '" + roles[r].str() + "' has no permissions"));
        }
    }

    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.line.has_value() != b.line.has_value()) {
            return a.line.has_value();
        }
        return a.line.value_or(0) < b.line.value_or(0);
    });

    ValidationResult result;
    const bool failed = std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); });
    if (!failed && root) {
        RoleTreeParts parts{*root, std::move(tree_edges), {}};
        for (const auto& [r, perms] : perms_of) {
            parts.assignments.emplace_back(roles[r], perms);
        }
        result.tree = RoleTree::from_parts(parts);
    }
    result.diagnostics = std::move(diags);
    return result;
}

std::string serialize(const RoleTree& tree) {
    std::string out;
    for (RoleIndex r = 0; r < tree.size(); ++r) {
        for (const RoleIndex child : tree.children(r)) {
            out += "edge " + tree.id(r).str() + " " + tree.id(child).str() + "\n";
        }
    }
    for (RoleIndex r = 0; r < tree.size(); ++r) {
        if (!tree.is_leaf(r)) {
            continue;
        }
        out += "assign " + tree.id(r).str();
        for (const auto& perm : tree.direct_perms(r)) {
            out += " " + perm.str();
        }
        out += "\n";
    }
    return out;
}

} // namespace rbacsev
