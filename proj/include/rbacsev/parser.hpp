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
#include <string>
#include <string_view>
#include <vector>

#include "rbacsev/model.hpp"

namespace rbacsev {

struct EdgeEntry {
    RoleId parent;
    RoleId child;
    std::size_t line = 0;
};

struct AssignEntry {
    RoleId leaf;
    std::vector<PermissionId> perms;
    std::size_t line = 0;
};

/// Raw parse result. Not yet checked for tree structure; see validate().
struct PolicyDocument {
    std::vector<EdgeEntry> edges;
    std::vector<AssignEntry> assignments;
};

enum class DiagnosticSeverity { error, warning };

enum class DiagnosticCode {
    syntax,
    multi_parent,
    cycle,
    multi_root,
    no_root,
    assign_internal,
    leaf_no_perms,
    unknown_role,
    duplicate_assign,
};

/// Stable token such as "multi-parent".
std::string_view to_string(DiagnosticCode code) noexcept;

struct Diagnostic {
    DiagnosticSeverity severity = DiagnosticSeverity::error;
    DiagnosticCode code = DiagnosticCode::syntax;
    std::optional<std::size_t> line;
    std::string message;

    bool is_error() const noexcept { return severity == DiagnosticSeverity::error; }

    /// `<code>:<line>: <message>`, with `-` when there is no line.
    std::string format() const;
};

/// Either a tree (possibly with warnings) or at least one error diagnostic.
struct ValidationResult {
    std::optional<RoleTree> tree;
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept { return tree.has_value(); }
};

/// Line-oriented parse. LF or CRLF; `#` starts a comment.
/// Throws SyntaxError on the first malformed line.
PolicyDocument parse(std::string_view text);

/// Reports every structural problem at once, in a deterministic order.
ValidationResult validate(const PolicyDocument& doc);

/// Canonical text: edges in depth-first order, then assignments in leaf order.
std::string serialize(const RoleTree& tree);

} // namespace rbacsev
