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

#include "rbacsev/dot.hpp"

#include <sstream>

namespace rbacsev {

namespace {

std::string quoted(const std::string& text) {
    return '"' + text + '"';
}

std::string role_node(const RoleTree& tree, RoleIndex role) {
    return quoted("role:" + tree.id(role).str());
}

} // namespace

std::string to_dot(const RoleTree& tree, const Analysis& analysis, DotView view) {
    const auto& ext = analysis.weighted.extended();
    std::ostringstream out;
    out << "digraph roles {\n";
    out << "  node [shape=box];\n";

    for (RoleIndex r = 0; r < tree.size(); ++r) {
        out << "  " << role_node(tree, r) << " [label=\"" << tree.id(r).str() << " |RP|=" << analysis.closure.count(r)
            << "\"];\n";
    }

    auto weight_label = [&](VertexIndex v) {
        return view == DotView::tree ? std::string() : " [label=\"" + analysis.weighted.weight(v)->to_string() + "\"]";
    };

    if (view == DotView::extended) {
        for (VertexIndex v = tree.size(); v < ext.size(); ++v) {
            const auto& vert = ext.vertex(v);
            out << "  " << quoted("perm:" + tree.id(vert.role).str() + ":" + vert.permission->str())
                << " [shape=ellipse, label=\"" << vert.permission->str() << "\"];\n";
        }
    } else if (view == DotView::merged) {
        for (const auto& perm : analysis.closure.permissions()) {
            out << "  " << quoted("perm:" + perm.str()) << " [shape=ellipse, label=\"" << perm.str() << "\"];\n";
        }
    }

    for (RoleIndex r = 0; r < tree.size(); ++r) {
        for (const RoleIndex child : tree.children(r)) {
            out << "  " << role_node(tree, r) << " -> " << role_node(tree, child) << weight_label(child) << ";\n";
        }
    }
    if (view != DotView::tree) {
        for (VertexIndex v = tree.size(); v < ext.size(); ++v) {
            const auto& vert = ext.vertex(v);
            const std::string target = view == DotView::extended
                                           ? "perm:" + tree.id(vert.role).str() + ":" + vert.permission->str()
                                           : "perm:" + vert.permission->str();
            out << "  " << role_node(tree, vert.role) << " -> " << quoted(target) << weight_label(v) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace rbacsev
