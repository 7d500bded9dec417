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

#include <string>

#include "rbacsev/analysis.hpp"
#include "rbacsev/model.hpp"

namespace rbacsev {

enum class DotView {
    tree,     // roles only
    extended, // one permission vertex per (leaf, permission)
    merged,   // one shared vertex per permission
};

/// Graphviz digraph. Role vertices are labelled `<id> |RP|=<count>`; in the
/// extended and merged views each edge carries the weight of its target.
std::string to_dot(const RoleTree& tree, const Analysis& analysis, DotView view);

} // namespace rbacsev
