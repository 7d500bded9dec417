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

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#include "rbacsev/parser.hpp"

namespace rbacsev::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(RBACSEV_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) {
        throw std::runtime_error("missing fixture " + name);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline RoleTree tree_from_text(const std::string& text) {
    auto result = validate(parse(text));
    if (!result.ok()) {
        throw std::runtime_error("fixture does not validate: " + result.diagnostics.front().format());
    }
    return *result.tree;
}

inline RoleTree paper_tree() {
    return tree_from_text(read_fixture("paper_example.policy"));
}

} // namespace rbacsev::testing
