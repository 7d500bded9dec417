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

#include <iosfwd>
#include <string>
#include <vector>

namespace rbacsev::cli {

/// Exit statuses of the `rbac-sev` tool.
enum ExitStatus : int {
    exit_ok = 0,
    exit_failure = 1,            // I/O, syntax or usage error
    exit_invalid_policy = 2,     // validation diagnostics
    exit_unknown_permission = 3, // explain on a permission that does not occur
};

/// Runs the tool. `args` includes the program name. `in` backs the `-` path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rbacsev::cli
