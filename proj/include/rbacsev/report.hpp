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
#include <vector>

#include "rbacsev/analysis.hpp"
#include "rbacsev/rational.hpp"

namespace rbacsev {

enum class OutputFormat { table, csv, json };

/// How severities are printed: exact fractions or rounded decimals.
struct NumberStyle {
    bool exact = false;
    int precision = 4;

    std::string render(const Rational& value) const {
        return exact ? value.to_string() : value.to_decimal(precision);
    }
};

/// One row per permission in ranking order:
/// permission, severity, num_roles, min_level, max_level.
std::string format_analysis(const Analysis& analysis, OutputFormat format, const NumberStyle& style);

/// rank, permission, severity.
std::string format_ranking(const Analysis& analysis, OutputFormat format, const NumberStyle& style);

/// One line per path plus a total line.
std::string format_explain(const std::vector<PathContribution>& paths, const NumberStyle& style);

} // namespace rbacsev
