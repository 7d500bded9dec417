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

#include "rbacsev/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace rbacsev {

namespace {

using Row = std::vector<std::string>;

std::string render_table(const Row& header, const std::vector<Row>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        widths[c] = header[c].size();
        for (const auto& row : rows) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    auto emit = [&](const Row& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) {
                out.append(widths[c] - row[c].size() + 2, ' ');
            }
        }
        out += '\n';
    };
    emit(header);
    for (const auto& row : rows) {
        emit(row);
    }
    return out;
}

std::string render_csv(const Row& header, const std::vector<Row>& rows) {
    // Ids never contain separators or quotes, so no field needs quoting.
    std::string out;
    auto emit = [&](const Row& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += row[c];
        }
        out += '\n';
    };
    emit(header);
    for (const auto& row : rows) {
        emit(row);
    }
    return out;
}

nlohmann::ordered_json severity_json(const Rational& value, const NumberStyle& style) {
    if (style.exact) {
        return value.to_string();
    }
    return std::stod(value.to_decimal(style.precision));
}

} // namespace

std::string format_analysis(const Analysis& analysis, OutputFormat format, const NumberStyle& style) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["permissions"] = nlohmann::ordered_json::array();
        for (const auto& p : analysis.profiles) {
            nlohmann::ordered_json row;
            row["permission"] = p.permission.str();
            row["severity"] = severity_json(p.severity, style);
            row["severity_exact"] = p.severity.to_string();
            row["num_roles"] = p.num_roles;
            row["min_level"] = p.min_level;
            row["max_level"] = p.max_level;
            doc["permissions"].push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }

    const Row header{"permission", "severity", "num_roles", "min_level", "max_level"};
    std::vector<Row> rows;
    for (const auto& p : analysis.profiles) {
        rows.push_back({p.permission.str(), style.render(p.severity), std::to_string(p.num_roles),
                        std::to_string(p.min_level), std::to_string(p.max_level)});
    }
    return format == OutputFormat::csv ? render_csv(header, rows) : render_table(header, rows);
}

std::string format_ranking(const Analysis& analysis, OutputFormat format, const NumberStyle& style) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["ranking"] = nlohmann::ordered_json::array();
        std::size_t rank = 0;
        for (const auto& p : analysis.profiles) {
            nlohmann::ordered_json row;
            row["rank"] = ++rank;
            row["permission"] = p.permission.str();
            row["severity"] = severity_json(p.severity, style);
            row["severity_exact"] = p.severity.to_string();
            doc["ranking"].push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }

    const Row header{"rank", "permission", "severity"};
    std::vector<Row> rows;
    std::size_t rank = 0;
    for (const auto& p : analysis.profiles) {
        rows.push_back({std::to_string(++rank), p.permission.str(), style.render(p.severity)});
    }
    return format == OutputFormat::csv ? render_csv(header, rows) : render_table(header, rows);
}

std::string format_explain(const std::vector<PathContribution>& paths, const NumberStyle& style) {
    auto value = [&](const Rational& v) {
        return style.exact ? v.to_string() : v.to_string() + " (" + v.to_decimal(style.precision) + ")";
    };
    std::ostringstream out;
    Rational total(0);
    for (const auto& path : paths) {
        for (const auto& role : path.roles) {
            out << role.str() << " -> ";
        }
        out << '[' << path.permission.str() << "] : " << value(path.product) << '\n';
        total += path.product;
    }
    out << "total : " << value(total) << '\n';
    return out.str();
}

} // namespace rbacsev
