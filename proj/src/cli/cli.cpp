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

#include "rbacsev/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rbacsev/analysis.hpp"
#include "rbacsev/dot.hpp"
#include "rbacsev/error.hpp"
#include "rbacsev/generator.hpp"
#include "rbacsev/parser.hpp"
#include "rbacsev/report.hpp"

namespace rbacsev::cli {

namespace {

struct InputOptions {
    std::string path;
    OutputFormat format = OutputFormat::table;
    int precision = 4;
    bool exact = false;

    NumberStyle style() const { return NumberStyle{exact, precision}; }
};

// A validated tree, or the exit status explaining why there is none.
struct Loaded {
    std::optional<RoleTree> tree;
    int status = exit_ok;
};

Loaded load_policy(const std::string& path, std::istream& in, std::ostream& err) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << path << "'\n";
            return {std::nullopt, exit_failure};
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        if (file.bad()) {
            err << "error: failed reading '" << path << "'\n";
            return {std::nullopt, exit_failure};
        }
    }

    PolicyDocument doc;
    try {
        doc = parse(text);
    } catch (const SyntaxError& e) {
        err << to_string(DiagnosticCode::syntax) << ':' << e.line() << ": " << e.what() << '\n';
        return {std::nullopt, exit_failure};
    }

    auto result = validate(doc);
    for (const auto& d : result.diagnostics) {
        err << d.format() << '\n';
    }
    if (!result.ok()) {
        return {std::nullopt, exit_invalid_policy};
    }
    return {std::move(result.tree), exit_ok};
}

void add_input_options(CLI::App& cmd, InputOptions& opts, bool with_format) {
    cmd.add_option("path", opts.path, "Policy file, or - for standard input")->required();
    if (with_format) {
        const std::map<std::string, OutputFormat> formats{
            {"table", OutputFormat::table}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
        cmd.add_option("--format", opts.format, "Output format: table, csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    }
    auto* precision =
        cmd.add_option("--precision", opts.precision, "Decimal digits for severities (1-12)")->check(CLI::Range(1, 12));
    cmd.add_flag("--exact", opts.exact, "Print severities as exact fractions")->excludes(precision);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Severity levels of permissions in a hierarchical RBAC policy", "rbac-sev"};
    app.require_subcommand(1);

    InputOptions validate_opts;
    auto* validate_cmd = app.add_subcommand("validate", "Check a policy and print a summary");
    validate_cmd->add_option("path", validate_opts.path, "Policy file, or - for standard input")->required();

    InputOptions analyze_opts;
    auto* analyze_cmd = app.add_subcommand("analyze", "Severity, carrier count and level span per permission");
    add_input_options(*analyze_cmd, analyze_opts, true);

    InputOptions rank_opts;
    auto* rank_cmd = app.add_subcommand("rank", "Permissions ordered by severity");
    add_input_options(*rank_cmd, rank_opts, true);

    InputOptions explain_opts;
    std::string explain_perm;
    auto* explain_cmd = app.add_subcommand("explain", "Per-path breakdown of one permission's severity");
    add_input_options(*explain_cmd, explain_opts, false);
    explain_cmd->add_option("--perm", explain_perm, "Permission id")->required();

    GenParams gen_params;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random valid policy");
    gen_cmd->add_option("--roles", gen_params.roles, "Number of roles")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--perms", gen_params.perms, "Number of permissions")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-children", gen_params.max_children, "Children per role (default 4)")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-leaf-perms", gen_params.max_leaf_perms, "Permissions per leaf (default 5)")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_params.seed, "PRNG seed");

    InputOptions dot_opts;
    DotView dot_view = DotView::tree;
    auto* dot_cmd = app.add_subcommand("dot", "Graphviz export of the role hierarchy");
    dot_cmd->add_option("path", dot_opts.path, "Policy file, or - for standard input")->required();
    const std::map<std::string, DotView> views{
        {"tree", DotView::tree}, {"extended", DotView::extended}, {"merged", DotView::merged}};
    dot_cmd->add_option("--view", dot_view, "tree, extended or merged")
        ->transform(CLI::CheckedTransformer(views, CLI::ignore_case));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_failure;
    }

    try {
        if (*gen_cmd) {
            out << generate_policy(gen_params);
            return exit_ok;
        }

        const std::string& path = *validate_cmd ? validate_opts.path
                                  : *analyze_cmd ? analyze_opts.path
                                  : *rank_cmd    ? rank_opts.path
                                  : *explain_cmd ? explain_opts.path
                                                 : dot_opts.path;
        auto loaded = load_policy(path, in, err);
        if (!loaded.tree) {
            return loaded.status;
        }
        const RoleTree& tree = *loaded.tree;

        if (*validate_cmd) {
            const auto closure = compute_closure(tree);
            out << "ok: " << tree.size() << " roles, " << closure.permissions().size() << " permissions, depth "
                << tree.height() << '\n';
            return exit_ok;
        }

        const auto analysis = analyze(tree);
        if (*analyze_cmd) {
            out << format_analysis(analysis, analyze_opts.format, analyze_opts.style());
        } else if (*rank_cmd) {
            out << format_ranking(analysis, rank_opts.format, rank_opts.style());
        } else if (*explain_cmd) {
            try {
                out << format_explain(explain(analysis.report, PermissionId(explain_perm)), explain_opts.style());
            } catch (const UnknownPermission& e) {
                err << "error: " << e.what() << '\n';
                return exit_unknown_permission;
            }
        } else {
            out << to_dot(tree, analysis, dot_view);
        }
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace rbacsev::cli
