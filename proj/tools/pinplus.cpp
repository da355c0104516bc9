// pinplus: evaluate, compare and cover manifold expressions; reproduce the
// reference tables.
//
// Exit codes: 0 success, 1 usage or parse error, 2 evaluation error,
// 3 table mismatch.

#include "pinplus/errors.hpp"
#include "pinplus/parser.hpp"
#include "pinplus/report.hpp"
#include "pinplus/tables.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

enum Exit { kOk = 0, kUsage = 1, kEval = 2, kMismatch = 3 };

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pin+ eta-invariant calculator for symbolic 4-manifold expressions"};
    app.require_subcommand(1);

    std::string format_name = "text";
    bool use_oracle = false;
    std::uint64_t max_enum = pinplus::kDefaultEnumerationBound;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--oracle", use_oracle, "Cross-check eta sets by brute-force enumeration");
    app.add_option("--max-enum", max_enum, "Enumeration bound for --oracle")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string expr_a;
    std::string expr_b;
    std::string target;
    auto* eval = app.add_subcommand("eval", "Report invariants of an expression");
    eval->add_option("expr", expr_a, "Expression")->required();
    auto* compare = app.add_subcommand("compare", "Homeomorphism and smooth verdicts for two expressions");
    compare->add_option("left", expr_a, "First expression")->required();
    compare->add_option("right", expr_b, "Second expression")->required();
    auto* cover = app.add_subcommand("cover", "Orientation double cover of an expression");
    cover->add_option("expr", expr_a, "Expression")->required();
    auto* tables = app.add_subcommand("tables", "Reproduce a reference table");
    std::vector<std::string> targets;
    for (auto t : pinplus::table_targets()) targets.emplace_back(t);
    tables->add_option("target", target, "Table id")->required()->check(CLI::IsMember(targets));

    for (auto* sub : {eval, compare, cover, tables}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const pinplus::Format format = *pinplus::format_from_name(format_name);
    const pinplus::ReportOptions opts{use_oracle, max_enum};

    auto parse = [](const std::string& text) {
        try {
            return pinplus::parse(text);
        } catch (const pinplus::ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            std::exit(kUsage);
        }
    };

    try {
        if (*eval) {
            std::cout << pinplus::report(parse(expr_a), format, opts);
        } else if (*compare) {
            std::cout << pinplus::compare_report(parse(expr_a), parse(expr_b), format, opts);
        } else if (*cover) {
            std::cout << pinplus::cover_report(parse(expr_a), format);
        } else if (*tables) {
            const pinplus::Table t = pinplus::reproduce(target);
            std::cout << pinplus::render_table(t, format);
            if (t.mismatches() != 0) {
                std::cerr << t.mismatches() << " row(s) deviate from the expected values\n";
                return kMismatch;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEval;
    }
    return kOk;
}
