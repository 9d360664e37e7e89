#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/report.hpp"

namespace {

constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 25;

ramsey::OutputFormat format_or_die(const std::string& name) {
    auto f = ramsey::parse_format(name);
    if (!f) {
        std::cerr << "unknown format '" << name << "' (markdown|csv|json)\n";
        std::exit(2);
    }
    return *f;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pigeonhole bounds on multicolor Ramsey numbers"};
    app.require_subcommand(1);

    std::string format = "markdown";

    auto* bound = app.add_subcommand("bound", "Bound report for one signature");
    std::vector<int> entries;
    bound->add_option("entries", entries, "Clique targets, each >= 2")->required();
    bound->add_option("--format", format, "markdown|csv|json")->capture_default_str();

    auto* table = app.add_subcommand("table", "The six-row diagonal bound table");
    table->add_option("--format", format, "markdown|csv|json")->capture_default_str();

    auto* ratio = app.add_subcommand("ratio", "Asymptotic ratio report");
    int r_max = 6;
    int k = 4;
    int d = 4;
    ratio->add_option("r_max", r_max, "Largest color count")->capture_default_str();
    ratio->add_option("k", k, "Diagonal clique target")->capture_default_str();
    ratio->add_option("--format", format, "markdown|csv|json")->capture_default_str();
    ratio->add_option("--d", d, "Offset d in the improved constant (3+e)/2 - d/48")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    std::uint64_t budget = kDefaultBudget;
    bool force = false;
    verify->add_option("suite", suite, "pigeonhole|oracle|search|all")->required();
    verify->add_option("--budget", budget, "Search budget (edge placements)")
        ->capture_default_str();
    verify->add_flag("--force", force, "Run searches whose space exceeds the budget");

    CLI11_PARSE(app, argc, argv);

    try {
        ramsey::OutputFormat f = format_or_die(format);
        if (*bound) {
            std::vector<ramsey::BoundRow> rows{ramsey::make_bound_row(entries)};
            std::cout << ramsey::render_bounds(rows, f, /*verify_columns=*/true);
        } else if (*table) {
            std::cout << ramsey::render_bounds(ramsey::table_rows(), f,
                                               /*verify_columns=*/false);
        } else if (*ratio) {
            std::cout << ramsey::render_ratio(ramsey::ratio_rows(r_max, k),
                                              ramsey::asympt_constants(d), f);
        } else if (*verify) {
            bool ok = false;
            if (suite == "pigeonhole")
                ok = ramsey::verify_pigeonhole(std::cout);
            else if (suite == "oracle")
                ok = ramsey::verify_oracle(std::cout);
            else if (suite == "search")
                ok = ramsey::verify_search(std::cout, budget, force);
            else if (suite == "all")
                ok = ramsey::verify_all(std::cout, budget, force);
            else {
                std::cerr << "unknown suite '" << suite
                          << "' (pigeonhole|oracle|search|all)\n";
                return 2;
            }
            return ok ? 0 : 1;
        }
    } catch (const ramsey::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
