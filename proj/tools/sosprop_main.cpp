#include "sosprop/cli.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace {

sosprop::Shape shape_option(const std::string& text)
{
    return sosprop::parse_shape(text);
}

std::vector<sosprop::Shape> type_list(const std::vector<std::string>& items)
{
    std::vector<sosprop::Shape> out;
    for (const auto& item : items) {
        if (item == "nonexistent" || item == "table1") {
            for (auto t : sosprop::bench_nonexistent_types()) out.push_back(t);
        } else if (item == "existent" || item == "table2") {
            for (auto t : sosprop::bench_existent_types()) out.push_back(t);
        } else {
            out.push_back(shape_option(item));
        }
    }
    return out;
}

std::vector<sosprop::Strategy> strategy_list(const std::string& text)
{
    std::vector<sosprop::Strategy> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(sosprop::parse_strategy(item));
    if (out.empty()) throw std::invalid_argument("empty strategy list");
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Search for integer sums-of-squares formulas as consistently signed intercalate matrices"};
    app.require_subcommand(1);

    std::string type, input, strategy = "v1", signature, start = "canonical", format = "text";
    std::uint64_t budget_nodes = 100'000'000;
    double budget_seconds = 600.0;
    bool trace = false, no_timings = false;
    std::string known_values = sosprop::default_known_values_path().string();

    auto* solve = app.add_subcommand("solve", "Complete a matrix of the given type");
    solve->add_option("--type", type, "r,s,n")->required();
    solve->add_option("--input", input, "Partial matrix file; '*' for unknown cells, '±c' for color-only cells");
    solve->add_option("--start", start, "Seed when no input is given: canonical or first-row")->capture_default_str();
    solve->add_option("--strategy", strategy, "v1 or v2")->capture_default_str();
    solve->add_option("--signature", signature, "Minimum signature file of 'color bound' pairs, or 'default'");
    solve->add_option("--budget-seconds", budget_seconds)->capture_default_str();
    solve->add_option("--budget-nodes", budget_nodes)->capture_default_str();
    solve->add_option("--format", format, "text or record")->capture_default_str();
    solve->add_flag("--trace", trace, "Write every assignment and elimination to stderr");
    solve->add_flag("--no-timings", no_timings, "Omit wall-clock times");

    std::vector<std::string> bench_types{"nonexistent", "existent"};
    std::string bench_strategies = "v1,v2";
    int repeats = 10;
    auto* bench = app.add_subcommand("bench", "Time the run-time table types");
    bench->add_option("--types", bench_types, "r,s,n items, or the presets 'nonexistent' and 'existent'")
        ->capture_default_str();
    bench->add_option("--strategies", bench_strategies)->capture_default_str();
    bench->add_option("--repeats", repeats)->capture_default_str();
    bench->add_option("--budget-seconds", budget_seconds)->capture_default_str();
    bench->add_option("--budget-nodes", budget_nodes)->capture_default_str();
    bench->add_option("--known-values", known_values)->capture_default_str();
    bench->add_flag("--no-timings", no_timings, "Omit wall-clock times");

    int max_r = 9, max_s = 9;
    auto* check = app.add_subcommand("table-check", "Probe known values: existence at n, nonexistence at n-1");
    check->add_option("--max-r", max_r)->capture_default_str();
    check->add_option("--max-s", max_s)->capture_default_str();
    check->add_option("--strategy", strategy)->capture_default_str();
    check->add_option("--budget-seconds", budget_seconds)->capture_default_str();
    check->add_option("--budget-nodes", budget_nodes)->capture_default_str();
    check->add_option("--known-values", known_values)->capture_default_str();
    check->add_flag("--no-timings", no_timings, "Omit wall-clock times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sosprop::kExitBadInput;
    }

    try {
        if (*solve) {
            sosprop::SolveRequest req;
            req.shape = shape_option(type);
            if (!input.empty()) req.input = input;
            req.start = sosprop::parse_start_form(start);
            req.strategy = sosprop::parse_strategy(strategy);
            if (!signature.empty() && signature != "default") req.signature = signature;
            if (signature == "default" && req.strategy != sosprop::Strategy::V2)
                throw std::invalid_argument("--signature needs --strategy v2");
            req.max_nodes = budget_nodes;
            req.max_seconds = budget_seconds;
            req.format = sosprop::parse_output_format(format);
            req.trace = trace;
            req.timings = !no_timings;
            return sosprop::cmd_solve(req, std::cout, std::cerr);
        }
        if (*bench) {
            sosprop::BenchRequest req;
            req.types = type_list(bench_types);
            req.strategies = strategy_list(bench_strategies);
            req.repeats = repeats;
            req.max_nodes = budget_nodes;
            req.max_seconds = budget_seconds;
            req.known_values = known_values;
            req.timings = !no_timings;
            return sosprop::cmd_bench(req, std::cout, std::cerr);
        }
        sosprop::TableCheckRequest req;
        req.max_r = max_r;
        req.max_s = max_s;
        req.strategy = sosprop::parse_strategy(strategy);
        req.max_nodes = budget_nodes;
        req.max_seconds = budget_seconds;
        req.known_values = known_values;
        req.timings = !no_timings;
        return sosprop::cmd_table_check(req, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sosprop::kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return sosprop::kExitInternal;
    }
}
