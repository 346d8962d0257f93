#include "sosprop/cli.hpp"

#include "sosprop/canonical.hpp"
#include "sosprop/formula.hpp"
#include "sosprop/propagation.hpp"
#include "sosprop/verification.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sosprop {

namespace {

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string type_label(const Shape& shape)
{
    return "(" + std::to_string(shape.rows) + "," + std::to_string(shape.cols) + "," + std::to_string(shape.colors) + ")";
}

std::string fixed(double seconds)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << seconds;
    return out.str();
}

nlohmann::ordered_json stats_record(const SearchStats& stats, bool timings)
{
    nlohmann::ordered_json j;
    j["nodes"] = stats.nodes;
    j["propagations"] = stats.propagations;
    j["eliminations"] = stats.eliminations;
    j["assignments"] = stats.assignments;
    j["backtracks"] = stats.backtracks;
    j["max_depth"] = stats.max_depth;
    if (timings) j["seconds"] = stats.seconds;
    return j;
}

void print_stats(std::ostream& err, const SearchStats& stats, bool timings)
{
    err << "nodes=" << stats.nodes << " propagations=" << stats.propagations << " eliminations=" << stats.eliminations
        << " assignments=" << stats.assignments << " backtracks=" << stats.backtracks << " max_depth=" << stats.max_depth;
    if (timings) err << " seconds=" << fixed(stats.seconds);
    err << '\n';
}

bool verdict_matches(Verdict verdict, KnownValuesTable::Expectation expected)
{
    using E = KnownValuesTable::Expectation;
    if (expected == E::Exists) return verdict == Verdict::Found;
    if (expected == E::Nonexistent) return verdict == Verdict::Nonexistent;
    return false;
}

std::vector<Shape> shapes(std::initializer_list<std::array<int, 3>> list)
{
    std::vector<Shape> out;
    for (const auto& t : list) out.push_back(Shape{t[0], t[1], t[2]});
    return out;
}

}  // namespace

std::string_view to_string(StartForm form)
{
    return form == StartForm::Canonical ? "canonical" : "first-row";
}

StartForm parse_start_form(std::string_view text)
{
    if (text == "canonical") return StartForm::Canonical;
    if (text == "first-row") return StartForm::FirstRow;
    throw std::invalid_argument("start form must be canonical or first-row, got '" + std::string(text) + "'");
}

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "text") return OutputFormat::Text;
    if (text == "record") return OutputFormat::Record;
    throw std::invalid_argument("format must be text or record, got '" + std::string(text) + "'");
}

std::optional<MatrixState> starting_state(Shape shape, StartForm form)
{
    if (canonical_input_rejection(shape.rows, shape.cols, shape.colors)) return std::nullopt;
    if (form == StartForm::Canonical) return canonical_input(shape.rows, shape.cols, shape.colors);
    MatrixState state(shape.rows, shape.cols, shape.colors);
    for (int j = 0; j < shape.cols; ++j) {
        if (!assign(state, Coordinate{0, j}, SignedValue(Color{j + 1}, 1))) return std::nullopt;
    }
    if (!propagate(state)) return std::nullopt;
    return state;
}

SearchOutcome solve_from(const std::optional<MatrixState>& start, const SearchOptions& options)
{
    if (!start) return SearchOutcome{};
    return complete_matrix(*start, options);
}

int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err)
{
    const Shape& shape = request.shape;
    std::optional<MatrixState> start;
    SearchOptions options;
    std::optional<TraceWriter> trace;
    if (request.trace) {
        trace.emplace(err);
        options.trace = &*trace;
    }
    try {
        if (shape.rows < 1 || shape.cols < 1 || shape.colors < 1 || shape.colors > kMaxColors)
            throw std::invalid_argument("type " + to_string(shape) + " needs positive parameters and n <= " +
                                        std::to_string(kMaxColors));
        options.strategy = request.strategy;
        options.max_nodes = request.max_nodes;
        options.max_seconds = request.max_seconds;
        if (request.signature) {
            if (request.strategy != Strategy::V2) throw std::invalid_argument("--signature needs --strategy v2");
            options.signature = MinimumSignature::parse(shape, read_file(*request.signature));
        }

        if (request.input) {
            const MatrixText text = parse_matrix_text(read_file(*request.input));
            MatrixState state(shape.rows, shape.cols, shape.colors);
            state.set_observer(options.trace);
            if (apply_constraints(state, text) && propagate(state)) {
                state.set_observer(nullptr);
                start = std::move(state);
            }
        } else if (auto why = canonical_input_rejection(shape.rows, shape.cols, shape.colors)) {
            err << *why << '\n';
        } else {
            start = starting_state(shape, request.start);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    const SearchOutcome outcome = solve_from(start, options);

    std::optional<SosFormula> formula;
    if (outcome.verdict == Verdict::Found) {
        formula = matrix_to_formula(Grid::from_state(*outcome.matrix), shape.colors);
        if (!verify_identity(*formula)) {
            err << "internal error: formula identity fails for the found matrix\n";
            return kExitInternal;
        }
    }

    if (request.format == OutputFormat::Record) {
        nlohmann::ordered_json j;
        j["type"] = {shape.rows, shape.cols, shape.colors};
        j["strategy"] = std::string(to_string(request.strategy));
        j["verdict"] = std::string(to_string(outcome.verdict));
        if (formula) {
            const Grid grid = Grid::from_state(*outcome.matrix);
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int i = 0; i < grid.rows(); ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int k = 0; k < grid.cols(); ++k) row.push_back(grid.at(i, k)->as_int());
                rows.push_back(row);
            }
            j["matrix"] = rows;
            j["formula"] = formula_record(*formula)["z"];
        }
        j["stats"] = stats_record(outcome.stats, request.timings);
        out << j.dump() << '\n';
    } else {
        switch (outcome.verdict) {
        case Verdict::Found:
            out << format_matrix(*outcome.matrix) << '\n' << format_formula(*formula);
            break;
        case Verdict::Nonexistent: out << "NONEXISTENT\n"; break;
        case Verdict::BudgetExhausted: out << "BUDGET EXHAUSTED\n"; break;
        }
        print_stats(err, outcome.stats, request.timings);
    }

    switch (outcome.verdict) {
    case Verdict::Found: return kExitFound;
    case Verdict::Nonexistent: return kExitNonexistent;
    case Verdict::BudgetExhausted: return kExitBudget;
    }
    return kExitInternal;
}

std::vector<Shape> bench_nonexistent_types()
{
    return shapes({{2, 3, 3}, {2, 5, 5}, {2, 7, 7}, {2, 9, 9}, {3, 3, 3}, {3, 5, 6}, {3, 6, 7},
                   {3, 7, 7}, {3, 9, 10}, {4, 5, 7}, {4, 6, 7}, {4, 7, 7}, {4, 9, 11}, {5, 5, 7},
                   {5, 6, 7}, {5, 7, 7}, {6, 6, 7}, {6, 7, 7}, {7, 7, 7}});
}

std::vector<Shape> bench_existent_types()
{
    return shapes({{2, 3, 4}, {2, 4, 4}, {2, 5, 6}, {2, 6, 6}, {2, 7, 8}, {2, 8, 8}, {2, 9, 10},
                   {3, 3, 4}, {3, 4, 4}, {3, 5, 7}, {3, 6, 8}, {3, 7, 8}, {3, 8, 8}, {3, 9, 11},
                   {4, 4, 4}, {4, 5, 8}, {4, 6, 8}, {4, 7, 8}, {4, 8, 8}, {4, 9, 12}, {5, 5, 8},
                   {5, 6, 8}, {5, 7, 8}, {5, 8, 8}, {6, 6, 8}, {6, 7, 8}, {6, 8, 8}, {7, 7, 8},
                   {7, 8, 8}, {7, 9, 15}, {8, 8, 8}, {8, 9, 16}, {9, 9, 16}});
}

std::vector<BenchRow> run_bench(const BenchRequest& request, const KnownValuesTable& table,
                                const std::function<void(const BenchRow&)>& on_row)
{
    if (request.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    std::vector<BenchRow> rows;
    for (const Shape& shape : request.types) {
        const auto start = starting_state(shape, StartForm::Canonical);
        for (Strategy strategy : request.strategies) {
            SearchOptions options;
            options.strategy = strategy;
            options.max_nodes = request.max_nodes;
            options.max_seconds = request.max_seconds;

            BenchRow row;
            row.shape = shape;
            row.strategy = strategy;
            row.expected = table.expectation(shape.rows, shape.cols, shape.colors);
            double total = 0.0;
            for (int k = 0; k < request.repeats; ++k) {
                const SearchOutcome outcome = solve_from(start, options);
                total += outcome.stats.seconds;
                if (k == 0) {
                    row.verdict = outcome.verdict;
                    row.nodes = outcome.stats.nodes;
                } else if (outcome.verdict != row.verdict || outcome.stats.nodes != row.nodes) {
                    throw std::logic_error("search is not deterministic on " + to_string(shape));
                }
                if (outcome.verdict == Verdict::BudgetExhausted) break;
            }
            row.mean_seconds = total / request.repeats;
            row.matches = verdict_matches(row.verdict, row.expected);
            rows.push_back(row);
            if (on_row) on_row(row);
        }
    }
    return rows;
}

int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err)
{
    KnownValuesTable table;
    try {
        table = KnownValuesTable::load(request.known_values);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    out << std::left << std::setw(12) << "type" << std::setw(6) << "alg" << std::setw(18) << "verdict" << std::setw(13)
        << "expected" << std::setw(12) << "nodes";
    if (request.timings) out << std::setw(12) << "mean_s";
    out << "match\n";
    bool mismatch = false, exhausted = false;
    run_bench(request, table, [&](const BenchRow& row) {
        out << std::left << std::setw(12) << type_label(row.shape) << std::setw(6) << to_string(row.strategy)
            << std::setw(18) << to_string(row.verdict) << std::setw(13) << to_string(row.expected) << std::setw(12)
            << row.nodes;
        if (request.timings) out << std::setw(12) << fixed(row.mean_seconds);
        out << (row.matches ? "yes" : "NO") << '\n'
            << std::flush;
        if (!row.matches) (row.verdict == Verdict::BudgetExhausted ? exhausted : mismatch) = true;
    });
    if (mismatch) return 1;
    return exhausted ? 2 : 0;
}

std::string_view to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<TableProbe> run_table_check(const TableCheckRequest& request, const KnownValuesTable& table,
                                        const std::function<void(const TableProbe&)>& on_probe)
{
    SearchOptions options;
    options.strategy = request.strategy;
    options.max_nodes = request.max_nodes;
    options.max_seconds = request.max_seconds;

    std::vector<TableProbe> probes;
    auto run = [&](int r, int s, int n, bool expect_found) {
        TableProbe p;
        p.r = r;
        p.s = s;
        p.n = n;
        p.expect_found = expect_found;
        if (n < std::max(r, s)) {
            p.trivial = true;
            p.verdict = Verdict::Nonexistent;
        } else {
            const SearchOutcome outcome = solve_from(starting_state(Shape{r, s, n}, StartForm::Canonical), options);
            p.verdict = outcome.verdict;
            p.nodes = outcome.stats.nodes;
            p.seconds = outcome.stats.seconds;
            if (outcome.matrix) p.matrix = Grid::from_state(*outcome.matrix);
        }
        if (p.verdict == Verdict::BudgetExhausted)
            p.status = CheckStatus::Inconclusive;
        else
            p.status = (p.verdict == Verdict::Found) == expect_found ? CheckStatus::Pass : CheckStatus::Fail;
        probes.push_back(p);
        if (on_probe) on_probe(probes.back());
    };

    for (int r = 1; r <= request.max_r; ++r) {
        for (int s = r; s <= request.max_s; ++s) {
            const auto entry = table.lookup(r, s);
            if (!entry) continue;
            if (entry->exact && entry->n - 1 >= 1) run(r, s, entry->n - 1, false);
            run(r, s, entry->n, true);
        }
    }
    return probes;
}

int cmd_table_check(const TableCheckRequest& request, std::ostream& out, std::ostream& err)
{
    KnownValuesTable table;
    try {
        table = KnownValuesTable::load(request.known_values);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    run_table_check(request, table, [&](const TableProbe& p) {
        out << std::left << std::setw(12) << type_label(Shape{p.r, p.s, p.n}) << "expect "
            << std::setw(12) << (p.expect_found ? "found" : "nonexistent") << "got " << std::setw(17)
            << to_string(p.verdict) << std::setw(13) << to_string(p.status);
        if (p.trivial)
            out << "n < max(r,s)";
        else {
            out << "nodes=" << p.nodes;
            if (request.timings) out << " seconds=" << fixed(p.seconds);
        }
        out << '\n' << std::flush;
        switch (p.status) {
        case CheckStatus::Pass: ++pass; break;
        case CheckStatus::Fail: ++fail; break;
        case CheckStatus::Inconclusive: ++inconclusive; break;
        }
    });
    out << "pass=" << pass << " fail=" << fail << " inconclusive=" << inconclusive << '\n';
    if (fail > 0) return 1;
    return inconclusive > 0 ? 2 : 0;
}

}  // namespace sosprop
