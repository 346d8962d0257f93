#pragma once

#include "sosprop/known_values.hpp"
#include "sosprop/matrix_model.hpp"
#include "sosprop/search.hpp"
#include "sosprop/verification.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sosprop {

// Exit statuses shared by every command.
inline constexpr int kExitFound = 0;
inline constexpr int kExitNonexistent = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitBadInput = 3;
inline constexpr int kExitInternal = 4;

/// How a run is seeded when no input file is given.
enum class StartForm {
    Canonical,  // first row 1..s plus ceil(rs/n) ones on the diagonal
    FirstRow,   // first row 1..s only
};

std::string_view to_string(StartForm form);
StartForm parse_start_form(std::string_view text);

enum class OutputFormat { Text, Record };

OutputFormat parse_output_format(std::string_view text);

/// The propagated starting state for `form`. nullopt means no CSIM of this shape
/// exists at all: either n < max(r,s) or propagation already contradicts.
std::optional<MatrixState> starting_state(Shape shape, StartForm form);

/// complete_matrix on `start`, treating a missing start as Nonexistent.
SearchOutcome solve_from(const std::optional<MatrixState>& start, const SearchOptions& options);

struct SolveRequest {
    Shape shape;
    std::optional<std::filesystem::path> input;
    StartForm start = StartForm::Canonical;
    /// File with "color bound" pairs; unset with V2 means the default signature.
    std::optional<std::filesystem::path> signature;
    Strategy strategy = Strategy::V1;
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
    OutputFormat format = OutputFormat::Text;
    bool trace = false;
    /// Timing lines are written to `err` unless this is false.
    bool timings = true;
};

/// Prints the matrix and its verified formula, "NONEXISTENT" or "BUDGET EXHAUSTED".
/// Returns kExitFound / kExitNonexistent / kExitBudget, or kExitBadInput with a
/// diagnostic on `err`. Trace lines go to `err`.
int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err);

/// Types from the run-time tables: largest nonexistent n, then smallest existent n.
std::vector<Shape> bench_nonexistent_types();
std::vector<Shape> bench_existent_types();

struct BenchRequest {
    std::vector<Shape> types;
    std::vector<Strategy> strategies{Strategy::V1, Strategy::V2};
    int repeats = 10;
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
    std::filesystem::path known_values = default_known_values_path();
    bool timings = true;
};

struct BenchRow {
    Shape shape;
    Strategy strategy = Strategy::V1;
    Verdict verdict = Verdict::Nonexistent;
    KnownValuesTable::Expectation expected = KnownValuesTable::Expectation::Unknown;
    std::uint64_t nodes = 0;
    double mean_seconds = 0.0;
    bool matches = false;  // exists <-> found, nonexistent <-> nonexistent
};

/// Runs each (type, strategy) cell `repeats` times from the canonical input with the
/// default signature for V2.
std::vector<BenchRow> run_bench(const BenchRequest& request, const KnownValuesTable& table,
                                const std::function<void(const BenchRow&)>& on_row = {});

/// Prints one line per cell; exit 0 when every verdict matches the table, 1 on a
/// mismatch, 2 when the only problems are exhausted budgets.
int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err);

struct TableCheckRequest {
    int max_r = 9;
    int max_s = 9;
    Strategy strategy = Strategy::V1;
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
    std::filesystem::path known_values = default_known_values_path();
    bool timings = true;
};

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string_view to_string(CheckStatus status);

struct TableProbe {
    int r = 0;
    int s = 0;
    int n = 0;
    bool expect_found = true;
    Verdict verdict = Verdict::Nonexistent;
    CheckStatus status = CheckStatus::Pass;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    bool trivial = false;  // settled by n < max(r,s) without searching
    std::optional<Grid> matrix;
};

/// For each r <= s within bounds with a table entry: existence at the entry, and
/// for exact entries nonexistence one below it.
std::vector<TableProbe> run_table_check(const TableCheckRequest& request, const KnownValuesTable& table,
                                        const std::function<void(const TableProbe&)>& on_probe = {});

/// Exit 0 when every probe passes, 1 on any failure, 2 when only inconclusive.
int cmd_table_check(const TableCheckRequest& request, std::ostream& out, std::ostream& err);

}  // namespace sosprop
