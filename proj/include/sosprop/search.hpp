#pragma once

#include "sosprop/matrix_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sosprop {

/// Lower bounds on how often each color occurs in a solution.
class MinimumSignature {
public:
    /// bounds[x-1] is the bound for color x. Throws std::invalid_argument when the
    /// size differs from n, a bound is negative, or the bounds sum past r*s.
    MinimumSignature(Shape shape, std::vector<int> bounds);

    int bound(Color c) const { return bounds_[static_cast<std::size_t>(c.value - 1)]; }
    const std::vector<int>& bounds() const { return bounds_; }
    const Shape& shape() const { return shape_; }

    /// Text form: whitespace separated "color bound" pairs, '#' comments allowed.
    /// Colors not listed get bound 0.
    static MinimumSignature parse(Shape shape, std::string_view text);

    friend bool operator==(const MinimumSignature&, const MinimumSignature&) = default;

private:
    Shape shape_;
    std::vector<int> bounds_;
};

/// m(1) = ceil(rs/n) and m(x) = 1 for every other color.
MinimumSignature compute_default_signature(int r, int s, int n);

struct TestChoice {
    Coordinate coordinate;
    SignedValue value;

    friend bool operator==(const TestChoice&, const TestChoice&) = default;
};

/// Unassigned cell with the fewest candidates (row-major on ties) and its first
/// candidate. nullopt when every cell is assigned.
std::optional<TestChoice> select_test_v1(const MatrixState& state);

struct Selection {
    enum class Kind { Choice, Complete, Infeasible };
    Kind kind = Kind::Complete;
    std::optional<TestChoice> choice;
};

/// Chases the first color whose assigned count is below its bound; falls back to
/// select_test_v1 once every bound is met. Infeasible when a short color can no
/// longer be placed anywhere.
Selection select_test_v2(const MatrixState& state, const MinimumSignature& signature);

enum class Strategy { V1, V2 };

std::string_view to_string(Strategy strategy);
Strategy parse_strategy(std::string_view text);

struct SearchOptions {
    Strategy strategy = Strategy::V1;
    /// Used by V2; compute_default_signature when unset.
    std::optional<MinimumSignature> signature;
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
    /// Receives every assignment and elimination made during the search.
    PropagationObserver* trace = nullptr;
};

struct SearchStats {
    std::uint64_t nodes = 0;         // completeMatrix invocations
    std::uint64_t propagations = 0;  // queue items processed
    std::uint64_t eliminations = 0;
    std::uint64_t assignments = 0;
    std::uint64_t backtracks = 0;    // test values refuted
    int max_depth = 0;
    double seconds = 0.0;
};

enum class Verdict { Found, Nonexistent, BudgetExhausted };

std::string_view to_string(Verdict verdict);

struct SearchOutcome {
    Verdict verdict = Verdict::Nonexistent;
    std::optional<MatrixState> matrix;  // set iff Found
    SearchStats stats;
};

/// Branch, propagate, backtrack. Pending queue items in `state` are propagated first. A Found
/// matrix has passed is_csim; Nonexistent means no CSIM extends `state` (under the
/// V2 signature, when used). Throws std::logic_error if a completed matrix fails
/// the independent check.
SearchOutcome complete_matrix(MatrixState state, const SearchOptions& options = {});

}  // namespace sosprop
