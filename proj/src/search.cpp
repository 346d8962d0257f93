#include "sosprop/search.hpp"

#include "sosprop/propagation.hpp"
#include "sosprop/verification.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sosprop {

MinimumSignature::MinimumSignature(Shape shape, std::vector<int> bounds) : shape_(shape), bounds_(std::move(bounds))
{
    if (static_cast<int>(bounds_.size()) != shape_.colors)
        throw std::invalid_argument("signature has " + std::to_string(bounds_.size()) + " bounds for n=" +
                                    std::to_string(shape_.colors));
    long total = 0;
    for (int b : bounds_) {
        if (b < 0) throw std::invalid_argument("signature bounds must be non-negative");
        total += b;
    }
    if (total > static_cast<long>(shape_.rows) * shape_.cols)
        throw std::invalid_argument("signature bounds sum to " + std::to_string(total) + ", more than the " +
                                    std::to_string(shape_.rows * shape_.cols) + " cells of " + to_string(shape_));
}

MinimumSignature MinimumSignature::parse(Shape shape, std::string_view text)
{
    std::vector<int> bounds(static_cast<std::size_t>(shape.colors), 0);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        int color = 0, bound = 0;
        while (fields >> color) {
            if (!(fields >> bound)) throw std::invalid_argument("signature line missing a bound: '" + line + "'");
            if (color < 1 || color > shape.colors)
                throw std::invalid_argument("signature color " + std::to_string(color) + " outside 1.." +
                                            std::to_string(shape.colors));
            bounds[static_cast<std::size_t>(color - 1)] = bound;
        }
        if (!fields.eof()) throw std::invalid_argument("malformed signature line: '" + line + "'");
    }
    return MinimumSignature(shape, std::move(bounds));
}

MinimumSignature compute_default_signature(int r, int s, int n)
{
    if (r < 1 || s < 1 || n < 1) throw std::invalid_argument("type parameters must be positive");
    std::vector<int> bounds(static_cast<std::size_t>(n), 1);
    bounds[0] = (r * s + n - 1) / n;
    return MinimumSignature(Shape{r, s, n}, std::move(bounds));
}

std::optional<TestChoice> select_test_v1(const MatrixState& state)
{
    int best = -1;
    int best_size = 0;
    for (int idx = 0; idx < state.cell_count(); ++idx) {
        const CandidateSet& set = state.candidates(idx);
        if (set.assigned()) continue;
        if (best < 0 || set.size() < best_size) {
            best = idx;
            best_size = set.size();
        }
    }
    if (best < 0) return std::nullopt;
    return TestChoice{state.coordinate(best), state.candidates(best).first()};
}

Selection select_test_v2(const MatrixState& state, const MinimumSignature& signature)
{
    if (signature.shape() != state.shape())
        throw std::invalid_argument("signature for " + to_string(signature.shape()) + " used on " + to_string(state.shape()));
    std::vector<int> placed(static_cast<std::size_t>(state.colors()), 0);
    for (const CandidateSet& set : state.cells())
        if (set.assigned()) ++placed[static_cast<std::size_t>(set.value().color().value - 1)];

    for (int x = 1; x <= state.colors(); ++x) {
        const Color color{x};
        if (placed[static_cast<std::size_t>(x - 1)] >= signature.bound(color)) continue;
        const SignedValue plus(color, 1);
        for (int idx = 0; idx < state.cell_count(); ++idx) {
            const CandidateSet& set = state.candidates(idx);
            if (set.assigned() || !set.colors().contains(color)) continue;
            return {Selection::Kind::Choice, TestChoice{state.coordinate(idx), set.contains(plus) ? plus : -plus}};
        }
        return {Selection::Kind::Infeasible, std::nullopt};
    }
    if (auto choice = select_test_v1(state)) return {Selection::Kind::Choice, choice};
    return {Selection::Kind::Complete, std::nullopt};
}

std::string_view to_string(Strategy strategy)
{
    return strategy == Strategy::V1 ? "v1" : "v2";
}

Strategy parse_strategy(std::string_view text)
{
    if (text == "v1" || text == "1") return Strategy::V1;
    if (text == "v2" || text == "2") return Strategy::V2;
    throw std::invalid_argument("unknown strategy '" + std::string(text) + "', expected v1 or v2");
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Found: return "found";
    case Verdict::Nonexistent: return "nonexistent";
    case Verdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

class CountingObserver final : public PropagationObserver {
public:
    CountingObserver(SearchStats& stats, PropagationObserver* forward) : stats_(stats), forward_(forward) {}

    void on_assign(Coordinate c, SignedValue v, Cause cause) override
    {
        ++stats_.assignments;
        if (forward_) forward_->on_assign(c, v, cause);
    }
    void on_eliminate(Coordinate c, SignedValue v, Cause cause) override
    {
        ++stats_.eliminations;
        if (forward_) forward_->on_eliminate(c, v, cause);
    }
    void on_value_dequeued(Coordinate c, SignedValue v) override
    {
        ++stats_.propagations;
        if (forward_) forward_->on_value_dequeued(c, v);
    }
    void on_color_dequeued(Coordinate c, Color color) override
    {
        ++stats_.propagations;
        if (forward_) forward_->on_color_dequeued(c, color);
    }

private:
    SearchStats& stats_;
    PropagationObserver* forward_;
};

class Searcher {
public:
    using Clock = std::chrono::steady_clock;

    Searcher(const SearchOptions& options, const Shape& shape, SearchStats& stats)
        : options_(options), stats_(stats), start_(Clock::now())
    {
        if (options_.strategy == Strategy::V2)
            signature_ = options_.signature ? *options_.signature
                                            : compute_default_signature(shape.rows, shape.cols, shape.colors);
    }

    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

    Verdict run(MatrixState& state, int depth, std::optional<MatrixState>& found)
    {
        stats_.max_depth = std::max(stats_.max_depth, depth);
        for (;;) {
            if (stats_.nodes >= options_.max_nodes || elapsed() >= options_.max_seconds) return Verdict::BudgetExhausted;
            ++stats_.nodes;

            if (!verify(state)) return Verdict::Nonexistent;
            if (verify_complete(state)) {
                found = std::move(state);
                return Verdict::Found;
            }

            std::optional<TestChoice> choice;
            if (signature_) {
                Selection sel = select_test_v2(state, *signature_);
                if (sel.kind == Selection::Kind::Infeasible) return Verdict::Nonexistent;
                choice = sel.choice;
            } else {
                choice = select_test_v1(state);
            }
            // An incomplete state always has an unassigned cell with candidates.
            if (!choice) throw std::logic_error("no test value in an incomplete matrix");

            MatrixState trial = state;
            if (assign(trial, choice->coordinate, choice->value, Cause::Search) && propagate(trial)) {
                const Verdict sub = run(trial, depth + 1, found);
                if (sub != Verdict::Nonexistent) return sub;
            }

            // The test value is refuted; drop it here and carry on with what is left.
            ++stats_.backtracks;
            if (!eliminate(state, choice->coordinate, choice->value, Cause::Search)) return Verdict::Nonexistent;
            if (!propagate(state)) return Verdict::Nonexistent;
        }
    }

private:
    const SearchOptions& options_;
    SearchStats& stats_;
    std::optional<MinimumSignature> signature_;
    Clock::time_point start_;
};

}  // namespace

SearchOutcome complete_matrix(MatrixState state, const SearchOptions& options)
{
    SearchOutcome outcome;
    CountingObserver counter(outcome.stats, options.trace);
    PropagationObserver* previous = state.observer();
    state.set_observer(&counter);

    Searcher searcher(options, state.shape(), outcome.stats);
    std::optional<MatrixState> found;
    if (state.has_pending_value() || state.has_pending_color()) {
        if (!propagate(state)) {
            outcome.stats.seconds = searcher.elapsed();
            return outcome;
        }
    }
    outcome.verdict = searcher.run(state, 0, found);
    outcome.stats.seconds = searcher.elapsed();

    if (outcome.verdict == Verdict::Found) {
        found->set_observer(previous);
        if (!is_csim(Grid::from_state(*found), found->colors()))
            throw std::logic_error("search produced a matrix that is not a CSIM:\n" + format_matrix(*found));
        outcome.matrix = std::move(found);
    }
    return outcome;
}

}  // namespace sosprop
