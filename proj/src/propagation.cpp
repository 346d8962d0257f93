#include "sosprop/propagation.hpp"

#include <stdexcept>

namespace sosprop {

namespace {

bool assign_at(MatrixState& state, int cell, SignedValue v, Cause cause)
{
    CandidateSet& set = state.candidates(cell);
    if (set.assigned() && set.value() == v) return true;
    if (!set.contains(v)) return false;
    set = CandidateSet::single(v);
    state.push_value(cell, v);
    if (auto* obs = state.observer()) obs->on_assign(state.coordinate(cell), v, cause);
    return true;
}

bool eliminate_at(MatrixState& state, int cell, SignedValue v, Cause cause)
{
    CandidateSet& set = state.candidates(cell);
    if (!set.contains(v)) return true;
    if (set.assigned()) return false;
    if (auto* obs = state.observer()) obs->on_eliminate(state.coordinate(cell), v, cause);
    if (set.is_pair()) return assign_at(state, cell, (set - CandidateSet::single(v)).value(), cause);
    set.erase(v);
    if (set.is_pair() && set.color_known()) state.push_color(cell, set.colors().first());
    return true;
}

bool eliminate_color_at(MatrixState& state, int cell, Color color, Cause cause)
{
    if ((state.candidates(cell).bits() & CandidateSet::of_color(color).bits()) == 0) return true;
    return eliminate_at(state, cell, SignedValue(color, 1), cause) &&
           eliminate_at(state, cell, SignedValue(color, -1), cause);
}

/// Eliminates every candidate of `cell` outside `allowed`, in canonical order.
bool restrict_at(MatrixState& state, int cell, CandidateSet allowed, Cause cause)
{
    const CandidateSet drop = state.candidates(cell) - allowed;
    for (std::uint64_t b = drop.bits(); b != 0; b &= b - 1) {
        if (!eliminate_at(state, cell, SignedValue::from_bit(std::countr_zero(b)), cause)) return false;
    }
    return true;
}

// Pairwise relations between the two cells of a square adjacent to a known corner.

bool require_same_color(MatrixState& state, int a, int b, Cause cause)
{
    const ColorSet common = state.candidates(a).colors() & state.candidates(b).colors();
    const CandidateSet allowed = CandidateSet::of_colors(common);
    return restrict_at(state, a, allowed, cause) && restrict_at(state, b, allowed, cause);
}

bool require_different_colors(MatrixState& state, int a, int b, Cause cause)
{
    if (auto x = state.candidates(a).known_color()) {
        if (!eliminate_color_at(state, b, *x, cause)) return false;
    }
    if (auto y = state.candidates(b).known_color()) {
        if (!eliminate_color_at(state, a, *y, cause)) return false;
    }
    return true;
}

/// a = -b, kept arc consistent on the candidate sets.
bool require_negated(MatrixState& state, int a, int b, Cause cause)
{
    if (!restrict_at(state, a, state.candidates(b).negated(), cause)) return false;
    return restrict_at(state, b, state.candidates(a).negated(), cause);
}

bool require_equal(MatrixState& state, int a, int b, Cause cause)
{
    if (!restrict_at(state, a, state.candidates(b), cause)) return false;
    return restrict_at(state, b, state.candidates(a), cause);
}

/// Forbids a = w·b for w in {+1, -1}; expressible only once one side is assigned.
bool forbid_relation(MatrixState& state, int a, int b, int w, Cause cause)
{
    const CandidateSet sa = state.candidates(a);
    if (sa.assigned()) {
        const SignedValue va = sa.value();
        if (!eliminate_at(state, b, w > 0 ? va : -va, cause)) return false;
    }
    const CandidateSet sb = state.candidates(b);
    if (sb.assigned()) {
        const SignedValue vb = sb.value();
        if (!eliminate_at(state, a, w > 0 ? vb : -vb, cause)) return false;
    }
    return true;
}

bool both_known_same_color(const CandidateSet& a, const CandidateSet& b)
{
    return a.color_known() && b.color_known() && a.colors() == b.colors();
}

bool check_bounds(const MatrixState& state, Coordinate c)
{
    if (!state.in_bounds(c)) throw std::out_of_range("coordinate " + to_string(c) + " outside " + to_string(state.shape()));
    return true;
}

bool propagate_square_at(MatrixState& state, SignedValue v, const SquareView& sq)
{
    constexpr Cause cause = Cause::Square;
    const int o = sq.opposite, a = sq.same_row, b = sq.same_col;
    const Color x = v.color();

    const CandidateSet opp = state.candidates(o);
    if (opp.assigned()) {
        if (opp.value() == v) return require_negated(state, a, b, cause);
        if (opp.value() == -v) return require_equal(state, a, b, cause);
    }
    const ColorSet opp_colors = opp.colors();
    if (opp_colors == ColorSet::single(x)) {
        if (!require_same_color(state, a, b, cause)) return false;
    } else if (!opp_colors.contains(x)) {
        if (!require_different_colors(state, a, b, cause)) return false;
    }

    const CandidateSet sa = state.candidates(a);
    const CandidateSet sb = state.candidates(b);
    if (sa.assigned() && sb.assigned()) {
        if (sa.value() == sb.value()) return assign_at(state, o, -v, cause);
        if (sa.value() == -sb.value()) return assign_at(state, o, v, cause);
    }
    if (both_known_same_color(sa, sb)) return restrict_at(state, o, CandidateSet::of_color(x), cause);
    if ((sa.colors() & sb.colors()).empty()) return eliminate_color_at(state, o, x, cause);

    const CandidateSet opp_now = state.candidates(o);
    if (!opp_now.contains(v) && !forbid_relation(state, a, b, -1, cause)) return false;
    if (!opp_now.contains(-v) && !forbid_relation(state, a, b, +1, cause)) return false;
    return true;
}

}  // namespace

bool assign(MatrixState& state, Coordinate c, SignedValue v, Cause cause)
{
    check_bounds(state, c);
    if (!state.in_range(v)) throw std::out_of_range("value " + to_string(v) + " outside " + to_string(state.shape()));
    return assign_at(state, state.index(c), v, cause);
}

bool eliminate(MatrixState& state, Coordinate c, SignedValue v, Cause cause)
{
    check_bounds(state, c);
    if (!state.in_range(v)) return true;
    return eliminate_at(state, state.index(c), v, cause);
}

bool propagate_rows_and_columns(MatrixState& state, Coordinate c, Color color)
{
    check_bounds(state, c);
    for (int peer : state.geometry().peers[static_cast<std::size_t>(state.index(c))]) {
        if (!eliminate_color_at(state, peer, color, Cause::RowColumn)) return false;
    }
    return true;
}

bool propagate_square(MatrixState& state, Coordinate c, SignedValue v, const SquareView& square)
{
    check_bounds(state, c);
    return propagate_square_at(state, v, square);
}

bool propagate_squares(MatrixState& state, Coordinate c, SignedValue v)
{
    check_bounds(state, c);
    for (const SquareView& sq : state.geometry().views_of[static_cast<std::size_t>(state.index(c))]) {
        if (!propagate_square_at(state, v, sq)) return false;
    }
    return true;
}

bool propagate_squares_color(MatrixState& state, Coordinate c, Color color)
{
    check_bounds(state, c);
    constexpr Cause cause = Cause::SquareColor;
    for (const SquareView& sq : state.geometry().views_of[static_cast<std::size_t>(state.index(c))]) {
        const int o = sq.opposite, a = sq.same_row, b = sq.same_col;
        const ColorSet opp_colors = state.candidates(o).colors();
        if (opp_colors == ColorSet::single(color)) {
            if (!require_same_color(state, a, b, cause)) return false;
            continue;
        }
        if (!opp_colors.contains(color)) {
            if (!require_different_colors(state, a, b, cause)) return false;
            continue;
        }
        const CandidateSet sa = state.candidates(a);
        const CandidateSet sb = state.candidates(b);
        if (both_known_same_color(sa, sb)) {
            if (!restrict_at(state, o, CandidateSet::of_color(color), cause)) return false;
        } else if ((sa.colors() & sb.colors()).empty()) {
            if (!eliminate_color_at(state, o, color, cause)) return false;
        }
    }
    return true;
}

bool propagate(MatrixState& state)
{
    PropagationObserver* obs = state.observer();
    while (state.has_pending_value() || state.has_pending_color()) {
        if (state.has_pending_value()) {
            const ValueItem item = state.pop_value();
            const Coordinate c = state.coordinate(item.cell);
            if (obs) obs->on_value_dequeued(c, item.value);
            if (!propagate_rows_and_columns(state, c, item.value.color())) return false;
            if (!propagate_squares(state, c, item.value)) return false;
        }
        while (state.has_pending_color()) {
            const ColorItem item = state.pop_color();
            const Coordinate c = state.coordinate(item.cell);
            if (obs) obs->on_color_dequeued(c, item.color);
            if (!propagate_rows_and_columns(state, c, item.color)) return false;
            if (!propagate_squares_color(state, c, item.color)) return false;
        }
    }
    state.compact_queues();
    return true;
}

bool apply_constraints(MatrixState& state, const MatrixText& text)
{
    if (text.rows != state.rows() || text.cols != state.cols())
        throw std::invalid_argument("input matrix is " + std::to_string(text.rows) + "x" + std::to_string(text.cols) +
                                    ", expected " + std::to_string(state.rows()) + "x" + std::to_string(state.cols()));
    for (int idx = 0; idx < state.cell_count(); ++idx) {
        const auto& cell = text.cells[static_cast<std::size_t>(idx)];
        switch (cell.kind) {
        case MatrixText::Kind::Unknown: break;
        case MatrixText::Kind::Value: {
            const SignedValue v = SignedValue::from_int(cell.value);
            if (!state.in_range(v))
                throw std::invalid_argument("entry " + std::to_string(cell.value) + " at " +
                                            to_string(state.coordinate(idx)) + " exceeds n=" +
                                            std::to_string(state.colors()));
            if (!assign_at(state, idx, v, Cause::External)) return false;
            break;
        }
        case MatrixText::Kind::ColorOnly: {
            if (cell.value > state.colors())
                throw std::invalid_argument("color " + std::to_string(cell.value) + " at " +
                                            to_string(state.coordinate(idx)) + " exceeds n=" +
                                            std::to_string(state.colors()));
            if (!restrict_at(state, idx, CandidateSet::of_color(Color{cell.value}), Cause::External)) return false;
            break;
        }
        }
    }
    return true;
}

void TraceWriter::on_assign(Coordinate c, SignedValue v, Cause cause)
{
    out_ << "assign " << to_string(c) << ' ' << to_string(v) << ' ' << to_string(cause) << '\n';
}

void TraceWriter::on_eliminate(Coordinate c, SignedValue v, Cause cause)
{
    out_ << "eliminate " << to_string(c) << ' ' << to_string(v) << ' ' << to_string(cause) << '\n';
}

}  // namespace sosprop
