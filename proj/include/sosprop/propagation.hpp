#pragma once

#include "sosprop/matrix_model.hpp"

#include <ostream>

namespace sosprop {

// Every operation returns false to signal a contradiction. After a false return
// the state may be partially updated and should be discarded.

/// Restricts cell c to {v} and queues the assignment. True without change if c is
/// already v; false without change if v is not a candidate. Throws
/// std::out_of_range for coordinates or colors outside the shape.
bool assign(MatrixState& state, Coordinate c, SignedValue v, Cause cause = Cause::External);

/// Removes v from cell c. Reducing a cell to one value assigns it; reducing it to
/// both signs of one color queues that color. False if v is the only value left.
bool eliminate(MatrixState& state, Coordinate c, SignedValue v, Cause cause = Cause::External);

/// Removes both signs of `color` from every cell sharing a row or column with c.
bool propagate_rows_and_columns(MatrixState& state, Coordinate c, Color color);

/// Enforces the signing law on one square given that c holds v.
bool propagate_square(MatrixState& state, Coordinate c, SignedValue v, const SquareView& square);

/// propagate_square over every square containing c; stops at the first failure.
bool propagate_squares(MatrixState& state, Coordinate c, SignedValue v);

/// Square consequences of knowing only the color of c.
bool propagate_squares_color(MatrixState& state, Coordinate c, Color color);

/// Drains both queues to a fixpoint. The inner loop empties the color queue after
/// each value item.
bool propagate(MatrixState& state);

/// Applies parsed matrix text as starting constraints (assignments and color
/// restrictions) without propagating. Throws std::invalid_argument on a shape
/// mismatch or out-of-range color.
bool apply_constraints(MatrixState& state, const MatrixText& text);

/// Writes one line per assignment or elimination: coordinate, value, cause.
class TraceWriter final : public PropagationObserver {
public:
    explicit TraceWriter(std::ostream& out) : out_(out) {}

    void on_assign(Coordinate c, SignedValue v, Cause cause) override;
    void on_eliminate(Coordinate c, SignedValue v, Cause cause) override;

private:
    std::ostream& out_;
};

}  // namespace sosprop
