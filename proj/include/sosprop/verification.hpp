#pragma once

#include "sosprop/matrix_model.hpp"

#include <optional>
#include <vector>

namespace sosprop {

/// A rectangular matrix of signed values where cells may be unset. Used for
/// complete answers and for partial inputs handed to the group action.
class Grid {
public:
    Grid(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols)) {}

    /// Builds a complete grid from signed integers, row by row.
    static Grid from_rows(const std::vector<std::vector<int>>& rows);
    /// Values of assigned cells; unassigned cells stay unset.
    static Grid from_state(const MatrixState& state);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::optional<SignedValue>& at(int i, int j) const { return cells_[static_cast<std::size_t>(i * cols_ + j)]; }
    std::optional<SignedValue>& at(int i, int j) { return cells_[static_cast<std::size_t>(i * cols_ + j)]; }

    bool complete() const;
    /// Largest color present, 0 if none.
    int max_color() const;

    friend bool operator==(const Grid&, const Grid&) = default;
    /// Lexicographic over row-major cells, values ordered +1,-1,+2,-2,...; unset sorts first.
    friend bool operator<(const Grid& a, const Grid& b);

private:
    int rows_;
    int cols_;
    std::vector<std::optional<SignedValue>> cells_;
};

/// Matrix text of a grid: signed integers, "*" for unset cells.
std::string format_grid(const Grid& grid);
/// Parses matrix text that holds only signed integers and "*".
Grid parse_grid(std::string_view text);

/// No contradiction among assigned cells: colors distinct along rows and columns,
/// and every fully assigned square signed consistently. Unassigned cells are ignored.
bool verify(const MatrixState& state);

/// Every cell holds exactly one value.
bool verify_complete(const MatrixState& state);

/// Ground-truth CSIM predicate straight from the definition: complete, colors in
/// 1..n, distinct along rows and columns, M_ij = M_i'j' implies M_ij' = M_i'j, and
/// an odd number of minus signs in every square with repeated colors.
bool is_csim(const Grid& grid, int n);

}  // namespace sosprop
