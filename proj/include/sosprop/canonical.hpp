#pragma once

#include "sosprop/matrix_model.hpp"
#include "sosprop/verification.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sosprop {

// Generators of the symmetry group acting on signed matrices. Permutations are
// 0-based and read "new position k takes old position perm[k]"; for colors,
// perm[x-1] is the old color now labelled x.

struct RowPermutation {
    std::vector<int> perm;
};
struct ColumnPermutation {
    std::vector<int> perm;
};
struct ColorPermutation {
    std::vector<int> perm;
};
struct RowSignFlip {
    std::vector<int> rows;
};
struct ColumnSignFlip {
    std::vector<int> cols;
};
struct ColorSignFlip {
    std::vector<int> colors;  // 1-based color labels
};

using GroupAction =
    std::variant<RowPermutation, ColumnPermutation, ColorPermutation, RowSignFlip, ColumnSignFlip, ColorSignFlip>;

/// Applies one generator to a full or partial grid over colors 1..n. Unset cells
/// stay unset. Throws std::invalid_argument for malformed permutations or indices.
Grid apply_action(const Grid& grid, int n, const GroupAction& action);

Grid transpose(const Grid& grid);

/// ceil(rs/n): how many 1's the canonical form places on the diagonal.
int diagonal_ones(int r, int s, int n);

/// First row +1..+s and (i,i) = +1 for i <= ceil(rs/n).
bool is_canonical_form(const Grid& grid, int n);

/// The canonical starting matrix, propagated to a fixpoint. nullopt means the
/// propagation already contradicts, so no CSIM of the type exists at all.
/// Throws std::invalid_argument unless s <= n and ceil(rs/n) <= min(r, s).
std::optional<MatrixState> canonical_input(int r, int s, int n);

/// Why canonical_input would reject (r, s, n), or nullopt if it accepts.
std::optional<std::string> canonical_input_rejection(int r, int s, int n);

/// Moves a complete CSIM into canonical form with row, column and color moves.
/// Throws std::invalid_argument if the grid is not a CSIM.
Grid canonicalize(const Grid& grid, int n);

}  // namespace sosprop
