#include "sosprop/verification.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace sosprop {

Grid Grid::from_rows(const std::vector<std::vector<int>>& rows)
{
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("grid must be nonempty");
    Grid g(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < g.rows(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != g.cols()) throw std::invalid_argument("ragged grid");
        for (int j = 0; j < g.cols(); ++j) g.at(i, j) = SignedValue::from_int(row[static_cast<std::size_t>(j)]);
    }
    return g;
}

Grid Grid::from_state(const MatrixState& state)
{
    Grid g(state.rows(), state.cols());
    for (int idx = 0; idx < state.cell_count(); ++idx) {
        const auto& set = state.candidates(idx);
        if (set.assigned()) {
            const Coordinate c = state.coordinate(idx);
            g.at(c.row, c.col) = set.value();
        }
    }
    return g;
}

bool Grid::complete() const
{
    return std::all_of(cells_.begin(), cells_.end(), [](const auto& v) { return v.has_value(); });
}

int Grid::max_color() const
{
    int m = 0;
    for (const auto& v : cells_)
        if (v) m = std::max(m, v->color().value);
    return m;
}

bool operator<(const Grid& a, const Grid& b)
{
    auto key = [](const std::optional<SignedValue>& v) { return v ? v->bit() + 1 : 0; };
    return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
                                        [&](const auto& x, const auto& y) { return key(x) < key(y); });
}

std::string format_grid(const Grid& grid)
{
    std::ostringstream out;
    for (int i = 0; i < grid.rows(); ++i) {
        for (int j = 0; j < grid.cols(); ++j) {
            if (j > 0) out << ' ';
            const auto& v = grid.at(i, j);
            if (v)
                out << v->as_int();
            else
                out << '*';
        }
        out << '\n';
    }
    return out.str();
}

Grid parse_grid(std::string_view text)
{
    const MatrixText parsed = parse_matrix_text(text);
    Grid g(parsed.rows, parsed.cols);
    for (int idx = 0; idx < parsed.rows * parsed.cols; ++idx) {
        const auto& cell = parsed.cells[static_cast<std::size_t>(idx)];
        if (cell.kind == MatrixText::Kind::ColorOnly)
            throw std::invalid_argument("grid text cannot hold color-only cells");
        if (cell.kind == MatrixText::Kind::Value) g.at(idx / parsed.cols, idx % parsed.cols) = SignedValue::from_int(cell.value);
    }
    return g;
}

namespace {

/// The three admissible sign patterns for a complete square, read from `corner`.
bool square_consistent(SignedValue corner, SignedValue opposite, SignedValue same_row, SignedValue same_col)
{
    if (corner == opposite) return same_row == -same_col;
    if (corner == -opposite) return same_row == same_col;
    return same_row != same_col && same_row != -same_col;
}

}  // namespace

bool verify(const MatrixState& state)
{
    const int r = state.rows(), s = state.cols();
    // Assigned values, 0 where unassigned. Small matrices stay on the stack.
    std::array<int, 1024> local;
    std::vector<int> heap;
    int* value = local.data();
    if (r * s > static_cast<int>(local.size())) {
        heap.resize(static_cast<std::size_t>(r * s));
        value = heap.data();
    }
    for (int idx = 0; idx < r * s; ++idx) {
        const auto& set = state.candidates(idx);
        value[idx] = set.assigned() ? set.value().as_int() : 0;
    }
    auto at = [&](int i, int j) { return value[i * s + j]; };

    for (int i = 0; i < r; ++i) {
        std::uint64_t seen = 0;
        for (int j = 0; j < s; ++j) {
            const int v = at(i, j);
            if (v == 0) continue;
            const std::uint64_t bit = std::uint64_t{1} << (v < 0 ? -v : v);
            if (seen & bit) return false;
            seen |= bit;
        }
    }
    for (int j = 0; j < s; ++j) {
        std::uint64_t seen = 0;
        for (int i = 0; i < r; ++i) {
            const int v = at(i, j);
            if (v == 0) continue;
            const std::uint64_t bit = std::uint64_t{1} << (v < 0 ? -v : v);
            if (seen & bit) return false;
            seen |= bit;
        }
    }
    for (int top = 0; top < r; ++top) {
        for (int bottom = top + 1; bottom < r; ++bottom) {
            for (int left = 0; left < s; ++left) {
                const int tl = at(top, left), bl = at(bottom, left);
                if (tl == 0 || bl == 0) continue;
                for (int right = left + 1; right < s; ++right) {
                    const int tr = at(top, right), br = at(bottom, right);
                    if (tr == 0 || br == 0) continue;
                    if (!square_consistent(SignedValue::from_int(tl), SignedValue::from_int(br), SignedValue::from_int(tr),
                                           SignedValue::from_int(bl)))
                        return false;
                }
            }
        }
    }
    return true;
}

bool verify_complete(const MatrixState& state)
{
    const auto cells = state.cells();
    return std::all_of(cells.begin(), cells.end(), [](const CandidateSet& c) { return c.assigned(); });
}

bool is_csim(const Grid& grid, int n)
{
    const int r = grid.rows(), s = grid.cols();
    if (!grid.complete()) return false;
    auto color = [&](int i, int j) { return grid.at(i, j)->color().value; };
    auto negative = [&](int i, int j) { return grid.at(i, j)->sign() < 0 ? 1 : 0; };

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            if (color(i, j) < 1 || color(i, j) > n) return false;

    // Entries along each row are distinct; likewise each column.
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            for (int jj = j + 1; jj < s; ++jj)
                if (color(i, j) == color(i, jj)) return false;
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < r; ++i)
            for (int ii = i + 1; ii < r; ++ii)
                if (color(i, j) == color(ii, j)) return false;

    for (int i = 0; i < r; ++i) {
        for (int ii = i + 1; ii < r; ++ii) {
            for (int j = 0; j < s; ++j) {
                for (int jj = j + 1; jj < s; ++jj) {
                    const bool main_diag = color(i, j) == color(ii, jj);
                    const bool anti_diag = color(i, jj) == color(ii, j);
                    if (main_diag != anti_diag) return false;
                    if (main_diag) {
                        const int minus = negative(i, j) + negative(i, jj) + negative(ii, j) + negative(ii, jj);
                        if (minus % 2 == 0) return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace sosprop
