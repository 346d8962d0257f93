#pragma once

// Shared fixtures and small independent re-derivations used as test oracles.

#include "sosprop/matrix_model.hpp"
#include "sosprop/verification.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace testing {

inline sosprop::Grid example_3_5_7()
{
    return sosprop::Grid::from_rows({{1, 2, 3, 4, 5}, {2, -1, 4, -3, 6}, {3, -4, -1, 2, 7}});
}

inline sosprop::Grid walkthrough_4_4_4()
{
    return sosprop::Grid::from_rows({{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}});
}

/// Intercalate test in its counting form: every 2x2 submatrix holds an even number
/// of distinct colors, and squares with two colors carry an odd number of minus signs.
inline bool naive_csim(const std::vector<int>& cells, int r, int s, int n)
{
    auto at = [&](int i, int j) { return cells[static_cast<std::size_t>(i * s + j)]; };
    auto color = [&](int i, int j) { return at(i, j) < 0 ? -at(i, j) : at(i, j); };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            if (color(i, j) < 1 || color(i, j) > n) return false;
    for (int i = 0; i < r; ++i) {
        std::set<int> seen;
        for (int j = 0; j < s; ++j)
            if (!seen.insert(color(i, j)).second) return false;
    }
    for (int j = 0; j < s; ++j) {
        std::set<int> seen;
        for (int i = 0; i < r; ++i)
            if (!seen.insert(color(i, j)).second) return false;
    }
    for (int i = 0; i < r; ++i)
        for (int ii = i + 1; ii < r; ++ii)
            for (int j = 0; j < s; ++j)
                for (int jj = j + 1; jj < s; ++jj) {
                    const std::set<int> distinct{color(i, j), color(i, jj), color(ii, j), color(ii, jj)};
                    if (distinct.size() % 2 != 0) return false;
                    if (distinct.size() == 2) {
                        int minus = 0;
                        for (int v : {at(i, j), at(i, jj), at(ii, j), at(ii, jj)}) minus += v < 0;
                        if (minus % 2 == 0) return false;
                    }
                }
    return true;
}

/// Every signed filling of an r x s grid over +-1..+-n, no pruning at all.
inline void for_each_filling(int r, int s, int n, const std::function<void(const std::vector<int>&)>& visit)
{
    const int cells = r * s;
    std::vector<int> digit(static_cast<std::size_t>(cells), 0);
    std::vector<int> grid(static_cast<std::size_t>(cells));
    for (;;) {
        for (int k = 0; k < cells; ++k) {
            const int d = digit[static_cast<std::size_t>(k)];
            grid[static_cast<std::size_t>(k)] = (d % 2 == 0 ? 1 : -1) * (d / 2 + 1);
        }
        visit(grid);
        int k = cells - 1;
        while (k >= 0 && ++digit[static_cast<std::size_t>(k)] == 2 * n) digit[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) return;
    }
}

inline sosprop::Grid grid_of(const std::vector<int>& cells, int r, int s)
{
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) rows[static_cast<std::size_t>(i)].push_back(cells[static_cast<std::size_t>(i * s + j)]);
    return sosprop::Grid::from_rows(rows);
}

/// Evaluates (sum x^2)(sum y^2) - sum z^2 at integer points straight from the grid.
inline std::int64_t identity_defect_at(const sosprop::Grid& g, int n, const std::vector<std::int64_t>& x,
                                       const std::vector<std::int64_t>& y)
{
    std::vector<std::int64_t> z(static_cast<std::size_t>(n + 1), 0);
    std::int64_t sx = 0, sy = 0;
    for (int i = 0; i < g.rows(); ++i) sx += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    for (int j = 0; j < g.cols(); ++j) sy += y[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            const auto v = *g.at(i, j);
            z[static_cast<std::size_t>(v.color().value)] +=
                v.sign() * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        }
    std::int64_t sz = 0;
    for (int k = 1; k <= n; ++k) sz += z[static_cast<std::size_t>(k)] * z[static_cast<std::size_t>(k)];
    return sx * sy - sz;
}

inline bool compatible(const sosprop::MatrixState& state, const sosprop::Grid& g)
{
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (!state.candidates(sosprop::Coordinate{i, j}).contains(*g.at(i, j))) return false;
    return true;
}

}  // namespace testing
