#include "sosprop/canonical.hpp"

#include "sosprop/propagation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sosprop {

namespace {

void check_permutation(const std::vector<int>& perm, int size, const char* what)
{
    if (static_cast<int>(perm.size()) != size)
        throw std::invalid_argument(std::string(what) + " permutation has " + std::to_string(perm.size()) +
                                    " entries, expected " + std::to_string(size));
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    for (int p : perm) {
        if (p < 0 || p >= size || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument(std::string(what) + " permutation is not a bijection");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

std::vector<bool> flip_mask(const std::vector<int>& indices, int size, int base, const char* what)
{
    std::vector<bool> mask(static_cast<std::size_t>(size), false);
    for (int k : indices) {
        if (k < base || k >= size + base) throw std::invalid_argument(std::string(what) + " index out of range");
        mask[static_cast<std::size_t>(k - base)] = true;
    }
    return mask;
}

std::vector<int> swap_permutation(int size, int a, int b)
{
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    return perm;
}

}  // namespace

Grid apply_action(const Grid& grid, int n, const GroupAction& action)
{
    const int r = grid.rows(), s = grid.cols();
    Grid out(r, s);
    std::visit(
        [&](const auto& act) {
            using T = std::decay_t<decltype(act)>;
            if constexpr (std::is_same_v<T, RowPermutation>) {
                check_permutation(act.perm, r, "row");
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < s; ++j) out.at(i, j) = grid.at(act.perm[static_cast<std::size_t>(i)], j);
            } else if constexpr (std::is_same_v<T, ColumnPermutation>) {
                check_permutation(act.perm, s, "column");
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < s; ++j) out.at(i, j) = grid.at(i, act.perm[static_cast<std::size_t>(j)]);
            } else if constexpr (std::is_same_v<T, ColorPermutation>) {
                check_permutation(act.perm, n, "color");
                std::vector<int> relabel(static_cast<std::size_t>(n + 1), 0);
                for (int x = 1; x <= n; ++x) relabel[static_cast<std::size_t>(act.perm[static_cast<std::size_t>(x - 1)] + 1)] = x;
                for (int i = 0; i < r; ++i) {
                    for (int j = 0; j < s; ++j) {
                        const auto& v = grid.at(i, j);
                        if (!v) continue;
                        if (v->color().value > n) throw std::invalid_argument("grid color exceeds n");
                        out.at(i, j) = SignedValue(Color{relabel[static_cast<std::size_t>(v->color().value)]}, v->sign());
                    }
                }
            } else if constexpr (std::is_same_v<T, RowSignFlip>) {
                const auto mask = flip_mask(act.rows, r, 0, "row");
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < s; ++j) {
                        const auto& v = grid.at(i, j);
                        if (v) out.at(i, j) = mask[static_cast<std::size_t>(i)] ? -*v : *v;
                    }
            } else if constexpr (std::is_same_v<T, ColumnSignFlip>) {
                const auto mask = flip_mask(act.cols, s, 0, "column");
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < s; ++j) {
                        const auto& v = grid.at(i, j);
                        if (v) out.at(i, j) = mask[static_cast<std::size_t>(j)] ? -*v : *v;
                    }
            } else {
                const auto mask = flip_mask(act.colors, n, 1, "color");
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < s; ++j) {
                        const auto& v = grid.at(i, j);
                        if (!v) continue;
                        if (v->color().value > n) throw std::invalid_argument("grid color exceeds n");
                        out.at(i, j) = mask[static_cast<std::size_t>(v->color().value - 1)] ? -*v : *v;
                    }
            }
        },
        action);
    return out;
}

Grid transpose(const Grid& grid)
{
    Grid out(grid.cols(), grid.rows());
    for (int i = 0; i < grid.rows(); ++i)
        for (int j = 0; j < grid.cols(); ++j) out.at(j, i) = grid.at(i, j);
    return out;
}

int diagonal_ones(int r, int s, int n)
{
    return (r * s + n - 1) / n;
}

bool is_canonical_form(const Grid& grid, int n)
{
    for (int j = 0; j < grid.cols(); ++j) {
        const auto& v = grid.at(0, j);
        if (!v || v->as_int() != j + 1) return false;
    }
    const int ones = diagonal_ones(grid.rows(), grid.cols(), n);
    if (ones > std::min(grid.rows(), grid.cols())) return false;
    for (int i = 0; i < ones; ++i) {
        const auto& v = grid.at(i, i);
        if (!v || v->as_int() != 1) return false;
    }
    return true;
}

std::optional<std::string> canonical_input_rejection(int r, int s, int n)
{
    if (r < 1 || s < 1 || n < 1) return "type parameters must be positive";
    if (s > n)
        return "no intercalate matrix of type " + to_string(Shape{r, s, n}) + ": a row needs " + std::to_string(s) +
               " distinct colors";
    if (r > n)
        return "no intercalate matrix of type " + to_string(Shape{r, s, n}) + ": a column needs " + std::to_string(r) +
               " distinct colors";
    return std::nullopt;
}

std::optional<MatrixState> canonical_input(int r, int s, int n)
{
    if (auto why = canonical_input_rejection(r, s, n)) throw std::invalid_argument(*why);
    // With r, s <= n the diagonal count ceil(rs/n) never exceeds min(r, s).
    MatrixState state(r, s, n);
    for (int j = 0; j < s; ++j) {
        if (!assign(state, Coordinate{0, j}, SignedValue(Color{j + 1}, 1))) return std::nullopt;
    }
    const SignedValue one(Color{1}, 1);
    for (int i = 1; i < diagonal_ones(r, s, n); ++i) {
        if (!assign(state, Coordinate{i, i}, one)) return std::nullopt;
    }
    if (!propagate(state)) return std::nullopt;
    return state;
}

Grid canonicalize(const Grid& grid, int n)
{
    if (!is_csim(grid, n)) throw std::invalid_argument("canonicalize needs a complete CSIM");
    const int r = grid.rows(), s = grid.cols();
    const int ones = diagonal_ones(r, s, n);

    // Most frequent color becomes 1; smallest label wins ties.
    std::vector<int> count(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) ++count[static_cast<std::size_t>(grid.at(i, j)->color().value)];
    const int frequent =
        static_cast<int>(std::max_element(count.begin() + 1, count.end()) - count.begin());
    Grid g = apply_action(grid, n, ColorPermutation{swap_permutation(n, 0, frequent - 1)});

    // Walk occurrences of color 1 onto the diagonal.
    for (int k = 0; k < ones; ++k) {
        int row = -1, col = -1;
        for (int i = k; i < r && row < 0; ++i)
            for (int j = k; j < s; ++j)
                if (g.at(i, j)->color().value == 1) {
                    row = i;
                    col = j;
                    break;
                }
        if (row < 0) throw std::logic_error("pigeonhole bound violated while canonicalizing");
        g = apply_action(g, n, RowPermutation{swap_permutation(r, k, row)});
        g = apply_action(g, n, ColumnPermutation{swap_permutation(s, k, col)});
    }

    std::vector<int> negative_rows;
    for (int k = 0; k < ones; ++k)
        if (g.at(k, k)->sign() < 0) negative_rows.push_back(k);
    g = apply_action(g, n, RowSignFlip{negative_rows});

    // Relabel the first row to 1, 2, ..., s; earlier entries already hold 1..j.
    for (int j = 1; j < s; ++j) {
        const int z = g.at(0, j)->color().value;
        if (z != j + 1) g = apply_action(g, n, ColorPermutation{swap_permutation(n, z - 1, j)});
        if (g.at(0, j)->sign() < 0) g = apply_action(g, n, ColorSignFlip{{j + 1}});
    }
    return g;
}

}  // namespace sosprop
