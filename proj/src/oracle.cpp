#include "sosprop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sosprop {

double search_space_bits(int r, int s, int n)
{
    return static_cast<double>(r) * s * std::log2(2.0 * n);
}

namespace {

class Enumerator {
public:
    Enumerator(int r, int s, int n, const OracleOptions& options, const std::function<bool(const Grid&)>& visit)
        : r_(r), s_(s), n_(n), options_(options), visit_(visit),
          ones_((r * s + n - 1) / n), cells_(static_cast<std::size_t>(r * s), 0)
    {
    }

    std::size_t run()
    {
        fill(0);
        return visited_;
    }

private:
    int at(int i, int j) const { return cells_[static_cast<std::size_t>(i * s_ + j)]; }
    static int color(int v) { return v < 0 ? -v : v; }

    bool allowed(int i, int j, int v) const
    {
        if (options_.canonical_only) {
            if (i == 0 && v != j + 1) return false;
            if (i == j && i < ones_ && v != 1) return false;
        }
        const int c = color(v);
        for (int jj = 0; jj < j; ++jj)
            if (color(at(i, jj)) == c) return false;
        for (int ii = 0; ii < i; ++ii)
            if (color(at(ii, j)) == c) return false;
        // Every square whose bottom-right corner is (i,j) is now complete.
        for (int ii = 0; ii < i; ++ii) {
            for (int jj = 0; jj < j; ++jj) {
                const int tl = at(ii, jj), tr = at(ii, j), bl = at(i, jj);
                const bool main_diag = color(tl) == c;
                const bool anti_diag = color(tr) == color(bl);
                if (main_diag != anti_diag) return false;
                if (main_diag) {
                    const int minus = (tl < 0) + (tr < 0) + (bl < 0) + (v < 0);
                    if (minus % 2 == 0) return false;
                }
            }
        }
        return true;
    }

    // Returns false to stop the enumeration.
    bool fill(int idx)
    {
        if (idx == r_ * s_) {
            Grid g(r_, s_);
            for (int k = 0; k < r_ * s_; ++k) g.at(k / s_, k % s_) = SignedValue::from_int(cells_[static_cast<std::size_t>(k)]);
            if (!is_csim(g, n_)) throw std::logic_error("oracle prefix checks admitted a non-CSIM");
            ++visited_;
            if (!visit_(g)) return false;
            return !(options_.limit && visited_ >= *options_.limit);
        }
        const int i = idx / s_, j = idx % s_;
        for (int c = 1; c <= n_; ++c) {
            for (int sign : {1, -1}) {
                const int v = sign * c;
                if (!allowed(i, j, v)) continue;
                cells_[static_cast<std::size_t>(idx)] = v;
                if (!fill(idx + 1)) return false;
            }
        }
        cells_[static_cast<std::size_t>(idx)] = 0;
        return true;
    }

    int r_, s_, n_;
    const OracleOptions& options_;
    const std::function<bool(const Grid&)>& visit_;
    int ones_;
    std::vector<int> cells_;
    std::size_t visited_ = 0;
};

void check_budget(int r, int s, int n, const OracleOptions& options)
{
    if (r < 1 || s < 1 || n < 1) throw std::invalid_argument("type parameters must be positive");
    const double bits = search_space_bits(r, s, n);
    if (bits > options.max_bits)
        throw OracleBudgetExceeded("brute force over " + std::to_string(r) + "x" + std::to_string(s) + " grids with n=" +
                                   std::to_string(n) + " needs " + std::to_string(bits) + " bits of search space, limit " +
                                   std::to_string(options.max_bits));
}

}  // namespace

std::size_t for_each_csim(int r, int s, int n, const OracleOptions& options,
                          const std::function<bool(const Grid&)>& visit)
{
    check_budget(r, s, n, options);
    if (options.limit && *options.limit == 0) return 0;
    if (options.canonical_only && (s > n || (r * s + n - 1) / n > std::min(r, s))) return 0;
    return Enumerator(r, s, n, options, visit).run();
}

std::vector<Grid> enumerate_csims(int r, int s, int n, const OracleOptions& options)
{
    std::vector<Grid> out;
    for_each_csim(r, s, n, options, [&](const Grid& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

bool exists_csim(int r, int s, int n, const OracleOptions& options)
{
    OracleOptions first = options;
    first.limit = 1;
    return for_each_csim(r, s, n, first, [](const Grid&) { return true; }) > 0;
}

}  // namespace sosprop
