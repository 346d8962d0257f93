#pragma once

#include "sosprop/verification.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sosprop {

// Brute-force enumeration of CSIMs for tiny types. Depth-first over cells in
// row-major order, values in canonical order, pruning only on conditions every
// CSIM must satisfy (row/column distinctness and fully filled squares).

class OracleBudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

struct OracleOptions {
    std::optional<std::size_t> limit;
    /// Only grids whose first row is 1..s and whose first ceil(rs/n) diagonal cells are +1.
    bool canonical_only = false;
    /// Refuse types whose raw space r*s*log2(2n) exceeds this many bits.
    double max_bits = 36.0;
};

/// r*s*log2(2n).
double search_space_bits(int r, int s, int n);

/// Calls `visit` for each CSIM in lexicographic order until it returns false or the
/// limit is reached. Returns the number visited.
std::size_t for_each_csim(int r, int s, int n, const OracleOptions& options,
                          const std::function<bool(const Grid&)>& visit);

std::vector<Grid> enumerate_csims(int r, int s, int n, const OracleOptions& options = {});

bool exists_csim(int r, int s, int n, const OracleOptions& options = {});

}  // namespace sosprop
