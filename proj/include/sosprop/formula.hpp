#pragma once

#include "sosprop/polynomial.hpp"
#include "sosprop/verification.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace sosprop {

/// One signed bilinear monomial ±x_i·y_j (1-based indices).
struct Monomial {
    int sign = 1;
    int x = 1;
    int y = 1;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// z_1..z_n of a sums-of-squares formula of type [r,s,n]; terms[k-1] is z_k.
struct SosFormula {
    int r = 0;
    int s = 0;
    int n = 0;
    std::vector<std::vector<Monomial>> terms;

    friend bool operator==(const SosFormula&, const SosFormula&) = default;
};

/// Cell (i,j) holding ±k contributes ±x_i·y_j to z_k. Throws std::invalid_argument
/// unless the grid is a CSIM over 1..n.
SosFormula matrix_to_formula(const Grid& grid, int n);

/// Same correspondence without the CSIM precondition; the grid only needs to be
/// complete with colors in 1..n.
SosFormula matrix_to_formula_unchecked(const Grid& grid, int n);

/// (x_1^2+...+x_r^2)(y_1^2+...+y_s^2) - (z_1^2+...+z_n^2), expanded exactly.
/// Variables 0..r-1 are x, r..r+s-1 are y.
Polynomial identity_defect(const SosFormula& formula);

/// The identity holds exactly over the integers.
bool verify_identity(const SosFormula& formula);

/// "z1 = x1y1 - x2y2 - x3y3", one line per z_k ("zk = 0" when empty).
std::string format_formula(const SosFormula& formula);

/// {"type":[r,s,n], "z":{"1":[[sign,i,j],...], ...}}
nlohmann::ordered_json formula_record(const SosFormula& formula);

}  // namespace sosprop
