#include "sosprop/formula.hpp"

#include <sstream>
#include <stdexcept>

namespace sosprop {

SosFormula matrix_to_formula_unchecked(const Grid& grid, int n)
{
    if (!grid.complete()) throw std::invalid_argument("formula needs a complete matrix");
    SosFormula f{grid.rows(), grid.cols(), n, std::vector<std::vector<Monomial>>(static_cast<std::size_t>(n))};
    for (int i = 0; i < grid.rows(); ++i) {
        for (int j = 0; j < grid.cols(); ++j) {
            const SignedValue v = *grid.at(i, j);
            if (v.color().value > n) throw std::invalid_argument("matrix color exceeds n");
            f.terms[static_cast<std::size_t>(v.color().value - 1)].push_back({v.sign(), i + 1, j + 1});
        }
    }
    return f;
}

SosFormula matrix_to_formula(const Grid& grid, int n)
{
    if (!is_csim(grid, n)) throw std::invalid_argument("matrix is not a consistently signed intercalate matrix");
    return matrix_to_formula_unchecked(grid, n);
}

Polynomial identity_defect(const SosFormula& f)
{
    const int vars = f.r + f.s;
    auto x = [&](int i) { return Polynomial::variable(vars, i - 1); };
    auto y = [&](int j) { return Polynomial::variable(vars, f.r + j - 1); };

    Polynomial xs(vars), ys(vars);
    for (int i = 1; i <= f.r; ++i) xs += x(i) * x(i);
    for (int j = 1; j <= f.s; ++j) ys += y(j) * y(j);
    Polynomial defect = xs * ys;

    for (const auto& z_terms : f.terms) {
        Polynomial z(vars);
        for (const Monomial& m : z_terms) {
            if (m.x < 1 || m.x > f.r || m.y < 1 || m.y > f.s) throw std::invalid_argument("monomial index out of range");
            z += Polynomial::variable(vars, m.x - 1, m.sign) * y(m.y);
        }
        defect -= z * z;
    }
    return defect;
}

bool verify_identity(const SosFormula& formula)
{
    return identity_defect(formula).is_zero();
}

std::string format_formula(const SosFormula& f)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < f.terms.size(); ++k) {
        out << 'z' << (k + 1) << " =";
        const auto& z = f.terms[k];
        if (z.empty()) out << " 0";
        for (std::size_t t = 0; t < z.size(); ++t) {
            const Monomial& m = z[t];
            if (t == 0)
                out << (m.sign < 0 ? " -" : " ");
            else
                out << (m.sign < 0 ? " - " : " + ");
            out << 'x' << m.x << 'y' << m.y;
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json formula_record(const SosFormula& f)
{
    nlohmann::ordered_json z = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < f.terms.size(); ++k) {
        nlohmann::ordered_json monomials = nlohmann::ordered_json::array();
        for (const Monomial& m : f.terms[k]) monomials.push_back({m.sign, m.x, m.y});
        z[std::to_string(k + 1)] = std::move(monomials);
    }
    return {{"type", {f.r, f.s, f.n}}, {"z", std::move(z)}};
}

}  // namespace sosprop
