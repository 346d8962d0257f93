#include "sosprop/polynomial.hpp"

#include <stdexcept>

namespace sosprop {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
    return out;
}

}  // namespace

Polynomial Polynomial::variable(int variables, int index, std::int64_t coefficient)
{
    if (index < 0 || index >= variables) throw std::out_of_range("polynomial variable index");
    Polynomial p(variables);
    Exponents e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, coefficient);
    return p;
}

std::int64_t Polynomial::coefficient(const Exponents& monomial) const
{
    auto it = terms_.find(monomial);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponents& monomial, std::int64_t coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (inserted) return;
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.variables_ != variables_) throw std::invalid_argument("polynomials over different variable sets");
    for (const auto& [mono, coef] : other.terms_) add_term(mono, coef);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.variables_ != variables_) throw std::invalid_argument("polynomials over different variable sets");
    for (const auto& [mono, coef] : other.terms_) add_term(mono, checked_mul(coef, -1));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.variables_ != b.variables_) throw std::invalid_argument("polynomials over different variable sets");
    Polynomial out(a.variables_);
    Polynomial::Exponents e(static_cast<std::size_t>(a.variables_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(ma[k] + mb[k]);
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

}  // namespace sosprop
