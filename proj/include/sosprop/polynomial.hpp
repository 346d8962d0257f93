#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sosprop {

/// Sparse multivariate polynomial with exact int64 coefficients. Variables are
/// numbered 0..k-1; a monomial is its exponent vector. Arithmetic throws
/// std::overflow_error instead of wrapping.
class Polynomial {
public:
    using Exponents = std::vector<std::uint16_t>;

    explicit Polynomial(int variables) : variables_(variables) {}

    static Polynomial variable(int variables, int index, std::int64_t coefficient = 1);

    int variables() const { return variables_; }
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(const Exponents& monomial) const;
    bool is_zero() const { return terms_.empty(); }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Exponents& monomial, std::int64_t coefficient);

    int variables_;
    std::map<Exponents, std::int64_t> terms_;  // no zero coefficients
};

}  // namespace sosprop
