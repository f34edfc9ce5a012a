#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "poincare/exact.hpp"

namespace poincare {

// Dense univariate polynomial in z over the rationals.
//
// coefficients()[i] is the coefficient of z^i. Trailing zeros are always
// stripped, so the zero polynomial has an empty coefficient list and no degree.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<ExactRational> coeffs);
    explicit Polynomial(std::vector<ExactRational> coeffs);

    static Polynomial constant(const ExactRational& c);
    static Polynomial monomial(const ExactRational& c, std::size_t power);
    // 1 - z^k
    static Polynomial one_minus_power(std::size_t k);

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<ExactRational>& coefficients() const { return coeffs_; }
    // Zero beyond the degree.
    ExactRational coefficient(std::size_t i) const;
    ExactRational leading_coefficient() const;

    ExactRational evaluate(const ExactRational& z) const;
    Polynomial derivative() const;
    Polynomial scaled(const ExactRational& c) const;
    Polynomial pow(unsigned e) const;
    // p(z^k)
    Polynomial substitute_power(std::size_t k) const;
    // p(1 - z)
    Polynomial reflect_at_one() const;
    // Synthetic division by (z - root): returns quotient and remainder p(root).
    std::pair<Polynomial, ExactRational> divide_by_linear(const ExactRational& root) const;
    // Multiplicity of root as a zero; zero polynomial is not allowed.
    std::size_t root_multiplicity(const ExactRational& root) const;
    bool is_palindromic() const;
    bool is_scalar_multiple_of(const Polynomial& other, ExactRational* factor = nullptr) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(ExactRational(-1)); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // e.g. "1 + 3*z + z^2"; "0" for the zero polynomial.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void normalize();

    std::vector<ExactRational> coeffs_;
};

} // namespace poincare
