#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poincare/exact.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/series.hpp"

namespace poincare {

// numerator / denominator, denominator never the zero polynomial.
//
// No gcd normalization is done. The only cancellation performed is of common
// factors (z - 1) and (z + 1), after derivatives and sums with unequal
// denominators; the Poincare denominators are powers of (1 - z^2), so this
// keeps repeated quotient-rule steps from squaring the denominator each time.
class RationalFunction {
public:
    // Throws InvalidArgument if denominator is zero.
    RationalFunction(Polynomial numerator, Polynomial denominator);
    // A polynomial, denominator 1.
    explicit RationalFunction(Polynomial numerator);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    // Strip factors (z - root) shared by numerator and denominator.
    RationalFunction cancel_common_root(const ExactRational& root) const;
    RationalFunction derivative() const;
    RationalFunction scaled(const ExactRational& c) const;
    RationalFunction pow(unsigned e) const;

    // Same function: n1 * d2 == n2 * d1.
    bool equivalent(const RationalFunction& other) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    std::string to_string() const;

private:
    RationalFunction cancel_plus_minus_one() const;

    Polynomial num_;
    Polynomial den_;
};

// Expansion at z = 1 in powers of (1 - z):
//   f = c_0 (1-z)^{-r} + c_1 (1-z)^{-r+1} + ...
struct LaurentExpansion {
    std::size_t pole_order = 0;
    std::vector<ExactRational> coefficients;
};

// k-fold formal derivative.
RationalFunction rf_derivative(const RationalFunction& f, unsigned k);

// Maclaurin coefficients of f through z^order. Throws InvalidArgument when the
// denominator vanishes at z = 0.
TruncatedSeries series_expand(const RationalFunction& f, std::size_t order);

// Order of the pole at z = 1 (0 if f is regular there), by repeated synthetic
// division of both parts by (z - 1). Throws InvalidArgument on a zero numerator.
std::size_t pole_order_at_one(const RationalFunction& f);

// First `terms` Laurent coefficients at z = 1 (terms >= 1).
LaurentExpansion laurent_at_one(const RationalFunction& f, std::size_t terms);

} // namespace poincare
