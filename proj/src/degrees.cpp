#include "poincare/degrees.hpp"

#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/narayana.hpp"
#include "poincare/rational_function.hpp"

namespace poincare {

long transcendence_degree(AlgebraKind kind, long n)
{
    require_valid_n(kind, n);
    const long order = static_cast<long>(pole_order_at_one(closed_form(kind, n)));
    const long expected = kind == AlgebraKind::invariants ? 2 * n - 3 : 2 * n - 1;
    if (order != expected)
        throw IntegrityError("pole order " + std::to_string(order) + " of the " + std::string(kind_name(kind)) +
                             " series at n=" + std::to_string(n) + ", expected " + std::to_string(expected));
    return order;
}

ExactRational degree_formula(AlgebraKind kind, long n)
{
    require_valid_n(kind, n);
    if (kind == AlgebraKind::invariants)
        return ExactRational(binomial(2 * n - 4, n - 2), ExactInteger(n - 1) * power_of_two(2 * n - 3));
    return ExactRational(binomial(2 * n - 2, n - 1), power_of_two(2 * n - 2));
}

DegreeReport degree_of_algebra(AlgebraKind kind, long n)
{
    const long r = transcendence_degree(kind, n);
    const LaurentExpansion le = laurent_at_one(closed_form(kind, n), 2);
    if (static_cast<long>(le.pole_order) != r)
        throw IntegrityError("Laurent pole order disagrees with synthetic division");
    DegreeReport rep{kind, n, r, le.coefficients[0], degree_formula(kind, n), le.coefficients[1], false};
    rep.agree = rep.degree_limit == rep.degree_formula;
    return rep;
}

namespace {

// log of a positive big integer from its top 64 bits.
long double log_integer(const mpz_class& v)
{
    const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    const std::size_t shift = bits > 64 ? bits - 64 : 0;
    const mpz_class top = v >> shift;
    const mpz_class hi = top >> 32;
    const mpz_class lo = top - (hi << 32);
    const long double x = static_cast<long double>(hi.get_ui()) * 4294967296.0L + static_cast<long double>(lo.get_ui());
    return std::log(x) + static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

} // namespace

long double log_exact(const ExactRational& x)
{
    if (x.sign() <= 0)
        throw InvalidArgument("log of a non-positive rational");
    return log_integer(x.numerator().value()) - log_integer(x.denominator().value());
}

long double asymptotic_ratio(AlgebraKind kind, long n)
{
    if (n < 3)
        throw InvalidArgument("asymptotic_ratio: requires n >= 3");
    const long double log_pi = std::log(std::numbers::pi_v<long double>);
    const long double log_n = std::log(static_cast<long double>(n));
    const long double log_deg = log_exact(degree_formula(kind, n));
    // 1/(2 sqrt(pi n^3))  or  1/sqrt(pi n)
    const long double log_model = kind == AlgebraKind::invariants
                                      ? -std::numbers::ln2_v<long double> - 0.5L * log_pi - 1.5L * log_n
                                      : -0.5L * log_pi - 0.5L * log_n;
    return std::exp(log_deg - log_model);
}

long double catalan_asymptotic_ratio(long n)
{
    if (n < 1)
        throw InvalidArgument("catalan_asymptotic_ratio: requires n >= 1");
    const long double ln = static_cast<long double>(n);
    const long double log_model = ln * std::log(4.0L) - 1.5L * std::log(ln) -
                                  0.5L * std::log(std::numbers::pi_v<long double>);
    return std::exp(log_exact(ExactRational(catalan(n))) - log_model);
}

} // namespace poincare
