#include "poincare/poincare.hpp"

#include <string>
#include <vector>

#include "poincare/errors.hpp"
#include "poincare/narayana.hpp"

namespace poincare {

std::string_view kind_name(AlgebraKind kind)
{
    return kind == AlgebraKind::invariants ? "invariants" : "covariants";
}

std::optional<AlgebraKind> parse_kind(std::string_view name)
{
    if (name == "invariants")
        return AlgebraKind::invariants;
    if (name == "covariants")
        return AlgebraKind::covariants;
    return std::nullopt;
}

long min_n(AlgebraKind kind)
{
    return kind == AlgebraKind::invariants ? 2 : 1;
}

void require_valid_n(AlgebraKind kind, long n)
{
    if (n < min_n(kind))
        throw InvalidArgument("n out of range (" + std::string(kind_name(kind)) + " require n ≥ " +
                              std::to_string(min_n(kind)) + ")");
}

long denominator_exponent(AlgebraKind kind, long n)
{
    require_valid_n(kind, n);
    return kind == AlgebraKind::invariants ? 2 * n - 3 : 2 * n - 1;
}

namespace {

Polynomial one_minus_z2_pow(long e)
{
    return Polynomial::one_minus_power(2).pow(static_cast<unsigned>(e));
}

} // namespace

Polynomial invariants_explicit_numerator(long n)
{
    require_valid_n(AlgebraKind::invariants, n);
    std::vector<ExactRational> c(static_cast<std::size_t>(2 * n));
    for (long k = 1; k <= n - 2; ++k)
        c[static_cast<std::size_t>(2 * k - 2)] =
            ExactRational(binomial(n - 3, k - 1) * binomial(n - 2, k - 1), ExactInteger(k));
    return Polynomial(std::move(c));
}

Polynomial covariants_explicit_numerator(long n)
{
    require_valid_n(AlgebraKind::covariants, n);
    std::vector<ExactRational> c(static_cast<std::size_t>(2 * n));
    for (long k = 0; k <= n - 1; ++k) {
        const ExactInteger b = binomial(n - 1, k);
        c[static_cast<std::size_t>(2 * k)] += b * b;
    }
    for (long k = 0; k <= n - 2; ++k)
        c[static_cast<std::size_t>(2 * k + 1)] += binomial(n - 2, k) * binomial(n, k + 1);
    return Polynomial(std::move(c));
}

RationalFunction invariants_closed_form(long n)
{
    require_valid_n(AlgebraKind::invariants, n);
    Polynomial num = narayana_poly(n - 2).substitute_power(2);
    if (n >= 3 && num != invariants_explicit_numerator(n))
        throw IntegrityError("invariants numerator: Narayana form and explicit sum disagree at n=" +
                             std::to_string(n));
    return RationalFunction(std::move(num), one_minus_z2_pow(2 * n - 3));
}

RationalFunction covariants_closed_form(long n)
{
    require_valid_n(AlgebraKind::covariants, n);
    const Polynomial z = Polynomial::monomial(1, 1);
    Polynomial num = narayana_b_poly(n - 1).substitute_power(2) +
                     (z * narayana_poly(n - 1).substitute_power(2)).scaled(ExactRational(n));
    if (n >= 2 && num != covariants_explicit_numerator(n))
        throw IntegrityError("covariants numerator: Narayana form and explicit sum disagree at n=" +
                             std::to_string(n));
    return RationalFunction(std::move(num), one_minus_z2_pow(2 * n - 1));
}

RationalFunction closed_form(AlgebraKind kind, long n)
{
    return kind == AlgebraKind::invariants ? invariants_closed_form(n) : covariants_closed_form(n);
}

ExactRational derivative_form_coefficient(long n, long k)
{
    if (k < 1 || k > n)
        throw InvalidArgument("derivative_form_coefficient: k must lie in 1..n");
    ExactInteger num = shifted_factorial(n, n - k);
    if ((n - k) % 2 != 0)
        num = -num;
    return ExactRational(num, factorial(k - 1) * factorial(n - k));
}

namespace {

// sum_{k=1}^{n} c_k d^{k-1}/dz^{k-1} term(k)
template <class Term>
RationalFunction derivative_sum(long n, Term term)
{
    std::optional<RationalFunction> acc;
    for (long k = 1; k <= n; ++k) {
        RationalFunction t =
            rf_derivative(term(k), static_cast<unsigned>(k - 1)).scaled(derivative_form_coefficient(n, k));
        acc = acc ? *acc + t : t;
    }
    return *acc;
}

} // namespace

RationalFunction invariants_derivative_rf(long n)
{
    require_valid_n(AlgebraKind::invariants, n);
    const RationalFunction base(Polynomial::monomial(1, 1), Polynomial::one_minus_power(2));
    return derivative_sum(n, [&](long k) { return base.pow(static_cast<unsigned>(2 * n - k - 1)); });
}

RationalFunction covariants_derivative_rf(long n)
{
    require_valid_n(AlgebraKind::covariants, n);
    const Polynomial one_plus_z{1, 1};
    return derivative_sum(n, [&](long k) {
        return RationalFunction(one_plus_z * Polynomial::monomial(1, static_cast<std::size_t>(2 * n - k - 1)),
                                one_minus_z2_pow(2 * n - k));
    });
}

CovariantParts covariants_derivative_parts(long n)
{
    require_valid_n(AlgebraKind::covariants, n);
    RationalFunction even = derivative_sum(n, [&](long k) {
        return RationalFunction(Polynomial::monomial(1, static_cast<std::size_t>(2 * n - k - 1)),
                                one_minus_z2_pow(2 * n - k));
    });
    RationalFunction odd = derivative_sum(n, [&](long k) {
        return RationalFunction(Polynomial::monomial(1, static_cast<std::size_t>(2 * n - k)),
                                one_minus_z2_pow(2 * n - k));
    });
    return {std::move(even), std::move(odd)};
}

TruncatedSeries invariants_derivative_form(long n, std::size_t order)
{
    return series_expand(invariants_derivative_rf(n), order);
}

TruncatedSeries covariants_derivative_form(long n, std::size_t order)
{
    return series_expand(covariants_derivative_rf(n), order);
}

TruncatedSeries derivative_form(AlgebraKind kind, long n, std::size_t order)
{
    return kind == AlgebraKind::invariants ? invariants_derivative_form(n, order)
                                           : covariants_derivative_form(n, order);
}

PoincareReport dims(AlgebraKind kind, long n, std::size_t order)
{
    RationalFunction f = closed_form(kind, n);
    TruncatedSeries s = series_expand(f, order);
    for (std::size_t j = 0; j <= order; ++j) {
        const ExactRational& c = s[j];
        if (!c.is_integer() || c.sign() < 0)
            throw IntegrityError("dimension of degree " + std::to_string(j) + " for " + std::string(kind_name(kind)) +
                                 " n=" + std::to_string(n) + " is not a non-negative integer: " + c.to_string());
    }
    return PoincareReport{kind, n, std::move(f), std::move(s), order};
}

} // namespace poincare
