#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "poincare/errors.hpp"
#include "poincare/exact.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/rational_function.hpp"
#include "poincare/series.hpp"

using namespace poincare;

namespace {

using Q = ExactRational;

Q frac(long p, long q) { return Q(ExactInteger(p), ExactInteger(q)); }

const Polynomial z{0, 1};
const Polynomial one_minus_z{1, -1};
const Polynomial one_minus_z2{1, 0, -1};

// Pascal's triangle, independent of binomial().
std::vector<std::vector<ExactInteger>> pascal(long rows)
{
    std::vector<std::vector<ExactInteger>> t(static_cast<std::size_t>(rows + 1));
    for (long a = 0; a <= rows; ++a) {
        t[a].assign(static_cast<std::size_t>(a + 1), ExactInteger(1));
        for (long b = 1; b < a; ++b)
            t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
}

Polynomial random_poly(std::mt19937& rng, int max_degree, bool nonzero_constant)
{
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4);
    std::vector<Q> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c)
        x = Q(coef(rng));
    if (nonzero_constant && c[0].is_zero())
        c[0] = Q(1);
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("binomial")
{
    CHECK(binomial(4, 2) == ExactInteger(6));
    CHECK(binomial(5, 0) == ExactInteger(1));
    CHECK(binomial(3, 5) == ExactInteger(0));
    CHECK(binomial(3, -1) == ExactInteger(0));
    CHECK_THROWS_AS(binomial(-1, 0), InvalidArgument);

    const auto t = pascal(60);
    for (long a = 0; a <= 60; ++a)
        for (long b = 0; b <= a; ++b)
            REQUIRE(binomial(a, b) == t[a][b]);
    // beyond 64 bits
    CHECK(binomial(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("shifted factorial")
{
    CHECK(shifted_factorial(3, 0) == ExactInteger(1));
    CHECK(shifted_factorial(2, 3) == ExactInteger(24));
    CHECK(shifted_factorial(1, 5) == ExactInteger(120));
    for (long n = 0; n <= 12; ++n)
        CHECK(shifted_factorial(1, n) == factorial(n));
    CHECK_THROWS_AS(shifted_factorial(-1, 2), InvalidArgument);
}

TEST_CASE("rationals stay in lowest terms")
{
    const Q a(ExactInteger(6), ExactInteger(-4));
    CHECK(a.numerator() == ExactInteger(-3));
    CHECK(a.denominator() == ExactInteger(2));
    CHECK(a.to_string() == "-3/2");
    CHECK(Q::from_string("10/4") == frac(5, 2));
    CHECK_THROWS_AS(Q(ExactInteger(1), ExactInteger(0)), std::domain_error);
    CHECK_THROWS_AS(Q(1) / Q(0), std::domain_error);
}

TEST_CASE("polynomial arithmetic")
{
    CHECK(Polynomial{1, 0, 1}.derivative() == Polynomial{0, 2});
    CHECK(Polynomial{1, 3, 1}.evaluate(1) == Q(5));
    CHECK(Polynomial{1, 1} * Polynomial{1, -1} == one_minus_z2);
    CHECK(Polynomial{1, 2, 0, 0}.degree() == 1u);
    CHECK_FALSE(Polynomial{0, 0}.degree().has_value());
    CHECK((Polynomial{1, 1} - Polynomial{1, 1}).is_zero());
    CHECK(Polynomial{1, 1}.substitute_power(2) == Polynomial{1, 0, 1});
    CHECK(Polynomial{1, 1}.pow(3) == Polynomial{1, 3, 3, 1});
    CHECK(Polynomial{0, 0, 1}.reflect_at_one() == Polynomial{1, -2, 1});
    CHECK(Polynomial{1, -3, 1}.to_string() == "1 - 3*z + z^2");

    auto [q, r] = Polynomial{-1, 0, 1}.divide_by_linear(1);
    CHECK(q == Polynomial{1, 1});
    CHECK(r.is_zero());
    CHECK(one_minus_z2.pow(3).root_multiplicity(1) == 3u);
    CHECK(one_minus_z2.pow(3).root_multiplicity(-1) == 3u);
    CHECK(one_minus_z2.root_multiplicity(2) == 0u);
}

TEST_CASE("rf_derivative")
{
    const RationalFunction f(z, one_minus_z2);
    CHECK(rf_derivative(f, 0).equivalent(f));
    CHECK(rf_derivative(RationalFunction(Polynomial{1}, one_minus_z), 1)
              .equivalent(RationalFunction(Polynomial{1}, one_minus_z.pow(2))));
    CHECK(rf_derivative(f, 1).equivalent(RationalFunction(Polynomial{1, 0, 1}, one_minus_z2.pow(2))));

    // d^k/dz^k 1/(1-z) = k!/(1-z)^{k+1}; degrees stay linear in k
    for (unsigned k = 0; k <= 10; ++k) {
        const RationalFunction d = rf_derivative(RationalFunction(Polynomial{1}, one_minus_z), k);
        CHECK(d.equivalent(RationalFunction(Polynomial::constant(factorial(k)), one_minus_z.pow(k + 1))));
        CHECK(*d.denominator().degree() == k + 1);
    }
}

TEST_CASE("rational function sums")
{
    const RationalFunction a(Polynomial{1}, one_minus_z);
    const RationalFunction b(Polynomial{1}, Polynomial{1, 1});
    // 1/(1-z) + 1/(1+z) = 2/(1-z^2)
    CHECK((a + b).equivalent(RationalFunction(Polynomial{2}, one_minus_z2)));
    CHECK((a - a).numerator().is_zero());
    CHECK_THROWS_AS(RationalFunction(Polynomial{1}, Polynomial{}), InvalidArgument);
}

TEST_CASE("series_expand")
{
    CHECK(series_expand(RationalFunction(Polynomial{1}, one_minus_z2), 5) ==
          TruncatedSeries({Q(1), Q(0), Q(1), Q(0), Q(1), Q(0)}));
    CHECK(series_expand(RationalFunction(Polynomial{1}, one_minus_z.pow(2)), 4) ==
          TruncatedSeries({Q(1), Q(2), Q(3), Q(4), Q(5)}));
    CHECK(series_expand(RationalFunction(Polynomial{1, 1}, one_minus_z2), 3) ==
          TruncatedSeries({Q(1), Q(1), Q(1), Q(1)}));
    CHECK_THROWS_AS(series_expand(RationalFunction(Polynomial{1}, z), 3), InvalidArgument);

    // 1/(1-z)^k has coefficients C(i+k-1, k-1)
    for (unsigned k = 1; k <= 6; ++k) {
        const TruncatedSeries s = series_expand(RationalFunction(Polynomial{1}, one_minus_z.pow(k)), 20);
        for (long i = 0; i <= 20; ++i)
            CHECK(s[static_cast<std::size_t>(i)] == Q(binomial(i + k - 1, k - 1)));
    }
}

TEST_CASE("truncated series compare only at equal orders")
{
    const TruncatedSeries a({Q(1), Q(2)});
    const TruncatedSeries b({Q(1), Q(2), Q(3)});
    CHECK_THROWS_AS((void)(a == b), InvalidArgument);
    CHECK(b.truncated(1) == a);
    CHECK(b.derivative() == TruncatedSeries({Q(2), Q(6)}));
}

TEST_CASE("pole order at one")
{
    CHECK(pole_order_at_one(RationalFunction(Polynomial{1}, one_minus_z2)) == 1u);
    CHECK(pole_order_at_one(RationalFunction(one_minus_z, one_minus_z)) == 0u);
    CHECK(pole_order_at_one(RationalFunction(Polynomial{1}, one_minus_z2.pow(3))) == 3u);
    CHECK(pole_order_at_one(RationalFunction(one_minus_z.pow(2), one_minus_z)) == 0u);
    CHECK_THROWS_AS(pole_order_at_one(RationalFunction(Polynomial{}, one_minus_z)), InvalidArgument);
}

TEST_CASE("laurent_at_one")
{
    auto le = laurent_at_one(RationalFunction(Polynomial{1}, one_minus_z2), 2);
    CHECK(le.pole_order == 1u);
    CHECK(le.coefficients == std::vector<Q>{frac(1, 2), frac(1, 4)});

    le = laurent_at_one(RationalFunction(Polynomial{1}, one_minus_z), 1);
    CHECK(le.pole_order == 1u);
    CHECK(le.coefficients == std::vector<Q>{Q(1)});

    le = laurent_at_one(RationalFunction(Polynomial{1}, one_minus_z2.pow(3)), 1);
    CHECK(le.pole_order == 3u);
    CHECK(le.coefficients[0] == frac(1, 8));

    // zero of order 2 at z = 1: (1-z)^2 / 1
    le = laurent_at_one(RationalFunction(one_minus_z.pow(2)), 3);
    CHECK(le.pole_order == 0u);
    CHECK(le.coefficients == std::vector<Q>{Q(0), Q(0), Q(1)});
}

TEST_CASE("property: derivative commutes with expansion")
{
    std::mt19937 rng(20240611);
    const std::vector<Polynomial> factors = {one_minus_z, one_minus_z2, Polynomial{1, 2}, Polynomial{2, 0, 1}};
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial den{1};
        std::uniform_int_distribution<int> pick(0, 3), count(1, 4);
        for (int i = count(rng); i > 0; --i)
            den *= factors[static_cast<std::size_t>(pick(rng))];
        const RationalFunction f(random_poly(rng, 5, false), den);
        const std::size_t D = 15;
        CHECK(series_expand(rf_derivative(f, 1), D) == series_expand(f, D + 1).derivative());
        CHECK(series_expand(rf_derivative(f, 3), D) ==
              series_expand(f, D + 3).derivative().derivative().derivative());
    }
}

TEST_CASE("property: expansion is multiplicative")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const RationalFunction f(random_poly(rng, 4, false), random_poly(rng, 3, true));
        const RationalFunction g(random_poly(rng, 4, false));
        const std::size_t D = 12;
        CHECK(series_expand(f * g, D) == series_expand(f, D) * series_expand(g, D));
        CHECK(series_expand(f + g, D) == series_expand(f, D) + series_expand(g, D));
    }
}

TEST_CASE("property: Laurent leading coefficient of Q/(1-z^2)^r is Q(1)/2^r")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial q = random_poly(rng, 6, true);
        if (q.evaluate(1).is_zero())
            q += Polynomial{1};
        const unsigned r = 1 + static_cast<unsigned>(trial % 6);
        const RationalFunction f(q, one_minus_z2.pow(r));
        const LaurentExpansion le = laurent_at_one(f, 2);
        CHECK(le.pole_order == r);
        CHECK(pole_order_at_one(f) == r);
        CHECK(le.coefficients[0] == q.evaluate(1) / Q(power_of_two(r)));
        // second coefficient: (r Q(1)/2 - Q'(1)) / 2^r
        CHECK(le.coefficients[1] ==
              (Q(static_cast<long>(r)) * q.evaluate(1) / Q(2) - q.derivative().evaluate(1)) / Q(power_of_two(r)));
    }
}
