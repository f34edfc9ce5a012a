#include "poincare/rational_function.hpp"

#include <algorithm>

#include "poincare/errors.hpp"

namespace poincare {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero())
        throw InvalidArgument("rational function with zero denominator");
}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(1))
{
}

RationalFunction RationalFunction::cancel_common_root(const ExactRational& root) const
{
    Polynomial n = num_;
    Polynomial d = den_;
    while (!n.is_zero()) {
        auto [nq, nr] = n.divide_by_linear(root);
        if (!nr.is_zero())
            break;
        auto [dq, dr] = d.divide_by_linear(root);
        if (!dr.is_zero())
            break;
        n = std::move(nq);
        d = std::move(dq);
    }
    return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::cancel_plus_minus_one() const
{
    return cancel_common_root(ExactRational(1)).cancel_common_root(ExactRational(-1));
}

RationalFunction RationalFunction::derivative() const
{
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(std::move(n), den_ * den_).cancel_plus_minus_one();
}

RationalFunction RationalFunction::scaled(const ExactRational& c) const
{
    return RationalFunction(num_.scaled(c), den_);
}

RationalFunction RationalFunction::pow(unsigned e) const
{
    return RationalFunction(num_.pow(e), den_.pow(e));
}

bool RationalFunction::equivalent(const RationalFunction& other) const
{
    return num_ * other.den_ == other.num_ * den_;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    // b.den == c * a.den  =>  a + b = (c a.num + b.num) / b.den
    ExactRational c;
    if (b.den_.is_scalar_multiple_of(a.den_, &c))
        return RationalFunction(a.num_.scaled(c) + b.num_, b.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_).cancel_plus_minus_one();
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + b.scaled(ExactRational(-1));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string() const
{
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction rf_derivative(const RationalFunction& f, unsigned k)
{
    RationalFunction g = f;
    for (unsigned i = 0; i < k; ++i)
        g = g.derivative();
    return g;
}

namespace {

// Power series of num/den through `order`; den(0) must be nonzero.
std::vector<ExactRational> divide_series(const Polynomial& num, const Polynomial& den, std::size_t order)
{
    const ExactRational d0 = den.coefficient(0);
    if (d0.is_zero())
        throw InvalidArgument("series expansion: denominator vanishes at z = 0");
    const ExactRational inv_d0 = ExactRational(1) / d0;
    const auto& dc = den.coefficients();
    std::vector<ExactRational> s(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        ExactRational acc = num.coefficient(i);
        const std::size_t jmax = std::min(i, dc.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j)
            if (!dc[j].is_zero())
                acc -= dc[j] * s[i - j];
        s[i] = acc * inv_d0;
    }
    return s;
}

std::size_t low_order_zeros(const Polynomial& p)
{
    std::size_t v = 0;
    while (p.coefficient(v).is_zero())
        ++v;
    return v;
}

Polynomial drop_low_terms(const Polynomial& p, std::size_t count)
{
    const auto& c = p.coefficients();
    return Polynomial(std::vector<ExactRational>(c.begin() + static_cast<std::ptrdiff_t>(count), c.end()));
}

} // namespace

TruncatedSeries series_expand(const RationalFunction& f, std::size_t order)
{
    return TruncatedSeries(divide_series(f.numerator(), f.denominator(), order));
}

std::size_t pole_order_at_one(const RationalFunction& f)
{
    if (f.numerator().is_zero())
        throw InvalidArgument("pole order of the zero function");
    const ExactRational one(1);
    const std::size_t den_mult = f.denominator().root_multiplicity(one);
    const std::size_t num_mult = f.numerator().root_multiplicity(one);
    return den_mult > num_mult ? den_mult - num_mult : 0;
}

LaurentExpansion laurent_at_one(const RationalFunction& f, std::size_t terms)
{
    if (f.numerator().is_zero())
        throw InvalidArgument("Laurent expansion of the zero function");
    if (terms == 0)
        throw InvalidArgument("Laurent expansion needs at least one term");
    // u = 1 - z
    const Polynomial nu = f.numerator().reflect_at_one();
    const Polynomial du = f.denominator().reflect_at_one();
    const std::size_t b = low_order_zeros(nu);
    const std::size_t a = low_order_zeros(du);
    const auto regular = divide_series(drop_low_terms(nu, b), drop_low_terms(du, a), terms - 1);

    LaurentExpansion out;
    if (a >= b) {
        out.pole_order = a - b;
        out.coefficients = regular;
        return out;
    }
    // Zero of order b - a at z = 1: leading terms vanish.
    out.pole_order = 0;
    out.coefficients.assign(std::min(terms, b - a), ExactRational(0));
    for (std::size_t i = 0; out.coefficients.size() < terms; ++i)
        out.coefficients.push_back(regular[i]);
    return out;
}

} // namespace poincare
