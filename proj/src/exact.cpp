#include "poincare/exact.hpp"

#include <stdexcept>
#include <string>

#include "poincare/errors.hpp"

namespace poincare {

ExactInteger ExactInteger::from_string(std::string_view digits)
{
    mpz_class v;
    if (digits.empty() || v.set_str(std::string(digits), 10) != 0)
        throw InvalidArgument("not a decimal integer: '" + std::string(digits) + "'");
    return ExactInteger(std::move(v));
}

long ExactInteger::to_long() const
{
    if (!fits_long())
        throw std::overflow_error("integer does not fit in long: " + to_string());
    return value_.get_si();
}

ExactRational::ExactRational(const ExactInteger& num, const ExactInteger& den)
{
    if (den.is_zero())
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num.value(), den.value());
    value_.canonicalize();
}

ExactRational::ExactRational(mpq_class v) : value_(std::move(v))
{
    if (value_.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

ExactRational ExactRational::from_string(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return ExactRational(ExactInteger::from_string(text));
    return ExactRational(ExactInteger::from_string(text.substr(0, slash)),
                         ExactInteger::from_string(text.substr(slash + 1)));
}

std::string ExactRational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator/=(const ExactRational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

ExactInteger binomial(long a, long b)
{
    if (a < 0)
        throw InvalidArgument("binomial: negative upper index " + std::to_string(a));
    if (b < 0 || b > a)
        return ExactInteger(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return ExactInteger(std::move(r));
}

ExactInteger shifted_factorial(long n, long m)
{
    if (n < 0 || m < 0)
        throw InvalidArgument("shifted_factorial: arguments must be non-negative");
    mpz_class r = 1;
    for (long i = 0; i < m; ++i)
        r *= n + i;
    return ExactInteger(std::move(r));
}

ExactInteger factorial(long n)
{
    if (n < 0)
        throw InvalidArgument("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return ExactInteger(std::move(r));
}

ExactInteger power_of_two(long e)
{
    if (e < 0)
        throw InvalidArgument("power_of_two: negative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return ExactInteger(std::move(r));
}

} // namespace poincare
