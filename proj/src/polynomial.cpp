#include "poincare/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "poincare/errors.hpp"

namespace poincare {

Polynomial::Polynomial(std::initializer_list<ExactRational> coeffs) : coeffs_(coeffs)
{
    normalize();
}

Polynomial::Polynomial(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

Polynomial Polynomial::constant(const ExactRational& c)
{
    return Polynomial(std::vector<ExactRational>{c});
}

Polynomial Polynomial::monomial(const ExactRational& c, std::size_t power)
{
    std::vector<ExactRational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_power(std::size_t k)
{
    return constant(1) - monomial(1, k);
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

ExactRational Polynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
}

ExactRational Polynomial::leading_coefficient() const
{
    return coeffs_.empty() ? ExactRational(0) : coeffs_.back();
}

ExactRational Polynomial::evaluate(const ExactRational& z) const
{
    ExactRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<ExactRational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * ExactRational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::scaled(const ExactRational& c) const
{
    if (c.is_zero())
        return {};
    Polynomial r = *this;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e != 0)
            base *= base;
    }
    return result;
}

Polynomial Polynomial::substitute_power(std::size_t k) const
{
    if (k == 0)
        return constant(evaluate(1));
    if (coeffs_.empty())
        return {};
    std::vector<ExactRational> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * k] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reflect_at_one() const
{
    // Horner in the ring: acc <- acc * (1 - z) + c_i
    const Polynomial one_minus_z{1, -1};
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= one_minus_z;
        acc += constant(*it);
    }
    return acc;
}

std::pair<Polynomial, ExactRational> Polynomial::divide_by_linear(const ExactRational& root) const
{
    if (coeffs_.empty())
        return {Polynomial{}, ExactRational(0)};
    const std::size_t d = coeffs_.size() - 1;
    std::vector<ExactRational> q(d);
    ExactRational carry = coeffs_[d];
    for (std::size_t i = d; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + carry * root;
    }
    return {Polynomial(std::move(q)), carry};
}

std::size_t Polynomial::root_multiplicity(const ExactRational& root) const
{
    if (is_zero())
        throw InvalidArgument("root multiplicity of the zero polynomial");
    std::size_t m = 0;
    Polynomial p = *this;
    for (;;) {
        auto [q, rem] = p.divide_by_linear(root);
        if (!rem.is_zero())
            return m;
        ++m;
        p = std::move(q);
    }
}

bool Polynomial::is_palindromic() const
{
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

bool Polynomial::is_scalar_multiple_of(const Polynomial& other, ExactRational* factor) const
{
    if (other.is_zero() || coeffs_.size() != other.coeffs_.size())
        return false;
    const ExactRational c = leading_coefficient() / other.leading_coefficient();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != c * other.coeffs_[i])
            return false;
    if (factor)
        *factor = c;
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<ExactRational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero())
                continue;
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(r));
}

std::string Polynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const ExactRational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        ExactRational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == ExactRational(1);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!unit)
            os << mag << "*";
        os << "z";
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

} // namespace poincare
