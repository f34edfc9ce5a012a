#include "poincare/series.hpp"

#include "poincare/errors.hpp"

namespace poincare {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw InvalidArgument("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order)
{
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order; ++i)
        s.coeffs_[i] = p.coefficient(i);
    return s;
}

TruncatedSeries TruncatedSeries::derivative() const
{
    if (order() == 0)
        return TruncatedSeries(0);
    TruncatedSeries d(order() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.coeffs_[i - 1] = coeffs_[i] * ExactRational(static_cast<long>(i));
    return d;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const
{
    if (new_order > order())
        throw InvalidArgument("cannot extend a truncated series beyond its order");
    return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o, const char* what) const
{
    if (o.order() != order())
        throw InvalidArgument(std::string(what) + ": truncation orders differ (" + std::to_string(order()) +
                              " vs " + std::to_string(o.order()) + ")");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    require_same_order(o, "series addition");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.require_same_order(b, "series product");
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= a.order(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.require_same_order(b, "series comparison");
    return a.coeffs_ == b.coeffs_;
}

std::size_t TruncatedSeries::first_difference(const TruncatedSeries& o) const
{
    require_same_order(o, "series comparison");
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == o.coeffs_[i])
        ++i;
    return i;
}

std::string TruncatedSeries::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            s += ", ";
        s += coeffs_[i].to_string();
    }
    return s + "]";
}

} // namespace poincare
