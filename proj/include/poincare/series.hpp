#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poincare/exact.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

// Power series truncated after z^order. Holds exactly order+1 coefficients.
//
// Two series compare only at equal orders: comparing different orders throws
// InvalidArgument instead of silently comparing a common prefix.
class TruncatedSeries {
public:
    // Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    // Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit TruncatedSeries(std::vector<ExactRational> coeffs);

    static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<ExactRational>& coefficients() const { return coeffs_; }
    const ExactRational& operator[](std::size_t i) const { return coeffs_.at(i); }
    ExactRational& operator[](std::size_t i) { return coeffs_.at(i); }

    // Termwise d/dz; the result has order one less (order 0 stays order 0).
    TruncatedSeries derivative() const;
    TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    // Truncated Cauchy product; orders must match.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    // First index where the two differ, or order()+1 when equal. Orders must match.
    std::size_t first_difference(const TruncatedSeries& o) const;

    std::string to_string() const;

private:
    void require_same_order(const TruncatedSeries& o, const char* what) const;

    std::vector<ExactRational> coeffs_;
};

} // namespace poincare
