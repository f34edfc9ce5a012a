#pragma once

// Arbitrary-precision integers and rationals.
//
// Both types are value types backed by GMP. Rationals are kept in lowest
// terms with a positive denominator at all times.

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace poincare {

class ExactInteger {
public:
    ExactInteger() = default;
    ExactInteger(long v) : value_(v) {}
    explicit ExactInteger(mpz_class v) : value_(std::move(v)) {}

    static ExactInteger from_string(std::string_view digits);

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_long() const { return value_.fits_slong_p(); }
    long to_long() const;
    std::string to_string() const { return value_.get_str(); }
    const mpz_class& value() const { return value_; }

    ExactInteger& operator+=(const ExactInteger& o) { value_ += o.value_; return *this; }
    ExactInteger& operator-=(const ExactInteger& o) { value_ -= o.value_; return *this; }
    ExactInteger& operator*=(const ExactInteger& o) { value_ *= o.value_; return *this; }

    friend ExactInteger operator+(ExactInteger a, const ExactInteger& b) { return a += b; }
    friend ExactInteger operator-(ExactInteger a, const ExactInteger& b) { return a -= b; }
    friend ExactInteger operator*(ExactInteger a, const ExactInteger& b) { return a *= b; }
    friend ExactInteger operator-(const ExactInteger& a) { return ExactInteger(mpz_class(-a.value_)); }

    friend bool operator==(const ExactInteger& a, const ExactInteger& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactInteger& v) { return os << v.to_string(); }

private:
    mpz_class value_;
};

class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long v) : value_(v) {}
    ExactRational(const ExactInteger& v) : value_(v.value()) {}
    // Throws std::domain_error on a zero denominator.
    ExactRational(const ExactInteger& num, const ExactInteger& den);
    explicit ExactRational(mpq_class v);

    // Accepts "p" or "p/q".
    static ExactRational from_string(std::string_view text);

    ExactInteger numerator() const { return ExactInteger(mpz_class(value_.get_num())); }
    ExactInteger denominator() const { return ExactInteger(mpz_class(value_.get_den())); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    const mpq_class& value() const { return value_; }

    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
    // Throws std::domain_error on division by zero.
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.value_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

private:
    mpq_class value_;
};

// C(a, b) for a >= 0; zero when b < 0 or b > a. Throws InvalidArgument for a < 0.
ExactInteger binomial(long a, long b);

// Rising factorial n (n+1) ... (n+m-1); (n)_0 = 1.
ExactInteger shifted_factorial(long n, long m);

ExactInteger factorial(long n);

// 2^e as an exact integer, e >= 0.
ExactInteger power_of_two(long e);

} // namespace poincare
