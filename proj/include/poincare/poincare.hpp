#pragma once

// Poincare series of the algebras of joint invariants I_n and joint
// covariants C_n of n linear binary forms.
//
// Two independent constructions are provided: closed Narayana forms, and the
// older derivative-form sums evaluated by exact rational-function calculus.

#include <cstddef>
#include <optional>
#include <string_view>

#include "poincare/exact.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/rational_function.hpp"
#include "poincare/series.hpp"

namespace poincare {

enum class AlgebraKind { invariants, covariants };

std::string_view kind_name(AlgebraKind kind);
std::optional<AlgebraKind> parse_kind(std::string_view name);

// Smallest supported n: 2 for invariants, 1 for covariants.
long min_n(AlgebraKind kind);
// Throws InvalidArgument("n out of range (invariants require n ≥ 2)") etc.
void require_valid_n(AlgebraKind kind, long n);

// Exponent e of the closed-form denominator (1 - z^2)^e.
long denominator_exponent(AlgebraKind kind, long n);

// N_{n-2}(z^2) / (1 - z^2)^{2n-3}, n >= 2.
RationalFunction invariants_closed_form(long n);
// (W_{n-1}(z^2) + n z N_{n-1}(z^2)) / (1 - z^2)^{2n-1}, n >= 1.
RationalFunction covariants_closed_form(long n);
RationalFunction closed_form(AlgebraKind kind, long n);

// The same numerators written as explicit binomial sums, built without the
// Narayana helpers. At the lower boundary (invariants n = 2, covariants
// n = 1) these sums do not reproduce the Poincare series.
Polynomial invariants_explicit_numerator(long n);
Polynomial covariants_explicit_numerator(long n);

// (-1)^{n-k} (n)_{n-k} / ((k-1)! (n-k)!)
ExactRational derivative_form_coefficient(long n, long k);

// sum_k c_k d^{k-1}/dz^{k-1} (z/(1-z^2))^{2n-k-1}
RationalFunction invariants_derivative_rf(long n);
// sum_k c_k d^{k-1}/dz^{k-1} (1+z) z^{2n-k-1} / (1-z^2)^{2n-k}
RationalFunction covariants_derivative_rf(long n);

// Split of the covariant sum by the (1 + z) factor:
//   even = sum_k c_k d^{k-1} z^{2n-k-1}/(1-z^2)^{2n-k}
//   odd  = sum_k c_k d^{k-1} z^{2n-k}/(1-z^2)^{2n-k}
struct CovariantParts {
    RationalFunction even;
    RationalFunction odd;
};
CovariantParts covariants_derivative_parts(long n);

TruncatedSeries invariants_derivative_form(long n, std::size_t order);
TruncatedSeries covariants_derivative_form(long n, std::size_t order);
TruncatedSeries derivative_form(AlgebraKind kind, long n, std::size_t order);

struct PoincareReport {
    AlgebraKind kind;
    long n;
    RationalFunction closed_form;
    TruncatedSeries dimensions;
    std::size_t truncation_order;
};

// Closed form plus its expansion through z^order. Throws IntegrityError if a
// coefficient is negative or non-integral.
PoincareReport dims(AlgebraKind kind, long n, std::size_t order);

} // namespace poincare
