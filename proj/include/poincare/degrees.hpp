#pragma once

// Transcendence degree, algebra degree deg(R) and the second Laurent
// coefficient psi(R) of I_n and C_n, plus the large-n behaviour of deg(R).
//
// deg(R) and psi(R) are read off the exact Laurent expansion of the closed
// form at z = 1 and compared against the closed binomial formulas.

#include <string>

#include "poincare/exact.hpp"
#include "poincare/poincare.hpp"

namespace poincare {

struct DegreeReport {
    AlgebraKind kind;
    long n;
    long tr_deg;
    ExactRational degree_limit;   // leading Laurent coefficient
    ExactRational degree_formula; // C(2n-4,n-2)/((n-1) 2^{2n-3}) or C(2n-2,n-1)/2^{2n-2}
    ExactRational psi;            // second Laurent coefficient
    bool agree;
};

// Pole order of the closed form at z = 1; throws IntegrityError unless it is
// 2n-3 (invariants) or 2n-1 (covariants).
long transcendence_degree(AlgebraKind kind, long n);

ExactRational degree_formula(AlgebraKind kind, long n);

DegreeReport degree_of_algebra(AlgebraKind kind, long n);

// deg(R) divided by 1/(2 sqrt(pi n^3)) (invariants) or 1/sqrt(pi n)
// (covariants), n >= 3. The exact degree is turned into a logarithm through
// its numerator and denominator, so nothing overflows at large n.
long double asymptotic_ratio(AlgebraKind kind, long n);

// catalan(n) / (4^n n^{-3/2} pi^{-1/2}), n >= 1.
long double catalan_asymptotic_ratio(long n);

// Natural logarithm of a positive exact rational.
long double log_exact(const ExactRational& x);

} // namespace poincare
