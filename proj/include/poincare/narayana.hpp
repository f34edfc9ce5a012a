#pragma once

#include "poincare/exact.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

// N_n(z) = sum_{k=1}^{n} (1/k) C(n-1,k-1) C(n,k-1) z^{k-1}, with N_0 := 1.
// Throws IntegrityError if a coefficient comes out non-integral.
Polynomial narayana_poly(long n);

// W_n(z) = sum_{k=0}^{n} C(n,k)^2 z^k.
Polynomial narayana_b_poly(long n);

// C(2n,n) / (n+1)
ExactInteger catalan(long n);

ExactInteger central_binomial(long n);

} // namespace poincare
