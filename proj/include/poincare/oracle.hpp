#pragma once

// Independent dimension counts for I_n and C_n by SL_2 weight counting.
//
// A degree-d monomial in the coordinates of n V_1 uses p coordinates of
// weight +1 and q of weight -1 (p + q = d); its weight is p - q. Invariants of
// degree d number mult(0) - mult(2). Covariants of coefficient-degree j are
// highest-weight vectors of any weight, and the sum over weights telescopes
// to mult(0) + mult(1). Nothing here touches the closed forms.

#include <cstdint>

#include "poincare/exact.hpp"

namespace poincare {

// Number of degree-d monomials in x_1..x_n, y_1..y_n whose x-degree minus
// y-degree equals w.
ExactInteger weight_multiplicity(long n, long d, long w);

ExactInteger dim_invariants_oracle(long n, long d);
ExactInteger dim_covariants_oracle(long n, long j);

inline constexpr std::uint64_t bruteforce_limit = 10'000'000;

// Same count by walking every exponent vector (a_1..a_n, b_1..b_n) of total
// degree d. Throws InvalidArgument when C(d+2n-1, 2n-1) > bruteforce_limit.
ExactInteger weight_multiplicity_bruteforce(long n, long d, long w);

} // namespace poincare
