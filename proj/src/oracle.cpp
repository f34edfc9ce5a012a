#include "poincare/oracle.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

void require_n(long n, const char* what)
{
    if (n < 1)
        throw InvalidArgument(std::string(what) + ": n must be at least 1");
}

} // namespace

ExactInteger weight_multiplicity(long n, long d, long w)
{
    require_n(n, "weight_multiplicity");
    if (d < 0)
        throw InvalidArgument("weight_multiplicity: negative degree");
    if (std::labs(w) > d || (d + w) % 2 != 0)
        return ExactInteger(0);
    const long p = (d + w) / 2;
    const long q = d - p;
    return binomial(p + n - 1, n - 1) * binomial(q + n - 1, n - 1);
}

ExactInteger dim_invariants_oracle(long n, long d)
{
    require_n(n, "dim_invariants_oracle");
    if (d % 2 != 0)
        return ExactInteger(0);
    return weight_multiplicity(n, d, 0) - weight_multiplicity(n, d, 2);
}

ExactInteger dim_covariants_oracle(long n, long j)
{
    require_n(n, "dim_covariants_oracle");
    return weight_multiplicity(n, j, 0) + weight_multiplicity(n, j, 1);
}

namespace {

// Distribute `remaining` units over slots [slot, 2n); slots < n carry weight
// +1, the rest -1.
void enumerate(long n, long slot, long remaining, long weight, long target, std::uint64_t& count)
{
    const long slots = 2 * n;
    if (slot == slots - 1) {
        const long final_weight = weight + (slot < n ? remaining : -remaining);
        if (final_weight == target)
            ++count;
        return;
    }
    const long sign = slot < n ? 1 : -1;
    for (long e = 0; e <= remaining; ++e)
        enumerate(n, slot + 1, remaining - e, weight + sign * e, target, count);
}

} // namespace

ExactInteger weight_multiplicity_bruteforce(long n, long d, long w)
{
    require_n(n, "weight_multiplicity_bruteforce");
    if (d < 0)
        throw InvalidArgument("weight_multiplicity_bruteforce: negative degree");
    const ExactInteger size = binomial(d + 2 * n - 1, 2 * n - 1);
    if (size > ExactInteger(static_cast<long>(bruteforce_limit)))
        throw InvalidArgument("weight_multiplicity_bruteforce: " + size.to_string() +
                              " exponent vectors exceeds the enumeration limit");
    std::uint64_t count = 0;
    enumerate(n, 0, d, 0, w, count);
    return ExactInteger(static_cast<long>(count));
}

} // namespace poincare
