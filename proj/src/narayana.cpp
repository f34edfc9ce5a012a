#include "poincare/narayana.hpp"

#include <string>
#include <vector>

#include "poincare/errors.hpp"

namespace poincare {

Polynomial narayana_poly(long n)
{
    if (n < 0)
        throw InvalidArgument("narayana_poly: negative index");
    // The defining sum is empty at n = 0; N_0 = 1 is what makes the closed
    // forms agree with dimension counting at the boundary.
    if (n == 0)
        return Polynomial::constant(1);
    std::vector<ExactRational> c(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        ExactRational term(binomial(n - 1, k - 1) * binomial(n, k - 1), ExactInteger(k));
        if (!term.is_integer())
            throw IntegrityError("narayana_poly: non-integral coefficient " + term.to_string() + " at n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k));
        c[static_cast<std::size_t>(k - 1)] = term;
    }
    return Polynomial(std::move(c));
}

Polynomial narayana_b_poly(long n)
{
    if (n < 0)
        throw InvalidArgument("narayana_b_poly: negative index");
    std::vector<ExactRational> c(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        const ExactInteger b = binomial(n, k);
        c[static_cast<std::size_t>(k)] = b * b;
    }
    return Polynomial(std::move(c));
}

ExactInteger central_binomial(long n)
{
    if (n < 0)
        throw InvalidArgument("central_binomial: negative index");
    return binomial(2 * n, n);
}

ExactInteger catalan(long n)
{
    if (n < 0)
        throw InvalidArgument("catalan: negative index");
    const ExactRational c(central_binomial(n), ExactInteger(n + 1));
    return c.numerator();
}

} // namespace poincare
