#include "poincare/identities.hpp"

#include <algorithm>
#include <string>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

constexpr std::string_view lemma1_params[] = {"m", "k", "s"};
constexpr std::string_view szily_params[] = {"a", "b", "c", "d", "e"};
constexpr std::string_view lemma2_params[] = {"n", "k"};
constexpr std::string_view riordan_params[] = {"n", "m", "p"};

long sign_of_power(long i) { return (i % 2 == 0) ? 1 : -1; }

// Sum term(i) over [lo, hi], then over [ext_lo, ext_hi] (a superset); the
// extra terms must all vanish.
template <class Term>
ExactInteger bounded_sum(long lo, long hi, long ext_lo, long ext_hi, Term term, std::string_view what)
{
    ExactInteger inner;
    for (long i = lo; i <= hi; ++i)
        inner += term(i);
    ExactInteger outer;
    for (long i = ext_lo; i <= ext_hi; ++i)
        outer += term(i);
    if (inner != outer)
        throw IntegrityError(std::string(what) + ": sum changes when the index range is widened (" +
                             inner.to_string() + " vs " + outer.to_string() + ")");
    return inner;
}

IdentityReport make_report(Identity id, std::vector<std::pair<std::string, long>> params, ExactRational lhs,
                           ExactRational rhs)
{
    IdentityReport r;
    r.identity = id;
    r.parameters = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.holds = r.lhs == r.rhs;
    return r;
}

ExactRational lemma2_right_side(long n, long k)
{
    return ExactRational(binomial(n + k - 1, k) * binomial(n - 2 + k, k), ExactInteger(k + 1));
}

} // namespace

std::string_view identity_name(Identity id)
{
    switch (id) {
    case Identity::lemma1: return "lemma1";
    case Identity::szily: return "szily";
    case Identity::lemma2: return "lemma2";
    case Identity::s1: return "s1";
    case Identity::riordan: return "riordan";
    case Identity::identity1: return "identity1";
    }
    return "?";
}

std::optional<Identity> parse_identity(std::string_view name)
{
    for (Identity id : all_identities)
        if (identity_name(id) == name)
            return id;
    return std::nullopt;
}

std::span<const std::string_view> identity_parameters(Identity id)
{
    switch (id) {
    case Identity::lemma1: return lemma1_params;
    case Identity::szily: return szily_params;
    case Identity::lemma2:
    case Identity::s1:
    case Identity::identity1: return lemma2_params;
    case Identity::riordan: return riordan_params;
    }
    return {};
}

IdentityReport check_lemma1(long m, long k, long s)
{
    if (m < 0 || k < 0 || s < 0)
        throw InvalidArgument("lemma1: m, k, s must be non-negative");
    const auto term = [&](long i) {
        return binomial(m, i) * binomial(m + 2 * s, i + s) * binomial(k - i + 2 * m + 2 * s, 2 * m + 2 * s);
    };
    ExactInteger lhs = bounded_sum(0, std::min(k, m), 0, k + m, term, "lemma1");
    ExactInteger rhs = binomial(m + k + s, m + s) * binomial(m + k + 2 * s, m + s);
    return make_report(Identity::lemma1, {{"m", m}, {"k", k}, {"s", s}}, lhs, rhs);
}

IdentityReport check_szily(long a, long b, long c, long d, long e)
{
    if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0)
        throw InvalidArgument("szily: parameters must be non-negative");
    ExactInteger lhs = binomial(a + c + d + e, a + c) * binomial(b + c + d + e, c + e);
    const auto term = [&](long i) {
        return binomial(a + d, i + d) * binomial(b + c, i + c) * binomial(a + b + c + d + e - i, a + b + c + d);
    };
    // Every lower index is in range for -min(c,d) <= i <= min(a,b).
    ExactInteger rhs = bounded_sum(-std::min(c, d), std::min(a, b), -(c + d) - 1, a + b + e, term, "szily");
    return make_report(Identity::szily, {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}}, lhs, rhs);
}

ExactRational lemma2_alternating_sum(long n, long k)
{
    if (n <= 1)
        throw InvalidArgument("lemma2: requires n > 1 (got n=" + std::to_string(n) + ")");
    if (k < 0)
        throw InvalidArgument("lemma2: k must be non-negative");
    const auto term = [&](long i) {
        return ExactInteger(sign_of_power(i)) * binomial(n + i - 1, i) * binomial(n + k - 2, k - i) *
               binomial(n + 2 * k - i - 1, 2 * k);
    };
    return bounded_sum(0, std::min(k, n - 1), 0, k + n - 1, term, "lemma2");
}

IdentityReport check_lemma2(long n, long k)
{
    ExactRational lhs = lemma2_alternating_sum(n, k);
    IdentityReport r = make_report(Identity::lemma2, {{"n", n}, {"k", k}}, lhs, lemma2_right_side(n, k));
    r.asserted = k > 1;
    return r;
}

IdentityReport check_s1(long n, long k)
{
    if (n <= 1)
        throw InvalidArgument("s1: requires n > 1 (got n=" + std::to_string(n) + ")");
    if (k < 0)
        throw InvalidArgument("s1: k must be non-negative");
    const auto term = [&](long i) {
        return ExactInteger(sign_of_power(i) * (n - 1 + i)) * binomial(k, i) * binomial(n + 2 * k - i - 1, 2 * k);
    };
    ExactInteger lhs = bounded_sum(0, k, 0, k + n - 1, term, "s1");
    return make_report(Identity::s1, {{"n", n}, {"k", k}}, lhs, binomial(n + k - 1, k + 1));
}

bool riordan_in_domain(long n, long m, long p)
{
    return m >= 0 && p >= 0 && n >= m && n >= p && n - p >= m;
}

IdentityReport check_riordan(long n, long m, long p)
{
    if (!riordan_in_domain(n, m, p))
        throw InvalidArgument("riordan: requires n >= m >= 0, n >= p >= 0, n - p >= m");
    const auto term = [&](long i) { return ExactInteger(sign_of_power(i)) * binomial(n - i, m - i) * binomial(p, i); };
    ExactInteger lhs = bounded_sum(0, std::min(m, p), 0, n, term, "riordan");
    return make_report(Identity::riordan, {{"n", n}, {"m", m}, {"p", p}}, lhs, binomial(n - p, m));
}

IdentityReport check_identity_1(long n, long k)
{
    if (n < 3)
        throw InvalidArgument("identity1: requires n >= 3 (got n=" + std::to_string(n) + ")");
    if (k < 0)
        throw InvalidArgument("identity1: k must be non-negative");
    ExactRational lhs = lemma2_alternating_sum(n, k);

    // sum_i C(n-3,i) C(n-2,i) C(2n+k-i-4,k-i) / (i+1)
    ExactRational rhs;
    ExactRational wide;
    const long hi = std::min(k, n - 3);
    for (long i = 0; i <= k + n - 3; ++i) {
        ExactRational t(binomial(n - 3, i) * binomial(n - 2, i) * binomial(2 * n + k - i - 4, k - i),
                        ExactInteger(i + 1));
        if (i <= hi)
            rhs += t;
        wide += t;
    }
    if (rhs != wide)
        throw IntegrityError("identity1: sum changes when the index range is widened");
    if (k > 1 && lhs != lemma2_right_side(n, k))
        throw IntegrityError("identity1: Lemma 2 sides disagree at n=" + std::to_string(n) + ", k=" +
                             std::to_string(k));
    return make_report(Identity::identity1, {{"n", n}, {"k", k}}, lhs, rhs);
}

IdentityReport check_point(Identity id, std::span<const long> v)
{
    switch (id) {
    case Identity::lemma1: return check_lemma1(v[0], v[1], v[2]);
    case Identity::szily: return check_szily(v[0], v[1], v[2], v[3], v[4]);
    case Identity::lemma2: return check_lemma2(v[0], v[1]);
    case Identity::s1: return check_s1(v[0], v[1]);
    case Identity::riordan: return check_riordan(v[0], v[1], v[2]);
    case Identity::identity1: return check_identity_1(v[0], v[1]);
    }
    throw InvalidArgument("unknown identity");
}

SweepResult sweep(Identity id, const std::vector<ParamRange>& ranges)
{
    const auto symbols = identity_parameters(id);
    std::vector<std::pair<long, long>> bounds;
    for (std::string_view sym : symbols) {
        auto it = std::find_if(ranges.begin(), ranges.end(), [&](const ParamRange& r) { return r.symbol == sym; });
        if (it == ranges.end())
            throw InvalidArgument(std::string(identity_name(id)) + ": missing range for '" + std::string(sym) + "'");
        if (it->lo > it->hi)
            throw InvalidArgument(std::string(identity_name(id)) + ": empty range for '" + std::string(sym) + "'");
        bounds.emplace_back(it->lo, it->hi);
    }
    for (const auto& r : ranges)
        if (std::find(symbols.begin(), symbols.end(), r.symbol) == symbols.end())
            throw InvalidArgument(std::string(identity_name(id)) + ": unknown parameter '" + r.symbol + "'");

    SweepResult out;
    out.identity = id;
    std::vector<long> point(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i)
        point[i] = bounds[i].first;

    for (;;) {
        if (id != Identity::riordan || riordan_in_domain(point[0], point[1], point[2])) {
            IdentityReport rep{};
            try {
                rep = check_point(id, point);
            } catch (const std::exception& ex) {
                rep.identity = id;
                for (std::size_t i = 0; i < point.size(); ++i)
                    rep.parameters.emplace_back(std::string(symbols[i]), point[i]);
                rep.holds = false;
                rep.error = ex.what();
            }
            if (rep.asserted) {
                ++out.asserted;
                if (!rep.holds)
                    ++out.failures;
            } else {
                ++out.unasserted;
            }
            out.reports.push_back(std::move(rep));
        }
        // Odometer, last symbol fastest.
        std::size_t j = point.size();
        while (j > 0) {
            --j;
            if (point[j] < bounds[j].second) {
                ++point[j];
                break;
            }
            point[j] = bounds[j].first;
            if (j == 0)
                return out;
        }
    }
}

} // namespace poincare
