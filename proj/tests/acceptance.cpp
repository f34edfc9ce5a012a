// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "poincare/cli.hpp"
#include "poincare/degrees.hpp"
#include "poincare/identities.hpp"
#include "poincare/narayana.hpp"
#include "poincare/oracle.hpp"
#include "poincare/poincare.hpp"

using namespace poincare;

namespace {

constexpr auto I = AlgebraKind::invariants;
constexpr auto C = AlgebraKind::covariants;

constexpr std::size_t series_degree = 60;
constexpr std::size_t oracle_degree = 40;
constexpr long double asymptotic_tolerance = 0.01L;

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> check;
};

bool derivative_equals_closed(std::string& detail)
{
    std::size_t compared = 0;
    for (auto [kind, lo] : {std::pair{I, 2L}, std::pair{C, 1L}})
        for (long n = lo; n <= 12; ++n) {
            const TruncatedSeries closed = dims(kind, n, series_degree).dimensions;
            const TruncatedSeries deriv = derivative_form(kind, n, series_degree);
            if (!(closed == deriv)) {
                detail = std::string(kind_name(kind)) + " n=" + std::to_string(n);
                return false;
            }
            compared += series_degree + 1;
        }
    detail = std::to_string(compared) + " coefficients";
    return true;
}

bool oracle_agrees(std::string& detail)
{
    std::size_t compared = 0;
    for (auto [kind, lo] : {std::pair{I, 2L}, std::pair{C, 1L}})
        for (long n = lo; n <= 8; ++n) {
            const TruncatedSeries s = dims(kind, n, oracle_degree).dimensions;
            for (long d = 0; d <= static_cast<long>(oracle_degree); ++d) {
                const ExactInteger o = kind == I ? dim_invariants_oracle(n, d) : dim_covariants_oracle(n, d);
                if (!(s[static_cast<std::size_t>(d)] == ExactRational(o))) {
                    detail = std::string(kind_name(kind)) + " n=" + std::to_string(n) + " degree " +
                             std::to_string(d);
                    return false;
                }
                ++compared;
            }
        }
    detail = std::to_string(compared) + " coefficients";
    return true;
}

bool identity_sweeps(std::string& detail)
{
    const std::vector<std::pair<Identity, std::vector<ParamRange>>> grids = {
        {Identity::lemma1, {{"m", 0, 20}, {"k", 0, 20}, {"s", 0, 20}}},
        {Identity::szily, {{"a", 0, 8}, {"b", 0, 8}, {"c", 0, 8}, {"d", 0, 8}, {"e", 0, 8}}},
        {Identity::lemma2, {{"n", 2, 40}, {"k", 2, 40}}},
        {Identity::s1, {{"n", 2, 40}, {"k", 0, 40}}},
        {Identity::riordan, {{"n", 0, 12}, {"m", 0, 12}, {"p", 0, 12}}},
        {Identity::identity1, {{"n", 3, 40}, {"k", 0, 40}}},
    };
    std::size_t points = 0;
    for (const auto& [id, ranges] : grids) {
        const SweepResult res = sweep(id, ranges);
        if (!res.all_hold() || res.unasserted != 0 || res.reports.empty()) {
            detail = std::string(identity_name(id)) + ": " + std::to_string(res.failures) + " failures";
            return false;
        }
        points += res.reports.size();
    }
    detail = std::to_string(points) + " points";
    return true;
}

bool pole_orders(std::string& detail)
{
    for (auto [kind, lo] : {std::pair{I, 2L}, std::pair{C, 1L}})
        for (long n = lo; n <= 20; ++n) {
            const RationalFunction f = closed_form(kind, n);
            const long expected = kind == I ? 2 * n - 3 : 2 * n - 1;
            const bool ok = static_cast<long>(pole_order_at_one(f)) == expected &&
                            transcendence_degree(kind, n) == expected &&
                            !f.numerator().evaluate(1).is_zero();
            if (!ok) {
                detail = std::string(kind_name(kind)) + " n=" + std::to_string(n);
                return false;
            }
        }
    detail = "n <= 20";
    return true;
}

bool degrees(std::string& detail)
{
    for (auto [kind, lo] : {std::pair{I, 2L}, std::pair{C, 1L}})
        for (long n = lo; n <= 20; ++n) {
            const DegreeReport d = degree_of_algebra(kind, n);
            bool ok = d.agree && d.degree_limit == degree_formula(kind, n);
            if (kind == I)
                ok = ok && d.degree_limit == ExactRational(catalan(n - 2)) / ExactRational(power_of_two(2 * n - 3));
            if (!ok) {
                detail = std::string(kind_name(kind)) + " n=" + std::to_string(n);
                return false;
            }
        }
    detail = "n <= 20";
    return true;
}

bool asymptotics(std::string& detail)
{
    std::ostringstream os;
    for (auto kind : {I, C}) {
        const long double dev1000 = std::fabs(asymptotic_ratio(kind, 1000) - 1.0L);
        const long double dev100 = std::fabs(asymptotic_ratio(kind, 100) - 1.0L);
        os << kind_name(kind) << " |r-1| " << static_cast<double>(dev100) << " -> " << static_cast<double>(dev1000)
           << "; ";
        if (!(dev1000 < asymptotic_tolerance && dev100 > dev1000)) {
            detail = os.str();
            return false;
        }
    }
    detail = os.str();
    detail.resize(detail.size() - 2);
    return true;
}

bool sanity(std::string& detail)
{
    for (auto [kind, lo] : {std::pair{I, 2L}, std::pair{C, 1L}})
        for (long n = lo; n <= 12; ++n) {
            const TruncatedSeries s = dims(kind, n, series_degree).dimensions;
            for (std::size_t j = 0; j <= series_degree; ++j) {
                const bool ok = s[j].is_integer() && s[j].sign() >= 0 && !(kind == I && j % 2 == 1 && !s[j].is_zero());
                if (!ok) {
                    detail = std::string(kind_name(kind)) + " n=" + std::to_string(n) + " degree " + std::to_string(j);
                    return false;
                }
            }
        }
    for (long n = 0; n <= 40; ++n) {
        if (!(narayana_b_poly(n).evaluate(1) == ExactRational(binomial(2 * n, n))) ||
            (n > 0 && !(narayana_poly(n).evaluate(1) == ExactRational(catalan(n))))) {
            detail = "narayana n=" + std::to_string(n);
            return false;
        }
    }
    detail = "dims n <= 12, narayana n <= 40";
    return true;
}

bool determinism(std::string& detail)
{
    const std::vector<std::string> args{"poincare-forms", "cross-check", "--kinds", "both", "--n-max",
                                        "8",              "--max-degree", "40", "--format", "json"};
    std::string runs[2];
    for (auto& text : runs) {
        std::ostringstream out, err;
        if (cli::run(args, out, err) != cli::exit_ok) {
            detail = "cross-check failed: " + err.str();
            return false;
        }
        text = out.str();
    }
    detail = std::to_string(runs[0].size()) + " bytes";
    return runs[0] == runs[1] && runs[0].find("\"all equal\"") != std::string::npos;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "derivative form == closed form, D = 60", 30, derivative_equals_closed},
        {2, "closed form == weight-counting oracle, D = 40", 10, oracle_agrees},
        {3, "binomial identity sweeps", 60, identity_sweeps},
        {4, "pole order at z = 1 with numerator certificate", 10, pole_orders},
        {5, "Laurent degree == closed degree formula", 10, degrees},
        {6, "asymptotic ratio at n = 1000 and convergence direction", 5, asymptotics},
        {7, "dimension and Narayana sanity", 10, sanity},
        {8, "cross-check JSON is byte-identical across runs", 10, determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs > c.budget_seconds) {
            ok = false;
            detail += ", over time budget";
        }
        failed += !ok;
        std::printf("%s  %d  %s  [%s]  %.2fs (budget %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    detail.c_str(), secs, c.budget_seconds);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
