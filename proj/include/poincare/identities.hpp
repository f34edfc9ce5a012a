#pragma once

// Exact brute-force checks of the binomial identities behind the closed-form
// Poincare series.
//
// Each checker evaluates both sides with big integers. Sums are taken over
// their stated bounds and then re-evaluated over a wider index range where
// the extra terms must vanish; a difference between the two throws
// IntegrityError, so every check also exercises the truncation argument.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poincare/exact.hpp"

namespace poincare {

enum class Identity {
    lemma1,    // generalized Le Jen Shoo
    szily,     // five-parameter Szily convolution
    lemma2,    // alternating triple-binomial sum
    s1,        // auxiliary sum S_1
    riordan,   // sum (-1)^i C(n-i,m-i) C(p,i) = C(n-p,m)
    identity1, // Lemma 2 left side rewritten via Lemma 1 at m = n-3, s = 1
};

inline constexpr Identity all_identities[] = {Identity::lemma1, Identity::szily, Identity::lemma2,
                                              Identity::s1,     Identity::riordan, Identity::identity1};

std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
// Parameter symbols in call order, e.g. {"m", "k", "s"} for lemma1.
std::span<const std::string_view> identity_parameters(Identity id);

struct IdentityReport {
    Identity identity = Identity::lemma1;
    std::vector<std::pair<std::string, long>> parameters;
    ExactRational lhs;
    ExactRational rhs;
    bool holds = false;
    // False for points evaluated outside the identity's claimed range
    // (Lemma 2 at k < 2); those are reported but never count as failures.
    bool asserted = true;
    // Non-empty when evaluation itself failed (sweeps only).
    std::string error;
};

IdentityReport check_lemma1(long m, long k, long s);
IdentityReport check_szily(long a, long b, long c, long d, long e);
// n > 1 required; k in {0, 1} is evaluated with asserted = false.
IdentityReport check_lemma2(long n, long k);
IdentityReport check_s1(long n, long k);
// Requires n >= m >= 0, n >= p >= 0, n - p >= m.
IdentityReport check_riordan(long n, long m, long p);
// Requires n >= 3. For k > 1 also asserts lhs equals the Lemma 2 right side.
IdentityReport check_identity_1(long n, long k);

// The alternating sum shared verbatim by Lemma 2 and identity (1).
ExactRational lemma2_alternating_sum(long n, long k);

bool riordan_in_domain(long n, long m, long p);

struct ParamRange {
    std::string symbol;
    long lo = 0;
    long hi = 0;
};

struct SweepResult {
    Identity identity = Identity::lemma1;
    std::vector<IdentityReport> reports;
    std::size_t asserted = 0;
    std::size_t unasserted = 0;
    std::size_t failures = 0;
    // True iff every asserted report holds.
    bool all_hold() const { return failures == 0; }
};

// Cartesian product over the ranges, one per parameter symbol of the
// identity (any order). Riordan points outside its domain are skipped.
// Per-point errors become failed reports; the sweep never aborts.
SweepResult sweep(Identity id, const std::vector<ParamRange>& ranges);

// Evaluate at one point given values in identity_parameters(id) order.
IdentityReport check_point(Identity id, std::span<const long> values);

} // namespace poincare
