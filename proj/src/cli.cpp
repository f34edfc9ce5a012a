#include "poincare/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "poincare/degrees.hpp"
#include "poincare/errors.hpp"
#include "poincare/identities.hpp"
#include "poincare/oracle.hpp"
#include "poincare/poincare.hpp"

namespace poincare::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One report, renderable in each output format.
struct Report {
    json doc;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::string plain;
    int status = exit_ok;
};

struct Options {
    std::string format = "plain";
    std::string output;
    std::string kind;
    std::optional<long> n;
    std::optional<long> n_min;
    std::optional<long> n_max;
    long max_degree = 60;
    std::vector<std::string> identities;
    std::vector<std::string> ranges;
    bool self_test = false;
};

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"')
            r += '"';
        r += c;
    }
    return r + "\"";
}

std::string render(const Report& rep, const std::string& format)
{
    if (format == "json")
        return rep.doc.dump(2) + "\n";
    if (format == "csv") {
        std::string s;
        const auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i)
                    s += ',';
                s += csv_escape(cells[i]);
            }
            s += '\n';
        };
        line(rep.csv_header);
        for (const auto& row : rep.csv_rows)
            line(row);
        return s;
    }
    return rep.plain;
}

std::string format_ratio(long double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << static_cast<double>(x);
    return os.str();
}

std::vector<AlgebraKind> selected_kinds(const Options& o)
{
    if (o.kind == "both")
        return {AlgebraKind::invariants, AlgebraKind::covariants};
    if (auto k = parse_kind(o.kind))
        return {*k};
    throw UsageError("unknown kind '" + o.kind + "' (expected invariants, covariants or both)");
}

// n values for `kind`: a single --n, or --n-min/--n-max. With several kinds
// the lower end is raised to each kind's first valid n.
std::vector<long> selected_ns(const Options& o, AlgebraKind kind, bool several_kinds, long default_lo,
                              long default_hi)
{
    long lo, hi;
    if (o.n) {
        lo = hi = *o.n;
    } else {
        lo = o.n_min.value_or(std::max(default_lo, min_n(kind)));
        if (several_kinds)
            lo = std::max(lo, min_n(kind));
        hi = o.n_max.value_or(std::max(default_hi, lo));
    }
    if (lo > hi)
        throw UsageError("empty n range");
    try {
        require_valid_n(kind, lo);
    } catch (const InvalidArgument& ex) {
        throw UsageError(ex.what());
    }
    std::vector<long> ns;
    for (long n = lo; n <= hi; ++n)
        ns.push_back(n);
    return ns;
}

std::size_t max_degree(const Options& o)
{
    if (o.max_degree < 0)
        throw UsageError("--max-degree must be non-negative");
    return static_cast<std::size_t>(o.max_degree);
}

json string_array(const std::vector<ExactRational>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.to_string());
    return a;
}

Report cmd_series(const Options& o)
{
    const auto kinds = selected_kinds(o);
    const std::size_t D = max_degree(o);
    Report rep;
    rep.doc["command"] = "series";
    rep.doc["max_degree"] = D;
    rep.doc["records"] = json::array();
    rep.csv_header = {"kind", "n", "degree", "numerator", "dim"};
    std::ostringstream plain;
    for (AlgebraKind kind : kinds) {
        for (long n : selected_ns(o, kind, kinds.size() > 1, 1, 1)) {
            const PoincareReport pr = dims(kind, n, D);
            const long e = denominator_exponent(kind, n);
            json rec;
            rec["kind"] = kind_name(kind);
            rec["n"] = n;
            rec["numerator"] = string_array(pr.closed_form.numerator().coefficients());
            rec["denominator_exponent"] = e;
            rec["dims"] = string_array(pr.dimensions.coefficients());
            rep.doc["records"].push_back(std::move(rec));
            for (std::size_t j = 0; j <= D; ++j)
                rep.csv_rows.push_back({std::string(kind_name(kind)), std::to_string(n), std::to_string(j),
                                        pr.closed_form.numerator().coefficient(j).to_string(),
                                        pr.dimensions[j].to_string()});
            plain << kind_name(kind) << " n=" << n << ": P(z) = (" << pr.closed_form.numerator().to_string()
                  << ") / (1 - z^2)^" << e << "\n  dims:";
            for (const auto& c : pr.dimensions.coefficients())
                plain << ' ' << c;
            plain << '\n';
        }
    }
    rep.plain = plain.str();
    return rep;
}

Report cmd_dims(const Options& o)
{
    const auto kinds = selected_kinds(o);
    const std::size_t D = max_degree(o);
    Report rep;
    rep.doc["command"] = "dims";
    rep.doc["records"] = json::array();
    rep.csv_header = {"kind", "n", "degree", "dim"};
    std::ostringstream plain;
    for (AlgebraKind kind : kinds) {
        for (long n : selected_ns(o, kind, kinds.size() > 1, 1, 1)) {
            const PoincareReport pr = dims(kind, n, D);
            plain << kind_name(kind) << " n=" << n << ":";
            for (std::size_t j = 0; j <= D; ++j) {
                json rec;
                rec["kind"] = kind_name(kind);
                rec["n"] = n;
                rec["degree"] = j;
                rec["dim"] = pr.dimensions[j].to_string();
                rep.doc["records"].push_back(std::move(rec));
                rep.csv_rows.push_back({std::string(kind_name(kind)), std::to_string(n), std::to_string(j),
                                        pr.dimensions[j].to_string()});
                plain << ' ' << pr.dimensions[j];
            }
            plain << '\n';
        }
    }
    rep.plain = plain.str();
    return rep;
}

Report cmd_degrees(const Options& o)
{
    const auto kinds = selected_kinds(o);
    Report rep;
    rep.doc["command"] = "degrees";
    rep.doc["records"] = json::array();
    rep.csv_header = {"kind", "n", "tr_deg", "degree_exact", "psi_exact", "agree"};
    std::ostringstream plain;
    for (AlgebraKind kind : kinds) {
        for (long n : selected_ns(o, kind, kinds.size() > 1, 1, 20)) {
            const DegreeReport d = degree_of_algebra(kind, n);
            json rec;
            rec["kind"] = kind_name(kind);
            rec["n"] = n;
            rec["tr_deg"] = d.tr_deg;
            rec["degree_exact"] = d.degree_limit.to_string();
            rec["psi_exact"] = d.psi.to_string();
            rec["degree_formula"] = d.degree_formula.to_string();
            rec["agree"] = d.agree;
            rep.doc["records"].push_back(std::move(rec));
            rep.csv_rows.push_back({std::string(kind_name(kind)), std::to_string(n), std::to_string(d.tr_deg),
                                    d.degree_limit.to_string(), d.psi.to_string(), d.agree ? "true" : "false"});
            plain << kind_name(kind) << " n=" << n << ": tr_deg " << d.tr_deg << ", degree " << d.degree_limit
                  << ", psi " << d.psi << (d.agree ? "" : "  [MISMATCH with closed formula " +
                                                             d.degree_formula.to_string() + "]")
                  << '\n';
            if (!d.agree)
                rep.status = exit_failure;
        }
    }
    rep.plain = plain.str();
    return rep;
}

Report cmd_asymptotics(const Options& o)
{
    const auto kinds = selected_kinds(o);
    Report rep;
    rep.doc["command"] = "asymptotics";
    rep.doc["records"] = json::array();
    rep.csv_header = {"kind", "n", "ratio"};
    std::ostringstream plain;
    for (AlgebraKind kind : kinds) {
        for (long n : selected_ns(o, kind, kinds.size() > 1, 3, 20)) {
            if (n < 3)
                throw UsageError("asymptotics require n ≥ 3");
            const long double r = asymptotic_ratio(kind, n);
            json rec;
            rec["kind"] = kind_name(kind);
            rec["n"] = n;
            rec["ratio"] = static_cast<double>(r);
            rep.doc["records"].push_back(std::move(rec));
            rep.csv_rows.push_back({std::string(kind_name(kind)), std::to_string(n), format_ratio(r)});
            plain << kind_name(kind) << " n=" << n << ": ratio " << format_ratio(r) << '\n';
        }
    }
    rep.plain = plain.str();
    return rep;
}

// Default grids for `verify`.
std::vector<ParamRange> default_ranges(Identity id)
{
    switch (id) {
    case Identity::lemma1: return {{"m", 0, 20}, {"k", 0, 20}, {"s", 0, 20}};
    case Identity::szily: return {{"a", 0, 8}, {"b", 0, 8}, {"c", 0, 8}, {"d", 0, 8}, {"e", 0, 8}};
    case Identity::lemma2: return {{"n", 2, 40}, {"k", 0, 40}};
    case Identity::s1: return {{"n", 2, 40}, {"k", 0, 40}};
    case Identity::riordan: return {{"n", 0, 12}, {"m", 0, 12}, {"p", 0, 12}};
    case Identity::identity1: return {{"n", 3, 40}, {"k", 0, 40}};
    }
    return {};
}

long range_floor(Identity id, const std::string& sym)
{
    if (sym == "n" && (id == Identity::lemma2 || id == Identity::s1))
        return 2;
    if (sym == "n" && id == Identity::identity1)
        return 3;
    return 0;
}

ParamRange parse_range(const std::string& text)
{
    // sym=lo:hi or sym=v
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw UsageError("malformed --range '" + text + "' (expected sym=lo:hi)");
    ParamRange r;
    r.symbol = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    const auto colon = rest.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stol(rest, &used);
            if (used != rest.size())
                throw std::invalid_argument(rest);
        } else {
            const std::string a = rest.substr(0, colon), b = rest.substr(colon + 1);
            r.lo = std::stol(a, &used);
            if (used != a.size())
                throw std::invalid_argument(a);
            r.hi = std::stol(b, &used);
            if (used != b.size())
                throw std::invalid_argument(b);
        }
    } catch (const std::logic_error&) {
        throw UsageError("malformed --range '" + text + "' (expected sym=lo:hi)");
    }
    if (r.lo > r.hi)
        throw UsageError("empty --range '" + text + "'");
    return r;
}

json parameters_json(const IdentityReport& r)
{
    json p = json::object();
    for (const auto& [k, v] : r.parameters)
        p[k] = v;
    return p;
}

Report cmd_verify(const Options& o)
{
    std::vector<Identity> ids;
    if (o.identities.empty() || std::find(o.identities.begin(), o.identities.end(), "all") != o.identities.end()) {
        ids.assign(std::begin(all_identities), std::end(all_identities));
    } else {
        for (const auto& name : o.identities) {
            auto id = parse_identity(name);
            if (!id)
                throw UsageError("unknown identity '" + name + "'");
            if (std::find(ids.begin(), ids.end(), *id) == ids.end())
                ids.push_back(*id);
        }
    }
    std::vector<ParamRange> overrides;
    for (const auto& t : o.ranges)
        overrides.push_back(parse_range(t));
    for (const auto& ov : overrides) {
        const bool used = std::any_of(ids.begin(), ids.end(), [&](Identity id) {
            const auto ps = identity_parameters(id);
            return std::find(ps.begin(), ps.end(), ov.symbol) != ps.end();
        });
        if (!used)
            throw UsageError("--range symbol '" + ov.symbol + "' is not a parameter of the selected identities");
    }

    Report rep;
    rep.doc["command"] = "verify";
    rep.doc["identities"] = json::array();
    rep.csv_header = {"identity", "points", "asserted", "unasserted", "failures"};
    std::ostringstream plain;
    std::size_t holding = 0, total_failures = 0;
    for (Identity id : ids) {
        auto ranges = default_ranges(id);
        for (auto& r : ranges) {
            for (const auto& ov : overrides)
                if (ov.symbol == r.symbol)
                    r = ov;
            if (r.lo < range_floor(id, r.symbol))
                throw UsageError(std::string(identity_name(id)) + ": " + r.symbol + " must be at least " +
                                 std::to_string(range_floor(id, r.symbol)));
        }
        const SweepResult res = sweep(id, ranges);
        json entry;
        entry["identity"] = identity_name(id);
        entry["points"] = res.reports.size();
        entry["asserted"] = res.asserted;
        entry["unasserted"] = res.unasserted;
        entry["failures"] = res.failures;
        entry["holds"] = res.all_hold();
        json failed = json::array(), logged = json::array();
        for (const auto& r : res.reports) {
            if (!r.asserted) {
                json u;
                u["parameters"] = parameters_json(r);
                u["lhs"] = r.lhs.to_string();
                u["rhs"] = r.rhs.to_string();
                u["holds"] = r.holds;
                logged.push_back(std::move(u));
            } else if (!r.holds) {
                json f;
                f["parameters"] = parameters_json(r);
                f["lhs"] = r.lhs.to_string();
                f["rhs"] = r.rhs.to_string();
                f["error"] = r.error;
                failed.push_back(std::move(f));
            }
        }
        entry["failed_points"] = std::move(failed);
        entry["unasserted_points"] = std::move(logged);
        rep.doc["identities"].push_back(std::move(entry));
        rep.csv_rows.push_back({std::string(identity_name(id)), std::to_string(res.reports.size()),
                                std::to_string(res.asserted), std::to_string(res.unasserted),
                                std::to_string(res.failures)});
        plain << identity_name(id) << ": " << res.reports.size() << " points, " << res.asserted - res.failures
              << " hold, " << res.failures << " failures";
        if (res.unasserted)
            plain << " (" << res.unasserted << " outside the stated range, not asserted)";
        plain << '\n';
        for (const auto& r : res.reports) {
            if (r.asserted && !r.holds) {
                plain << "  FAIL";
                for (const auto& [k, v] : r.parameters)
                    plain << ' ' << k << '=' << v;
                plain << ": lhs=" << r.lhs << " rhs=" << r.rhs;
                if (!r.error.empty())
                    plain << " (" << r.error << ")";
                plain << '\n';
            }
        }
        if (res.all_hold())
            ++holding;
        total_failures += res.failures;
    }
    const std::string summary = std::to_string(holding) + "/" + std::to_string(ids.size()) + " identities hold, " +
                                std::to_string(total_failures) + " failures";
    rep.doc["summary"] = summary;
    plain << summary << '\n';
    rep.plain = plain.str();
    if (holding != ids.size())
        rep.status = exit_failure;
    return rep;
}

Report cmd_cross_check(const Options& o)
{
    const auto kinds = selected_kinds(o);
    const std::size_t D = max_degree(o);
    Report rep;
    rep.doc["command"] = "cross-check";
    rep.doc["max_degree"] = D;
    rep.doc["self_test"] = o.self_test;
    rep.doc["records"] = json::array();
    rep.csv_header = {"kind", "n", "degree", "closed_form", "derivative_form", "oracle"};

    json mismatch = nullptr;
    std::size_t comparisons = 0;
    bool perturbed = false;
    for (AlgebraKind kind : kinds) {
        for (long n : selected_ns(o, kind, kinds.size() > 1, 1, 8)) {
            TruncatedSeries closed = dims(kind, n, D).dimensions;
            if (o.self_test && !perturbed) {
                closed[std::min<std::size_t>(2, D)] += ExactRational(1);
                perturbed = true;
            }
            const TruncatedSeries deriv = derivative_form(kind, n, D);
            bool equal = true;
            for (std::size_t d = 0; d <= D; ++d) {
                const long dl = static_cast<long>(d);
                const ExactRational oracle = kind == AlgebraKind::invariants ? dim_invariants_oracle(n, dl)
                                                                              : dim_covariants_oracle(n, dl);
                ++comparisons;
                rep.csv_rows.push_back({std::string(kind_name(kind)), std::to_string(n), std::to_string(d),
                                        closed[d].to_string(), deriv[d].to_string(), oracle.to_string()});
                if (closed[d] == deriv[d] && deriv[d] == oracle)
                    continue;
                equal = false;
                if (mismatch.is_null()) {
                    mismatch = json::object();
                    mismatch["kind"] = kind_name(kind);
                    mismatch["n"] = n;
                    mismatch["degree"] = d;
                    mismatch["closed_form"] = closed[d].to_string();
                    mismatch["derivative_form"] = deriv[d].to_string();
                    mismatch["oracle"] = oracle.to_string();
                }
            }
            json rec;
            rec["kind"] = kind_name(kind);
            rec["n"] = n;
            rec["degrees_checked"] = D + 1;
            rec["equal"] = equal;
            rep.doc["records"].push_back(std::move(rec));
        }
    }
    rep.doc["comparisons"] = comparisons;
    rep.doc["mismatch"] = mismatch;
    if (mismatch.is_null()) {
        rep.doc["result"] = "all equal";
        rep.plain = "all equal (" + std::to_string(comparisons) + " comparisons)\n";
    } else {
        rep.doc["result"] = "mismatch";
        rep.status = exit_failure;
        rep.plain = "mismatch at " + mismatch["kind"].get<std::string>() + " n=" +
                    std::to_string(mismatch["n"].get<long>()) + " degree " +
                    std::to_string(mismatch["degree"].get<std::size_t>()) +
                    ": closed_form=" + mismatch["closed_form"].get<std::string>() +
                    " derivative_form=" + mismatch["derivative_form"].get<std::string>() +
                    " oracle=" + mismatch["oracle"].get<std::string>() + "\n";
    }
    return rep;
}

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    sub->add_option("--output", o.output, "Write the report to this file instead of stdout");
}

void add_n_selection(CLI::App* sub, Options& o)
{
    auto* n = sub->add_option("--n", o.n, "Single n");
    auto* lo = sub->add_option("--n-min", o.n_min, "Smallest n");
    auto* hi = sub->add_option("--n-max", o.n_max, "Largest n");
    n->excludes(lo)->excludes(hi);
}

void add_max_degree(CLI::App* sub, Options& o)
{
    sub->add_option("--max-degree", o.max_degree, "Truncation degree D")
        ->envname("POINCARE_FORMS_MAX_DEGREE")
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Poincare series, degrees and identity checks for joint invariants and covariants of linear "
                 "binary forms"};
    app.require_subcommand(1);
    Options o;

    auto* series = app.add_subcommand("series", "Closed form and truncated dimension sequence per n");
    auto* dims_cmd = app.add_subcommand("dims", "Dimension table, one row per (n, degree)");
    auto* degrees = app.add_subcommand("degrees", "Transcendence degree, degree and psi per n");
    auto* asym = app.add_subcommand("asymptotics", "Degree divided by its large-n asymptotic");
    auto* verify = app.add_subcommand("verify", "Sweep the binomial identities over parameter grids");
    auto* cross = app.add_subcommand("cross-check", "Closed form vs derivative form vs weight-counting oracle");

    for (auto* sub : {series, dims_cmd}) {
        add_common(sub, o);
        sub->add_option("--kind,--kinds", o.kind, "invariants | covariants | both")->required();
        add_n_selection(sub, o);
        add_max_degree(sub, o);
    }
    for (auto* sub : {degrees, asym}) {
        add_common(sub, o);
        o.kind = "both";
        sub->add_option("--kind,--kinds", o.kind, "invariants | covariants | both")->capture_default_str();
        add_n_selection(sub, o);
    }
    add_common(verify, o);
    verify->add_option("--identity", o.identities,
                       "lemma1 | szily | lemma2 | s1 | riordan | identity1 | all (repeatable)");
    verify->add_option("--range", o.ranges, "Override a parameter range, sym=lo:hi (repeatable)");

    add_common(cross, o);
    cross->add_option("--kind,--kinds", o.kind, "invariants | covariants | both")->capture_default_str();
    add_n_selection(cross, o);
    add_max_degree(cross, o);
    cross->add_flag("--self-test", o.self_test, "Perturb one closed-form coefficient; the run must then fail");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << '\n';
        return exit_usage;
    }

    try {
        Report rep;
        if (series->parsed())
            rep = cmd_series(o);
        else if (dims_cmd->parsed())
            rep = cmd_dims(o);
        else if (degrees->parsed())
            rep = cmd_degrees(o);
        else if (asym->parsed())
            rep = cmd_asymptotics(o);
        else if (verify->parsed())
            rep = cmd_verify(o);
        else
            rep = cmd_cross_check(o);

        const std::string text = render(rep, o.format);
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f)
                throw UsageError("cannot open output file '" + o.output + "'");
            f << text;
        }
        return rep.status;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument& ex) {
        err << "usage error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const IntegrityError& ex) {
        err << "integrity failure: " << ex.what() << '\n';
        return exit_failure;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_failure;
    }
}

} // namespace poincare::cli
