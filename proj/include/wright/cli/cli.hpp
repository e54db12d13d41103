#ifndef WRIGHT_CLI_CLI_HPP
#define WRIGHT_CLI_CLI_HPP

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wright/cli/tables.hpp"
#include "wright/expansions/expansions.hpp"

namespace wright::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

struct RunConfig {
    unsigned digits = 40;
    Format format = Format::text;
    bool format_given = false;
    bool force_borderline = false;
    double eps_over_pi = 1e-6;
    std::optional<std::size_t> J;
    std::optional<std::size_t> K;
    std::optional<std::size_t> M;
    bool rational = false;

    ExpansionOptions expansion() const
    {
        ExpansionOptions o;
        o.digits = digits;
        o.J = J;
        o.K = K;
        o.M = M;
        o.force_borderline = force_borderline;
        o.eps_over_pi = eps_over_pi;
        return o;
    }
};

// Malformed command line beyond what the option parser catches.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A table was recomputed and some cells disagree.
struct TableMismatch {
    std::vector<std::string> offenders;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int domain = 2;
inline constexpr int borderline = 3;
inline constexpr int mismatch = 4;
} // namespace exit_code

// Rows and columns of a report for the csv and text formats.
struct Grid {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    Json json;
    Grid grid;
    std::optional<TableMismatch> mismatch;
};

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') {
            r += '"';
        }
        r += c;
    }
    return r + "\"";
}

inline void write_csv(std::ostream& out, const Grid& g)
{
    auto line = [&out](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) {
                out << ',';
            }
            out << csv_field(v[i]);
        }
        out << "\r\n";
    };
    line(g.header);
    for (const auto& r : g.rows) {
        line(r);
    }
}

inline void write_text(std::ostream& out, const Grid& g)
{
    std::vector<std::size_t> w(g.header.size(), 0);
    auto widen = [&w](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size() && i < w.size(); ++i) {
            w[i] = std::max(w[i], v[i].size());
        }
    };
    widen(g.header);
    for (const auto& r : g.rows) {
        widen(r);
    }
    auto line = [&](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) {
                s += "  ";
            }
            s += v[i];
            if (i + 1 < v.size()) {
                s += std::string(w[i] - v[i].size(), ' ');
            }
        }
        out << s << '\n';
    };
    line(g.header);
    for (const auto& r : g.rows) {
        line(r);
    }
}

// Normalise unicode spellings: U+2212 minus, pi, sigma, delta.
inline std::string ascii(std::string s)
{
    const std::pair<const char*, const char*> map[] = {
        {"\xe2\x88\x92", "-"}, {"\xcf\x80", "pi"}, {"\xcf\x83", "sigma"}, {"\xce\xb4", "delta"}};
    for (const auto& [from, to] : map) {
        std::string f(from);
        for (std::size_t p = s.find(f); p != std::string::npos; p = s.find(f, p)) {
            s.replace(p, f.size(), to);
        }
    }
    return s;
}

inline Rational rational_arg(const std::string& key, const std::string& v)
{
    try {
        return parse_rational(v);
    } catch (const Error& e) {
        throw UsageError(key + ": " + e.what());
    }
}

inline ComplexRational complex_arg(const std::string& key, const std::string& v)
{
    try {
        return parse_complex_rational(v);
    } catch (const Error& e) {
        throw UsageError(key + ": " + e.what());
    }
}

// "0.25pi", "pi", "-pi/3", "1/4pi" or "0": the angle as a multiple of pi.
inline Rational angle_arg(const std::string& key, std::string v)
{
    auto p = v.find("pi");
    if (p == std::string::npos) {
        Rational q = rational_arg(key, v);
        if (q != 0) {
            throw UsageError(key + ": angles are multiples of pi, e.g. 0.25pi");
        }
        return q;
    }
    std::string coef = v.substr(0, p);
    std::string rest = v.substr(p + 2);
    Rational c = 1;
    if (coef == "-" || coef == "+") {
        c = coef == "-" ? Rational(-1) : Rational(1);
    } else if (!coef.empty()) {
        if (coef.back() == '*') {
            coef.pop_back();
        }
        c = rational_arg(key, coef);
    }
    if (!rest.empty()) {
        if (rest[0] != '/') {
            throw UsageError(key + ": malformed angle '" + v + "'");
        }
        Rational d = rational_arg(key, rest.substr(1));
        if (d == 0) {
            throw UsageError(key + ": zero denominator");
        }
        c /= d;
    }
    return c;
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// key=value tokens; every key must be in `allowed`.
class KeyValues {
public:
    KeyValues(const std::vector<std::string>& tokens, std::vector<std::string> allowed)
    {
        for (const auto& raw : tokens) {
            std::string t = ascii(raw);
            auto eq = t.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw UsageError("expected key=value, got '" + raw + "'");
            }
            std::string k = t.substr(0, eq);
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
                throw UsageError("unknown key '" + k + "'");
            }
            if (kv_.count(k)) {
                throw UsageError("key '" + k + "' given twice");
            }
            kv_[k] = t.substr(eq + 1);
            order_.push_back(k);
        }
    }

    bool has(const std::string& k) const { return kv_.count(k) != 0; }

    const std::string& get(const std::string& k) const
    {
        auto it = kv_.find(k);
        if (it == kv_.end()) {
            throw UsageError("missing key '" + k + "'");
        }
        return it->second;
    }

    std::string get_or(const std::string& k, const std::string& fallback) const
    {
        return has(k) ? get(k) : fallback;
    }

    Json echo() const
    {
        Json j = Json::object();
        for (const auto& k : order_) {
            j[k] = kv_.at(k);
        }
        return j;
    }

private:
    std::map<std::string, std::string> kv_;
    std::vector<std::string> order_;
};

inline std::optional<std::size_t> index_arg(const KeyValues& kv, const std::string& key,
                                            std::optional<std::size_t> flag)
{
    if (!kv.has(key)) {
        return flag;
    }
    const std::string& v = kv.get(key);
    std::size_t used = 0;
    long n = -1;
    try {
        n = std::stol(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || n < 0) {
        throw UsageError(key + ": expected a nonnegative integer");
    }
    return static_cast<std::size_t>(n);
}

inline ExactPoint point_arg(const KeyValues& kv)
{
    int given = kv.has("x") + kv.has("z") + kv.has("modulus");
    if (given != 1) {
        throw UsageError("give exactly one of x=, z= or modulus= (with angle=)");
    }
    if (kv.has("angle") && !kv.has("modulus")) {
        throw UsageError("angle= needs modulus=");
    }
    if (kv.has("x")) {
        return ExactPoint::real(rational_arg("x", kv.get("x")));
    }
    if (kv.has("z")) {
        return ExactPoint::rect(complex_arg("z", kv.get("z")));
    }
    Rational m = rational_arg("modulus", kv.get("modulus"));
    if (m < 0) {
        throw UsageError("modulus must be nonnegative");
    }
    Rational t = kv.has("angle") ? angle_arg("angle", kv.get("angle")) : Rational(0);
    return ExactPoint::polar(m, t);
}

inline std::string sci(const Real& x, unsigned digits) { return to_sci(x, static_cast<int>(digits)); }

inline Json complex_json(const Complex& z, unsigned digits)
{
    return Json{{"re", sci(z.re, digits)}, {"im", sci(z.im, digits)}};
}

inline std::string angle_text(const Rational& t)
{
    if (t == 0) {
        return "0";
    }
    if (t == 1 || t == -1) {
        return t == 1 ? "pi" : "-pi";
    }
    return to_string(t) + "pi";
}

inline Json plan_json(const SectorPlan& p, bool with_flags)
{
    Json j;
    j["regime"] = p.regime;
    if (with_flags) {
        j["flags"] = p.flags();
    }
    j["N"] = p.N;
    j["borderline"] = p.borderline;
    j["warning"] = p.warning;
    Json cs = Json::array();
    for (const auto& c : p.components) {
        cs.push_back(Json{{"name", c.name}, {"dominance", to_string(c.dominance)}});
    }
    j["components"] = cs;
    return j;
}

inline std::string component_names(const SectorPlan& p)
{
    std::string s;
    for (const auto& c : p.components) {
        if (!s.empty()) {
            s += " + ";
        }
        s += c.name + "[" + to_string(c.dominance) + "]";
    }
    return s.empty() ? "--" : s;
}

// The function selected by fn= together with its parameters.
struct Target {
    std::string fn;
    // psi01
    Rational a;
    ComplexRational b;
    // psi10
    Rational sigma;
    ComplexRational delta;
};

inline Target target_arg(const KeyValues& kv)
{
    Target t;
    t.fn = kv.get_or("fn", "psi01");
    if (t.fn == "psi01") {
        if (kv.has("sigma")) {
            if (kv.has("a")) {
                throw UsageError("give a= or sigma=, not both");
            }
            t.a = -rational_arg("sigma", kv.get("sigma"));
        } else {
            t.a = rational_arg("a", kv.get("a"));
        }
        t.b = complex_arg("b", kv.get("b"));
    } else if (t.fn == "psi10") {
        t.sigma = rational_arg("sigma", kv.get("sigma"));
        if (kv.has("delta") == kv.has("b")) {
            throw UsageError("psi10 needs exactly one of delta= or b= (delta = 1 - b)");
        }
        t.delta = kv.has("delta") ? complex_arg("delta", kv.get("delta"))
                                  : ComplexRational(1) - complex_arg("b", kv.get("b"));
    } else {
        throw UsageError("fn must be psi01 or psi10");
    }
    return t;
}

inline Json truncations_json(const ExpansionValue& v)
{
    Json j = Json::object();
    for (const auto& c : v.components) {
        j[c.name] = c.terms;
    }
    return j;
}

} // namespace detail

// eval: the defining series, the large-|z| expansion, or both.
inline Report cmd_eval(const std::vector<std::string>& tokens, const RunConfig& cfg)
{
    using namespace detail;
    KeyValues kv(tokens, {"fn", "a", "b", "sigma", "delta", "x", "z", "modulus", "angle", "method", "J", "K", "M"});
    Target t = target_arg(kv);
    ExactPoint z = point_arg(kv);
    std::string method = kv.get_or("method", "series");
    if (method != "series" && method != "asym" && method != "both") {
        throw UsageError("method must be series, asym or both");
    }
    RunConfig c = cfg;
    c.J = index_arg(kv, "J", cfg.J);
    c.K = index_arg(kv, "K", cfg.K);
    c.M = index_arg(kv, "M", cfg.M);
    unsigned d = c.digits;

    std::optional<EvalResult> series;
    std::optional<ExpansionValue> asym;
    if (method != "asym") {
        if (t.fn == "psi01") {
            series = eval_bessel_series(BesselParams{t.a, t.b}, z, d);
        } else {
            series = eval_series(psi10_params(t.sigma, t.delta), z, d);
        }
    }
    if (method != "series") {
        if (z.is_zero()) {
            throw DomainError("the large-|z| expansion is not defined at z = 0");
        }
        ExpansionOptions o = c.expansion();
        if (t.fn == "psi01") {
            if (t.a > 0) {
                asym = psi01_asym_pos_a(t.a, t.b, z, o);
            } else if (t.a < 0) {
                asym = psi01_asym_neg_a(-t.a, t.b, z, o);
            } else {
                throw DomainError("a = 0: 0Psi1(z) = e^z / Gamma(b), no large-|z| expansion is provided");
            }
        } else {
            asym = asymptotic_general(psi10_params(t.sigma, t.delta, ParamCheck::formal), z, o);
        }
    }

    WorkingPrecision wp(d);
    Report r;
    Json& j = r.json;
    j["inputs"] = kv.echo();
    j["inputs"]["method"] = method;
    j["inputs"]["point"] = z.describe();
    j["inputs"]["digits"] = d;
    j["plan"] = asym ? plan_json(asym->plan, t.fn == "psi01" && t.a < 0) : Json(nullptr);
    Json comps = Json::array();
    if (asym) {
        for (const auto& cv : asym->components) {
            comps.push_back(Json{{"name", cv.name},
                                 {"value", complex_json(cv.value, d)},
                                 {"terms", cv.terms},
                                 {"first_omitted", sci(cv.first_omitted, 3)}});
        }
    }
    j["components"] = comps;
    Complex value = asym ? asym->total : series->value;
    j["value"] = complex_json(value, d);
    if (asym) {
        j["error_estimate"] = sci(asym->error_estimate, 3);
        j["low_confidence"] = asym->low_confidence;
        j["truncations"] = truncations_json(*asym);
    } else {
        j["error_estimate"] = sci(series->tail_bound / std::max(abs(series->value), Real(1e-300)), 3);
        j["truncations"] = Json{{"series", series->terms}};
    }
    if (series && asym) {
        j["series"] = Json{{"value", complex_json(series->value, d)},
                           {"terms", series->terms},
                           {"cancellation_digits", sci(Real(series->cancellation_digits), 3)}};
        Complex diff = asym->total - series->value;
        j["discrepancy"] = Json{{"absolute", sci(abs(diff), 3)},
                                {"relative", sci(abs(diff) / std::max(abs(series->value), Real(1e-300)), 3)}};
    }

    Grid& g = r.grid;
    g.header = {"quantity", "re", "im", "terms", "first_omitted"};
    if (asym) {
        g.rows.push_back({"plan", asym->plan.regime,
                          t.fn == "psi01" && t.a < 0 ? asym->plan.flags() : std::string(), "",
                          component_names(asym->plan)});
        for (const auto& cv : asym->components) {
            g.rows.push_back({cv.name, sci(cv.value.re, d), sci(cv.value.im, d), std::to_string(cv.terms),
                              sci(cv.first_omitted, 3)});
        }
        g.rows.push_back({"asymptotic", sci(asym->total.re, d), sci(asym->total.im, d), "",
                          sci(asym->error_estimate, 3)});
        if (!asym->plan.warning.empty()) {
            g.rows.push_back({"warning", asym->plan.warning, "", "", ""});
        }
    }
    if (series) {
        g.rows.push_back({"series", sci(series->value.re, d), sci(series->value.im, d),
                          std::to_string(series->terms), sci(series->tail_bound, 3)});
    }
    if (series && asym) {
        Complex diff = asym->total - series->value;
        g.rows.push_back({"discrepancy", sci(abs(diff), 3), "", "", ""});
    }
    return r;
}

// coeffs psi01|psi10: A_0 and the normalised coefficients c_1..c_J.
inline Report cmd_coeffs(const std::vector<std::string>& tokens, const RunConfig& cfg)
{
    using namespace detail;
    if (tokens.empty() || tokens[0].find('=') != std::string::npos) {
        throw UsageError("coeffs needs a function name: psi01 or psi10");
    }
    std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
    rest.push_back("fn=" + tokens[0]);
    KeyValues kv(rest, {"fn", "a", "b", "sigma", "delta", "J"});
    Target t = target_arg(kv);
    std::size_t J = index_arg(kv, "J", cfg.J).value_or(10);
    WrightParams w;
    if (t.fn == "psi01") {
        if (t.a < 0 && t.a > -1) {
            // 0Psi1 with a = -sigma expands through 1Psi0((sigma, 1 - b)).
            w = psi10_params(-t.a, ComplexRational(1) - t.b, ParamCheck::formal);
        } else {
            w = psi01_params(t.a, t.b);
        }
    } else {
        w = psi10_params(t.sigma, t.delta, ParamCheck::formal);
    }
    if (cfg.rational && !w.is_real()) {
        throw DomainError("--rational needs real parameters");
    }
    unsigned d = cfg.digits;
    auto table = inverse_factorial_coeffs(w, J, d);
    WorkingPrecision wp(d);
    auto cj = [&](std::size_t k) {
        if (cfg.rational) {
            return std::pair<std::string, std::string>(to_string(table->exact[k]), "0");
        }
        return std::pair<std::string, std::string>(sci(table->c[k].re, d), sci(table->c[k].im, d));
    };
    Report r;
    Json& j = r.json;
    j["inputs"] = kv.echo();
    j["inputs"]["J"] = J;
    j["inputs"]["digits"] = d;
    j["function"] = w.describe();
    j["kappa"] = to_string(w.kappa());
    j["theta"] = to_string(w.theta());
    j["A0"] = complex_json(table->A0, d);
    Json cs = Json::array();
    for (std::size_t k = 1; k <= J; ++k) {
        auto [re, im] = cj(k);
        if (cfg.rational) {
            cs.push_back(Json{{"j", k}, {"c", re}});
        } else {
            cs.push_back(Json{{"j", k}, {"c", Json{{"re", re}, {"im", im}}}});
        }
    }
    j["c"] = cs;

    Grid& g = r.grid;
    g.header = {"j", "c_re", "c_im"};
    g.rows.push_back({"A0", sci(table->A0.re, d), sci(table->A0.im, d)});
    for (std::size_t k = 1; k <= J; ++k) {
        auto [re, im] = cj(k);
        if (cfg.rational) {
            g.rows.push_back({std::to_string(k), re, ""});
        } else {
            g.rows.push_back({std::to_string(k), re, im});
        }
    }
    if (cfg.rational) {
        g.header = {"j", "c"};
        for (auto& row : g.rows) {
            row.pop_back();
        }
    }
    return r;
}

// sector: the plan chosen at each angle of a grid.
inline Report cmd_sector(const std::vector<std::string>& tokens, const RunConfig& cfg)
{
    using namespace detail;
    KeyValues kv(tokens, {"fn", "a", "b", "sigma", "delta", "theta"});
    std::vector<std::string> with_b = tokens;
    if (!kv.has("b") && !kv.has("delta")) {
        with_b.push_back("b=1");
    }
    Target t = target_arg(KeyValues(with_b, {"fn", "a", "b", "sigma", "delta", "theta"}));
    std::vector<Rational> turns;
    for (const auto& s : split(kv.get("theta"), ',')) {
        turns.push_back(angle_arg("theta", s));
    }
    WorkingPrecision wp(cfg.digits);
    bool neg_a = t.fn == "psi01" && t.a < 0;
    std::optional<WrightParams> w;
    if (t.fn == "psi01" && t.a > 0) {
        w = psi01_params(t.a, t.b);
    } else if (t.fn == "psi10") {
        w = psi10_params(t.sigma, t.delta, ParamCheck::formal);
    } else if (!neg_a) {
        throw DomainError("a = 0: no sector plan");
    }
    Report r;
    r.json["inputs"] = kv.echo();
    r.json["function"] = neg_a ? "0Psi1[a = " + to_string(t.a) + ", b = " + to_string(t.b) + "]" : w->describe();
    Json sectors = Json::array();
    r.grid.header = {"theta", "regime", "flags", "N", "borderline", "components", "warning"};
    for (const auto& turn : turns) {
        Real theta = pi() * to_real(turn);
        SectorPlan p = neg_a ? sector_plan_neg_a(-t.a, theta, cfg.eps_over_pi)
                             : sector_plan_general(*w, theta, cfg.eps_over_pi);
        Json s;
        s["theta"] = angle_text(turn);
        Json pj = plan_json(p, neg_a);
        for (auto& [k, v] : pj.items()) {
            s[k] = v;
        }
        sectors.push_back(s);
        r.grid.rows.push_back({angle_text(turn), p.regime, neg_a ? p.flags() : std::string(), std::to_string(p.N),
                               p.borderline ? "yes" : "no", component_names(p), p.warning});
    }
    r.json["sectors"] = sectors;
    return r;
}

namespace detail {

struct TableRow {
    std::string row;
    std::string parameters;
    std::string quantity;
    std::string expected;
    std::string computed;
    std::string rel_error;
    bool match = false;
    std::string note;
};

inline Real rel_err(const Real& got, const Real& want)
{
    return want == 0 ? abs(got) : abs(got / want - 1);
}

inline TableRow numeric_row(std::string row, std::string params, std::string quantity, double expected,
                            const Real& computed, double tol, int sig, std::string note = "")
{
    Real want(expected);
    Real e = rel_err(computed, want);
    return {std::move(row), std::move(params), std::move(quantity), to_sci(want, sig), to_sci(computed, sig + 2),
            to_sci(e, 3), e <= tol, std::move(note)};
}

inline std::vector<TableRow> table1_rows(const RunConfig&)
{
    std::vector<TableRow> rows;
    auto t = inverse_factorial_coeffs(psi01_params(Rational(1, 2), Rational(5, 4)), 10);
    const auto& ref = reference::table1();
    for (std::size_t j = 1; j <= 10; ++j) {
        std::string got = to_string(t->exact[j]);
        rows.push_back({std::to_string(j), "a=1/2 b=5/4", "c_" + std::to_string(j), ref[j - 1], got,
                        got == ref[j - 1] ? "0" : "-", got == ref[j - 1], "exact"});
    }
    return rows;
}

inline std::vector<TableRow> table2_rows(const RunConfig& cfg)
{
    unsigned d = std::max(cfg.digits, 60u);
    std::vector<TableRow> rows;
    int i = 0;
    for (const auto& ref : reference::table2()) {
        ++i;
        std::size_t M = cfg.M.value_or(ref.M);
        ExpansionValue v = psi01_stokes_half(ref.b, Real(10), M, d);
        EvalResult oracle = eval_bessel_series(BesselParams{Rational(-1, 2), ref.b}, ExactPoint::real(10), d);
        WorkingPrecision wp(d);
        std::string params = "b=" + to_string(ref.b) + " x=10 M=" + std::to_string(M);
        Real gap = (oracle.value - v.components[0].value).re;
        rows.push_back(numeric_row(std::to_string(i), params, "0Psi1-Hopt", ref.gap, gap, 1e-9, 11));
        rows.push_back(numeric_row(std::to_string(i), params, "R+_M", ref.remainder, v.components[1].value.re, 1e-9, 11));
    }
    return rows;
}

inline std::vector<TableRow> table3_rows(const RunConfig& cfg)
{
    unsigned d = cfg.digits;
    std::vector<TableRow> rows;
    int i = 0;
    for (const auto& ref : reference::table3()) {
        ++i;
        std::size_t M = cfg.M.value_or(15);
        Truncated t = psi01_neg_axis(ref.sigma, Rational(1), Real(ref.x), M, 64, d);
        EvalResult oracle = eval_bessel_series(BesselParams{-ref.sigma, Rational(1)}, ExactPoint::real(-ref.x), d);
        WorkingPrecision wp(d);
        std::string params = "sigma=" + to_string(ref.sigma) + " b=1 x=" + std::to_string(ref.x) + " M=" +
                             std::to_string(M);
        rows.push_back(
            numeric_row(std::to_string(i), params, "0Psi1(-x)", ref.value, oracle.value.re, 1e-9, 11, ref.note));
        rows.push_back(numeric_row(std::to_string(i), params, "R-_M", ref.remainder, t.value.re, 1e-9, 11));
    }
    return rows;
}

inline std::vector<TableRow> table4_rows(const RunConfig& cfg)
{
    std::vector<TableRow> rows;
    for (const auto& col : reference::table4()) {
        auto t = inverse_factorial_coeffs(psi10_params(col.sigma, Rational(-1, 4)), 10, cfg.digits);
        WorkingPrecision wp(cfg.digits);
        for (std::size_t j = 1; j <= 10; ++j) {
            const std::string& printed = col.c[j - 1];
            Real want = to_real(parse_rational(printed));
            Real got = t->c[j].re;
            // one unit in the last printed digit
            auto dot = printed.find('.');
            auto e = printed.find('e');
            long decimals = static_cast<long>((e == std::string::npos ? printed.size() : e) - dot - 1);
            long exp10 = e == std::string::npos ? 0 : std::stol(printed.substr(e + 1));
            Real ulp = pow(Real(10), exp10 - decimals);
            Real rel = rel_err(got, want);
            bool ok = abs(got - want) <= ulp;
            rows.push_back({std::to_string(j), "sigma=" + to_string(col.sigma) + " b=5/4", "c_" + std::to_string(j),
                            printed, to_sci(got, 14), to_sci(rel, 3), ok, "1 unit in the last printed digit"});
        }
    }
    return rows;
}

inline std::vector<TableRow> f_rows(const std::vector<reference::FCell>& cells, const RunConfig& cfg)
{
    std::vector<TableRow> rows;
    ExpansionOptions o = cfg.expansion();
    int i = 0;
    for (const auto& c : cells) {
        ++i;
        FValue f = relative_error_F(c.lambda, c.mu, c.nu, c.sigma, Rational(5, 4), ExactPoint::polar(Rational(c.x), c.turn),
                                    o);
        WorkingPrecision wp(cfg.digits);
        std::string params = "sigma=" + to_string(c.sigma) + " x=" + std::to_string(c.x) +
                             " theta=" + angle_text(c.turn) + " (" + std::to_string(c.lambda) + "," +
                             std::to_string(c.mu) + "," + std::to_string(c.nu) + ")";
        TableRow row = numeric_row(std::to_string(i), params, "F", c.F, f.F, 5e-3, 4);
        row.note = "J=" + std::to_string(f.e_plus.terms) + " K=" + std::to_string(f.h_hat.terms);
        rows.push_back(row);
    }
    return rows;
}

} // namespace detail

// table N: recompute every cell of a reference table and compare.
inline Report cmd_table(const std::vector<std::string>& tokens, const RunConfig& cfg)
{
    using namespace detail;
    if (tokens.size() != 1) {
        throw UsageError("table needs one id, 1 to 6");
    }
    std::vector<TableRow> rows;
    const std::string& id = tokens[0];
    if (id == "1") {
        rows = table1_rows(cfg);
    } else if (id == "2") {
        rows = table2_rows(cfg);
    } else if (id == "3") {
        rows = table3_rows(cfg);
    } else if (id == "4") {
        rows = table4_rows(cfg);
    } else if (id == "5") {
        rows = f_rows(reference::table5(), cfg);
    } else if (id == "6") {
        rows = f_rows(reference::table6(), cfg);
    } else {
        throw UsageError("table id must be 1 to 6");
    }
    Report r;
    r.json["inputs"] = Json{{"table", id}, {"digits", cfg.digits}};
    Json js = Json::array();
    r.grid.header = {"row", "parameters", "quantity", "expected", "computed", "rel_error", "match", "note"};
    TableMismatch mm;
    for (const auto& row : rows) {
        js.push_back(Json{{"row", row.row},
                          {"parameters", row.parameters},
                          {"quantity", row.quantity},
                          {"expected", row.expected},
                          {"computed", row.computed},
                          {"rel_error", row.rel_error},
                          {"match", row.match},
                          {"note", row.note}});
        r.grid.rows.push_back({row.row, row.parameters, row.quantity, row.expected, row.computed, row.rel_error,
                               row.match ? "yes" : "no", row.note});
        if (!row.match) {
            mm.offenders.push_back("table " + id + " row " + row.row + " " + row.parameters + " " + row.quantity +
                                   ": expected " + row.expected + ", computed " + row.computed);
        }
    }
    r.json["rows"] = js;
    r.json["mismatches"] = mm.offenders.size();
    if (!mm.offenders.empty()) {
        r.mismatch = mm;
    }
    return r;
}

inline void emit(const Report& r, Format f, std::ostream& out)
{
    switch (f) {
    case Format::json:
        out << r.json.dump(2) << '\n';
        break;
    case Format::csv:
        detail::write_csv(out, r.grid);
        break;
    case Format::text:
        detail::write_text(out, r.grid);
        break;
    }
}

// Full command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalised Bessel and Wright functions: series, large-|z| expansions, coefficients"};
    app.name("wrightfn");
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    RunConfig cfg;
    std::string format;
    long J = -1, K = -1, M = -1;
    app.add_option("--prec", cfg.digits, "working precision in decimal digits (>= 16)")
        ->check(CLI::Range(16u, 100000u));
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--force-borderline", cfg.force_borderline, "evaluate on borderline rays instead of refusing");
    app.add_option("--eps", cfg.eps_over_pi, "borderline half-width, in units of pi")->check(CLI::PositiveNumber);
    app.add_option("--J", J, "terms of the exponential sums")->check(CLI::NonNegativeNumber);
    app.add_option("--K", K, "terms of the algebraic sums")->check(CLI::NonNegativeNumber);
    app.add_option("--M", M, "highest index of the Stokes-line and negative-axis sums")->check(CLI::NonNegativeNumber);
    app.add_flag("--rational", cfg.rational, "exact p/q coefficients");

    std::vector<std::string> args;
    struct Verb {
        const char* name;
        const char* help;
    };
    const Verb verbs[] = {
        {"eval", "evaluate: fn=psi01 a= b= | fn=psi10 sigma= delta=; x= | z= | modulus= angle=; method=series|asym|both"},
        {"coeffs", "coefficients: psi01 a= b= | psi10 sigma= (delta= | b=); J="},
        {"table", "recompute a reference table: 1 to 6"},
        {"sector", "sector plans: a= | sigma= ; b= ; theta=0,0.25pi,..."},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& v : verbs) {
        CLI::App* s = app.add_subcommand(v.name, v.help);
        s->fallthrough();
        s->add_option("args", args, "key=value arguments");
        subs[v.name] = s;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }
    if (!format.empty()) {
        cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
        cfg.format_given = true;
    }
    if (J >= 0) {
        cfg.J = static_cast<std::size_t>(J);
    }
    if (K >= 0) {
        cfg.K = static_cast<std::size_t>(K);
    }
    if (M >= 0) {
        cfg.M = static_cast<std::size_t>(M);
    }

    try {
        Report r;
        Format f = cfg.format;
        if (subs["eval"]->parsed()) {
            r = cmd_eval(args, cfg);
        } else if (subs["coeffs"]->parsed()) {
            r = cmd_coeffs(args, cfg);
        } else if (subs["table"]->parsed()) {
            r = cmd_table(args, cfg);
            if (!cfg.format_given) {
                f = Format::csv;
            }
        } else {
            r = cmd_sector(args, cfg);
        }
        emit(r, f, out);
        if (r.mismatch) {
            for (const auto& o : r.mismatch->offenders) {
                err << "mismatch: " << o << '\n';
            }
            return exit_code::mismatch;
        }
        return exit_code::ok;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const BorderlineError& e) {
        err << "borderline: " << e.what() << '\n';
        return exit_code::borderline;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::domain;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.push_back("wrightfn");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace wright::cli

#endif
