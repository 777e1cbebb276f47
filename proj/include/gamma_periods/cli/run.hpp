#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "../cover/theorem_b.hpp"
#include "../monomial/json.hpp"
#include "../verify/distribution.hpp"
#include "../verify/euler.hpp"
#include "../verify/lcs.hpp"
#include "../verify/theorem_b.hpp"
#include "../verify/unit_period.hpp"

namespace gamma_periods::cli {

using Json = nlohmann::json;

inline constexpr int exit_certified = 0;
inline constexpr int exit_not_certified = 1;
inline constexpr int exit_input_error = 2;
inline constexpr long default_digits = 50;
inline constexpr long minimum_digits = 20;

// Input error with a position inside a named source (a flag value or a config file).
class InputError : public std::runtime_error {
public:
    InputError(std::string source, int line, int column, std::string kind, const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + kind + ": " +
                             message),
          source_(std::move(source)), line_(line), column_(column), kind_(std::move(kind)), message_(message) {}

    Json to_json() const {
        return Json{{"source", source_}, {"line", line_}, {"column", column_}, {"kind", kind_}, {"message", message_}};
    }

private:
    std::string source_;
    int line_, column_;
    std::string kind_;
    std::string message_;
};

struct Setting {
    std::string value;
    std::string source; // "--flag", "path/to/config" or an environment variable
    int line = 1;
    int column = 1;     // of the first character of value
    int key_column = 1;
};

struct RunConfig {
    std::string command;
    std::map<std::string, Setting> settings;
    long digits = default_digits;
    unsigned jobs = 1;
    bool timing = false;
    std::string output;

    bool has(const std::string& key) const { return settings.count(key) != 0; }
    const Setting& at(const std::string& key) const {
        auto it = settings.find(key);
        if (it == settings.end())
            throw InputError("--" + key, 1, 1, "invalid-argument", "missing required option --" + key);
        return it->second;
    }
};

namespace detail {

[[noreturn]] inline void fail_at(const Setting& s, int offset_line, int offset_column, const std::string& kind,
                                 const std::string& message) {
    int line = s.line + offset_line - 1;
    int column = offset_line == 1 ? s.column + offset_column - 1 : offset_column;
    throw InputError(s.source, line, column, kind, message);
}

[[noreturn]] inline void fail_value(const Setting& s, const std::string& message) {
    fail_at(s, 1, 1, "invalid-argument", message);
}

// Rethrows a library error raised while interpreting a setting as an input error at that setting.
template <class F>
auto interpret(const Setting& s, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        fail_at(s, e.line(), e.column(), "parse-error", e.detail());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::precision_exhausted || e.kind() == ErrorKind::quadrature_failure ||
            e.kind() == ErrorKind::inconclusive_basis)
            throw;
        fail_at(s, 1, 1, to_string(e.kind()), e.message());
    }
}

inline long parse_long(const Setting& s) {
    exact::Integer v;
    if (!exact::detail::parse_integer_text(s.value, v) || !v.fits_slong_p()) fail_value(s, "expected an integer, got '" + s.value + "'");
    return v.get_si();
}

inline exact::Rational parse_rational(const Setting& s) {
    exact::Rational q;
    if (!exact::try_parse_rational(s.value, q)) fail_value(s, "expected a rational num/den, got '" + s.value + "'");
    return q;
}

inline std::string trim(std::string_view t) {
    std::size_t a = 0, b = t.size();
    while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
    return std::string(t.substr(a, b - a));
}

// Splits on commas; returns each item with its 1-based column inside the value.
inline std::vector<std::pair<std::string, int>> split_list(const std::string& value) {
    std::vector<std::pair<std::string, int>> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = value.find(',', start);
        std::string_view piece(value.data() + start, (comma == std::string::npos ? value.size() : comma) - start);
        std::size_t lead = 0;
        while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
        out.emplace_back(trim(piece), static_cast<int>(start + lead + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::vector<exact::Rational> parse_rational_list(const Setting& s) {
    std::vector<exact::Rational> out;
    for (auto& [item, column] : split_list(s.value)) {
        exact::Rational q;
        if (!exact::try_parse_rational(item, q)) fail_at(s, 1, column, "parse-error", "malformed rational '" + item + "'");
        out.push_back(q);
    }
    return out;
}

} // namespace detail

// "key = value" lines; '#' starts a comment. Keys are the long flag names.
inline std::map<std::string, Setting> parse_config_text(const std::string& text, const std::string& source) {
    std::map<std::string, Setting> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError(source, number, static_cast<int>(first + 1), "parse-error", "expected 'key = value'");
        std::string key = detail::trim(std::string_view(line).substr(0, eq));
        if (key.empty()) throw InputError(source, number, static_cast<int>(first + 1), "parse-error", "empty key");
        for (char c : key)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'))
                throw InputError(source, number, static_cast<int>(first + 1), "parse-error", "malformed key '" + key + "'");
        std::size_t vstart = line.find_first_not_of(" \t", eq + 1);
        std::string value = vstart == std::string::npos ? "" : detail::trim(std::string_view(line).substr(vstart));
        if (out.count(key))
            throw InputError(source, number, static_cast<int>(first + 1), "parse-error", "duplicate key '" + key + "'");
        out[key] = Setting{value, source, number, static_cast<int>((vstart == std::string::npos ? line.size() : vstart) + 1),
                           static_cast<int>(first + 1)};
    }
    return out;
}

struct CommandSpec {
    const char* name;
    const char* help;
    std::vector<const char*> keys;
};

inline const std::vector<CommandSpec>& command_specs() {
    static const std::vector<CommandSpec> specs = {
        {"solve-epsilon", "least-norm exponent function with prescribed Hodge moments", {"d", "hodge"}},
        {"koblitz-ogus", "test whether all moments of an exponent function vanish", {"d", "epsilon"}},
        {"cover", "summary, eigensheaf data and Hodge table of a cyclic cover", {"branch"}},
        {"hrr-check", "exact Riemann-Roch identity for each unit", {"branch", "lambda"}},
        {"serre-check", "exact Serre duality bookkeeping for each unit", {"branch", "lambda"}},
        {"theorem-b", "period determinant against the predicted gamma monomial", {"branch", "lambda", "pslq-degree", "pslq-height"}},
        {"euler", "beta integral against the gamma quotient", {"a", "b"}},
        {"lcs", "real CM period against the Chowla-Selberg gamma product",
         {"discriminant", "a4", "a6", "period", "pslq-degree", "pslq-height"}},
        {"distribution", "Gauss multiplication formula", {"d", "s"}},
        {"unit-period", "period of the unit object on a punctured line", {"m"}},
        {"pslq", "integer relation among decimal values", {"values", "max-coeff"}},
    };
    return specs;
}

inline const std::vector<const char*>& common_keys() {
    static const std::vector<const char*> keys = {"digits", "jobs", "output", "timing"};
    return keys;
}

// Flag values win over config values; digits fall back to GAMMA_PERIODS_DIGITS.
inline RunConfig build_config(const std::string& command, const std::map<std::string, std::string>& flags,
                              const std::string& config_path) {
    RunConfig cfg;
    std::map<std::string, Setting> merged;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw InputError(config_path, 1, 1, "invalid-argument", "cannot read config file");
        std::stringstream buffer;
        buffer << in.rdbuf();
        merged = parse_config_text(buffer.str(), config_path);
    }
    cfg.command = command;
    if (auto it = merged.find("command"); it != merged.end()) {
        if (command.empty())
            cfg.command = it->second.value;
        merged.erase(it);
    }
    const CommandSpec* spec = nullptr;
    for (const auto& s : command_specs())
        if (cfg.command == s.name) spec = &s;
    if (!spec) throw InputError("command", 1, 1, "invalid-argument", "unknown or missing command '" + cfg.command + "'");
    for (const auto& [key, setting] : merged) {
        bool known = std::find_if(spec->keys.begin(), spec->keys.end(), [&](const char* k) { return key == k; }) !=
                         spec->keys.end() ||
                     std::find_if(common_keys().begin(), common_keys().end(), [&](const char* k) { return key == k; }) !=
                         common_keys().end();
        if (!known)
            throw InputError(setting.source, setting.line, setting.key_column, "parse-error",
                             "unknown key '" + key + "' for command " + cfg.command);
    }
    for (const auto& [key, value] : flags) merged[key] = Setting{value, "--" + key, 1, 1};
    if (!merged.count("digits"))
        if (const char* env = std::getenv("GAMMA_PERIODS_DIGITS"); env && *env)
            merged["digits"] = Setting{env, "GAMMA_PERIODS_DIGITS", 1, 1};
    cfg.settings = std::move(merged);

    if (cfg.has("digits")) {
        cfg.digits = detail::parse_long(cfg.at("digits"));
        if (cfg.digits < minimum_digits)
            detail::fail_value(cfg.at("digits"), "digits must be >= " + std::to_string(minimum_digits));
    }
    cfg.jobs = numerics::default_parallelism();
    if (cfg.has("jobs")) {
        long j = detail::parse_long(cfg.at("jobs"));
        if (j < 1) detail::fail_value(cfg.at("jobs"), "jobs must be >= 1");
        cfg.jobs = static_cast<unsigned>(j);
    }
    if (cfg.has("timing")) {
        const std::string& v = cfg.at("timing").value;
        if (v == "true" || v == "1" || v == "yes")
            cfg.timing = true;
        else if (v == "false" || v == "0" || v == "no")
            cfg.timing = false;
        else
            detail::fail_value(cfg.at("timing"), "expected true or false");
    }
    if (cfg.has("output")) cfg.output = cfg.at("output").value;
    return cfg;
}

struct Outcome {
    Json reports = Json::array();
    bool all_pass = true;

    void add(Json report, bool pass) {
        reports.push_back(std::move(report));
        all_pass = all_pass && pass;
    }
    void add(const verify::VerificationReport& r, bool timing) { add(verify::to_json(r, timing), verify::passes(r.verdict)); }
};

namespace detail {

inline cover::BranchData branch_of(const RunConfig& cfg) {
    const Setting& s = cfg.at("branch");
    return interpret(s, [&] {
        auto b = cover::parse_branch_data(s.value);
        cover::validate(b);
        return b;
    });
}

inline std::vector<long> lambdas_of(const RunConfig& cfg, long d) {
    if (!cfg.has("lambda")) return exact::unit_group(d);
    const Setting& s = cfg.at("lambda");
    std::vector<long> out;
    for (auto& [item, column] : split_list(s.value)) {
        exact::Integer v;
        if (!exact::detail::parse_integer_text(item, v) || !v.fits_slong_p())
            fail_at(s, 1, column, "parse-error", "malformed lambda '" + item + "'");
        if (!exact::is_unit(v.get_si(), d))
            fail_at(s, 1, column, "invalid-unit", item + " is not a unit modulo " + std::to_string(d));
        out.push_back(v.get_si());
    }
    return out;
}

inline long long_or(const RunConfig& cfg, const std::string& key, long fallback) {
    return cfg.has(key) ? parse_long(cfg.at(key)) : fallback;
}

inline Json eigen_to_json(const cover::BranchData& b, const cover::EigenData& e) {
    Json support = Json::array();
    for (auto i : e.support) support.push_back(b.points[i].to_string());
    Json residues = Json::object();
    for (auto i : e.support) residues[b.points[i].to_string()] = exact::to_fraction_string(e.residues[i]);
    auto row = cover::hodge_row_from(e);
    return Json{{"lambda", e.lambda},
                {"sheaf_degree", e.sheaf_degree.get_si()},
                {"support", support},
                {"residues", residues},
                {"hodge", Json{{"h00", row.h00}, {"h01", row.h01}, {"h10", row.h10}, {"h11", row.h11}}}};
}

} // namespace detail

inline Outcome dispatch(const RunConfig& cfg) {
    using namespace detail;
    Outcome out;
    const std::string& c = cfg.command;
    const long digits = cfg.digits;

    if (c == "solve-epsilon") {
        const long d = parse_long(cfg.at("d"));
        const Setting& hs = cfg.at("hodge");
        std::map<long, long> values;
        for (auto& [item, column] : split_list(hs.value)) {
            auto colon = item.find(':');
            exact::Integer l, p;
            if (colon == std::string::npos || !exact::detail::parse_integer_text(trim(item.substr(0, colon)), l) ||
                !exact::detail::parse_integer_text(trim(item.substr(colon + 1)), p) || !l.fits_slong_p() ||
                !p.fits_slong_p())
                fail_at(hs, 1, column, "parse-error", "expected lambda:p, got '" + item + "'");
            values[l.get_si()] = p.get_si();
        }
        auto hodge = interpret(hs, [&] { return monomial::HodgeFunction(d, values); });
        Json report{{"identity", "epsilon-moments"}, {"parameters", Json{{"d", d}, {"hodge", hs.value}}}};
        try {
            auto eps = monomial::solve_epsilon(hodge);
            Json moments = Json::object();
            for (long u : exact::unit_group(d)) moments[std::to_string(u)] = exact::to_fraction_string(monomial::moment(eps, u));
            Json gauge = Json::array();
            for (const auto& g : monomial::epsilon_gauge_basis(d)) gauge.push_back(monomial::to_json(g));
            report["epsilon"] = monomial::to_json(eps);
            report["moments"] = moments;
            report["gauge_basis"] = gauge;
            report["verdict"] = verify::to_string(verify::Verdict::exact_match);
            out.add(report, true);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::no_epsilon) throw;
            report["verdict"] = verify::to_string(verify::Verdict::not_certified);
            report["error"] = e.what();
            out.add(report, false);
        }
    } else if (c == "koblitz-ogus") {
        const long d = parse_long(cfg.at("d"));
        const Setting& es = cfg.at("epsilon");
        auto values = parse_rational_list(es);
        if (values.size() == static_cast<std::size_t>(d - 1)) values.insert(values.begin(), exact::Rational(0));
        if (values.size() != static_cast<std::size_t>(d))
            fail_value(es, "expected " + std::to_string(d) + " values (or " + std::to_string(d - 1) + " for a = 1..d-1)");
        auto eps = interpret(es, [&] { return monomial::ExponentFunction(d, values); });
        Json moments = Json::object();
        for (long u : exact::unit_group(d)) moments[std::to_string(u)] = exact::to_fraction_string(monomial::moment(eps, u));
        bool trivial = monomial::koblitz_ogus_trivial(eps);
        out.add(Json{{"identity", "koblitz-ogus"},
                     {"parameters", Json{{"epsilon", monomial::to_json(eps)}}},
                     {"moments", moments},
                     {"trivial", trivial},
                     {"verdict", verify::to_string(trivial ? verify::Verdict::exact_match : verify::Verdict::not_certified)}},
                trivial);
    } else if (c == "cover") {
        auto b = branch_of(cfg);
        auto s = cover::validate(b);
        Json eigen = Json::array();
        long betti1 = 0;
        for (long l = 0; l < b.d; ++l) {
            auto e = cover::eigen_data(b, l);
            eigen.push_back(eigen_to_json(b, e));
            if (l != 0) {
                auto row = cover::hodge_row_from(e);
                betti1 += row.h10 + row.h01;
            }
        }
        bool hurwitz_ok = !s.connected || betti1 == 2 * s.genus;
        out.add(Json{{"identity", "cover-summary"},
                     {"parameters", Json{{"branch", cover::to_string(b)}}},
                     {"degree", s.degree.get_str()},
                     {"line_degree", s.line_degree.get_str()},
                     {"connected", s.connected},
                     {"components", s.components},
                     {"genus", s.genus},
                     {"eigenspaces", eigen},
                     {"first_betti_from_hodge", betti1},
                     {"hurwitz_consistent", hurwitz_ok},
                     {"gamma_exponents", monomial::to_json(cover::theorem_b_exponents(b))},
                     {"verdict", verify::to_string(hurwitz_ok ? verify::Verdict::exact_match : verify::Verdict::not_certified)}},
                hurwitz_ok);
    } else if (c == "hrr-check" || c == "serre-check") {
        auto b = branch_of(cfg);
        for (long l : lambdas_of(cfg, b.d)) {
            Json report{{"identity", c}, {"parameters", Json{{"branch", cover::to_string(b)}, {"lambda", exact::rep(l, b.d)}}}};
            bool ok;
            if (c == "hrr-check") {
                auto r = cover::hrr_check(b, l);
                report["lhs"] = exact::to_fraction_string(r.lhs);
                report["rhs"] = exact::to_fraction_string(r.rhs);
                ok = r.equal;
            } else {
                auto r = cover::serre_duality_details(b, l);
                Json entries = Json::array();
                for (auto& e : r.entries) entries.push_back(Json{{"p", e.p}, {"q", e.q}, {"lhs", e.lhs}, {"rhs", e.rhs}});
                report["entries"] = entries;
                ok = r.holds;
            }
            report["equal"] = ok;
            report["verdict"] = verify::to_string(ok ? verify::Verdict::exact_match : verify::Verdict::not_certified);
            out.add(report, ok);
        }
    } else if (c == "theorem-b") {
        auto b = branch_of(cfg);
        auto lambdas = lambdas_of(cfg, b.d);
        verify::TheoremBOptions opt;
        opt.digits = digits;
        opt.pslq_degree = long_or(cfg, "pslq-degree", 0);
        opt.pslq_height = long_or(cfg, "pslq-height", 20);
        std::vector<verify::VerificationReport> reports(lambdas.size());
        try {
            numerics::parallel_for(lambdas.size(), cfg.jobs,
                                   [&](std::size_t i) { reports[i] = verify::verify_theorem_b(b, lambdas[i], opt); });
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::inconclusive_basis || e.kind() == ErrorKind::quadrature_failure ||
                e.kind() == ErrorKind::precision_exhausted)
                throw;
            fail_at(cfg.at("branch"), 1, 1, to_string(e.kind()), e.message());
        }
        for (auto& r : reports) out.add(r, cfg.timing);
    } else if (c == "euler") {
        auto a = parse_rational(cfg.at("a"));
        auto bb = parse_rational(cfg.at("b"));
        out.add(interpret(cfg.at("a"), [&] { return verify::verify_euler(a, bb, digits); }), cfg.timing);
    } else if (c == "lcs") {
        const Setting& ds = cfg.at("discriminant");
        const long D = parse_long(ds);
        auto field = interpret(ds, [&] { return verify::class_number(D); });
        numerics::Real period;
        Json curve;
        if (cfg.has("period")) {
            const Setting& ps = cfg.at("period");
            period = interpret(ps, [&] { return numerics::Real(ps.value, numerics::bits_for_digits(digits + 10)); });
            curve = Json{{"period", ps.value}};
        } else {
            exact::Rational a4, a6;
            if (cfg.has("a4") || cfg.has("a6")) {
                a4 = parse_rational(cfg.at("a4"));
                a6 = parse_rational(cfg.at("a6"));
            } else if (D == -4) {
                a4 = -1;
            } else if (D == -3) {
                a6 = 16;
            } else {
                fail_value(ds, "no default curve for this discriminant; pass --a4/--a6 or --period");
            }
            auto cm = interpret(ds, [&] { return verify::cm_period(a4, a6, digits); });
            period = cm.period;
            curve = Json{{"a4", exact::to_fraction_string(a4)},
                         {"a6", exact::to_fraction_string(a6)},
                         {"agm_quadrature_discrepancy", cm.discrepancy.to_string(6)}};
        }
        auto r = verify::verify_lcs(field.discriminant, period, digits, long_or(cfg, "pslq-degree", 4),
                                    long_or(cfg, "pslq-height", 20));
        r.details["curve"] = curve;
        out.add(r, cfg.timing);
    } else if (c == "distribution") {
        const long d = parse_long(cfg.at("d"));
        auto s = parse_rational(cfg.at("s"));
        out.add(interpret(cfg.at("s"), [&] { return verify::verify_distribution(d, s, digits); }), cfg.timing);
    } else if (c == "unit-period") {
        const long m = parse_long(cfg.at("m"));
        out.add(interpret(cfg.at("m"), [&] { return verify::verify_unit_period(m, digits); }), cfg.timing);
    } else if (c == "pslq") {
        const Setting& vs = cfg.at("values");
        const numerics::Bits prec = numerics::bits_for_digits(digits + 10);
        std::vector<numerics::Real> values;
        for (auto& [item, column] : split_list(vs.value)) {
            try {
                values.emplace_back(item, prec);
            } catch (const Error&) {
                fail_at(vs, 1, column, "parse-error", "malformed decimal '" + item + "'");
            }
        }
        exact::Integer max_coeff("1000000");
        if (cfg.has("max-coeff")) {
            const Setting& ms = cfg.at("max-coeff");
            if (!exact::detail::parse_integer_text(ms.value, max_coeff) || max_coeff < 1)
                fail_value(ms, "expected a positive integer");
        }
        Json report{{"identity", "integer-relation"},
                    {"parameters", Json{{"values", vs.value}, {"max_coeff", max_coeff.get_str()}, {"digits", digits}}}};
        bool found = false;
        std::optional<numerics::IntegerRelation> rel;
        try {
            rel = interpret(vs, [&] { return numerics::pslq(values, digits, max_coeff); });
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::precision_exhausted) throw;
            report["note"] = e.message();
        }
        if (rel) {
            Json coefficients = Json::array();
            for (auto& ci : rel->coefficients) coefficients.push_back(ci.get_str());
            report["relation"] = coefficients;
            report["residual"] = rel->residual.to_string(6);
            found = true;
        } else {
            report["relation"] = Json();
        }
        report["verdict"] = verify::to_string(found ? verify::Verdict::algebraic_ratio_detected : verify::Verdict::not_certified);
        out.add(report, found);
    }
    return out;
}

inline std::string render(const std::string& command, const Outcome& outcome) {
    Json doc{{"schema", 1}, {"command", command}, {"reports", outcome.reports}};
    return doc.dump(2) + "\n";
}

inline std::string render_error(const InputError& e) {
    Json doc{{"schema", 1}, {"error", e.to_json()}};
    return doc.dump(2) + "\n";
}

// Full command line handling; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification toolkit for period and gamma-value identities of cyclic covers of the projective line"};
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value file; flags win on conflict");

    std::map<std::string, std::string> flags;
    std::vector<std::pair<CLI::App*, std::string>> commands;
    auto add_keys = [&](CLI::App* sub, const std::vector<const char*>& keys) {
        for (const char* k : keys) {
            std::string key = k;
            if (key == "timing") {
                sub->add_flag_callback("--timing", [&flags] { flags["timing"] = "true"; }, "include runtime in reports");
                continue;
            }
            sub->add_option_function<std::string>("--" + key, [&flags, key](const std::string& v) { flags[key] = v; });
        }
    };
    for (const auto& spec : command_specs()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--config", config_path, "key = value file; flags win on conflict");
        add_keys(sub, spec.keys);
        add_keys(sub, common_keys());
        commands.emplace_back(sub, spec.name);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        InputError input("command line", 1, 1, "parse-error", e.what());
        err << "error: " << input.what() << "\n";
        out << render_error(input);
        return exit_input_error;
    }
    std::string command;
    for (auto& [sub, name] : commands)
        if (sub->parsed()) command = name;

    try {
        RunConfig cfg = build_config(command, flags, config_path);
        Outcome outcome = dispatch(cfg);
        std::string text = render(cfg.command, outcome);
        if (!cfg.output.empty()) {
            std::ofstream file(cfg.output);
            if (!file) throw InputError(cfg.at("output").source, 1, 1, "invalid-argument", "cannot write " + cfg.output);
            file << text;
        } else {
            out << text;
        }
        return outcome.all_pass ? exit_certified : exit_not_certified;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        out << render_error(e);
        return exit_input_error;
    } catch (const Error& e) {
        InputError input("computation", 1, 1, to_string(e.kind()), e.message());
        err << "error: " << e.what() << "\n";
        out << render_error(input);
        return e.kind() == ErrorKind::quadrature_failure || e.kind() == ErrorKind::inconclusive_basis ||
                       e.kind() == ErrorKind::precision_exhausted
                   ? exit_not_certified
                   : exit_input_error;
    }
}

} // namespace gamma_periods::cli
