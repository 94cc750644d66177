#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "umbra/basis.hpp"
#include "umbra/classical.hpp"
#include "umbra/errors.hpp"
#include "umbra/expr.hpp"
#include "umbra/identities.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/power_series.hpp"
#include "umbra/rational.hpp"
#include "umbra/render.hpp"

namespace umbra::cli {

enum class Format { text, json, latex };

struct OutputDoc {
    Format format = Format::text;
    std::string payload;  // newline-terminated document for stdout
};

struct RunResult {
    OutputDoc doc;
    std::string diagnostics;  // for stderr
    int status = 0;           // 0 ok / all-pass, 1 identity failure, 2 usage or parse error
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    return Format::text;
}

inline Json coeffs_json(const std::vector<Rational>& coeffs) {
    Json a = Json::array();
    for (const auto& c : coeffs) a.push_back(c.to_string());
    return a;
}

struct FamilyRequest {
    std::string family;  // "bernoulli", "euler", "bernoulli-order"
    std::size_t n = 0;
    std::optional<long> r;
    std::optional<Rational> at;
};

inline std::string family_doc(Format format, const FamilyRequest& req, const Polynomial& p) {
    if (req.at) {
        const Rational value = p.eval(*req.at);
        switch (format) {
            case Format::text: return value.to_string() + "\n";
            case Format::latex: return rational_latex(value) + "\n";
            case Format::json: {
                Json doc;
                doc["family"] = req.family;
                doc["n"] = req.n;
                if (req.r) doc["r"] = *req.r;
                doc["at"] = req.at->to_string();
                doc["value"] = value.to_string();
                return doc.dump() + "\n";
            }
        }
    }
    switch (format) {
        case Format::text: return p.to_string() + "\n";
        case Format::latex: return polynomial_latex(p) + "\n";
        case Format::json: {
            Json doc;
            doc["family"] = req.family;
            doc["n"] = req.n;
            if (req.r) doc["r"] = *req.r;
            doc["coeffs"] = coeffs_json(p.coefficients());
            return doc.dump() + "\n";
        }
    }
    return {};
}

inline std::string numbers_doc(Format format, const std::string& family, std::optional<long> r,
                               std::size_t upto, const std::vector<Rational>& values) {
    switch (format) {
        case Format::text: {
            std::string out;
            for (std::size_t i = 0; i < values.size(); ++i)
                out += std::to_string(i) + "\t" + values[i].to_string() + "\n";
            return out;
        }
        case Format::latex: {
            std::string out;
            for (std::size_t i = 0; i < values.size(); ++i) {
                std::string atom = family == "euler" ? "E_{" + std::to_string(i) + "}"
                                                     : "B_{" + std::to_string(i) + "}";
                if (r) atom += "^{(" + std::to_string(*r) + ")}";
                out += atom + " = " + rational_latex(values[i]) + " \\\\\n";
            }
            return out;
        }
        case Format::json: {
            Json doc;
            doc["family"] = family;
            if (r) doc["r"] = *r;
            doc["upto"] = upto;
            Json vals = Json::array();
            for (const auto& v : values) vals.push_back(v.to_string());
            doc["values"] = vals;
            return doc.dump() + "\n";
        }
    }
    return {};
}

inline std::string expansion_doc(Format format, const BasisExpansion& e, bool with_r) {
    switch (format) {
        case Format::text: return expansion_text(e) + "\n";
        case Format::latex: return expansion_latex(e) + "\n";
        case Format::json: {
            Json doc;
            doc["basis"] = e.basis.name();
            if (with_r) doc["r"] = e.basis.order_r();
            doc["coeffs"] = coeffs_json(e.coeffs);
            return doc.dump() + "\n";
        }
    }
    return {};
}

// Named functionals for the pairing command, or an explicit coefficient
// list "c0,c1,..." (a polynomial in t: everything beyond the list is zero).
inline PowerSeries resolve_series(const std::string& spec, long r, const Rational& y,
                                  std::size_t trunc) {
    if (spec == "bernoulli") return bernoulli_generator(trunc).reciprocal();
    if (spec == "bernoulli-order") {
        if (r < 0) throw domain_error("series order must be nonnegative");
        return pow(bernoulli_generator(trunc).reciprocal(), static_cast<std::size_t>(r));
    }
    if (spec == "euler") return euler_generator(trunc).reciprocal();
    if (spec == "exp") return exp_series(y, trunc);
    if (spec == "integral") return integral_series(y, trunc);
    try {
        std::vector<Rational> coeffs;
        std::size_t start = 0;
        while (start <= spec.size()) {
            const std::size_t comma = std::min(spec.find(',', start), spec.size());
            coeffs.push_back(Rational::from_string(
                std::string_view(spec).substr(start, comma - start)));
            start = comma + 1;
        }
        const std::size_t n = std::max(trunc, coeffs.size() - 1);
        return PowerSeries(n, std::move(coeffs));
    } catch (const domain_error&) {
        throw domain_error("unknown series '" + spec +
                           "': expected bernoulli, bernoulli-order, euler, exp, integral, or a "
                           "comma-separated list of rationals");
    }
}

inline std::string pairing_doc(Format format, const std::string& spec, std::optional<long> r,
                               const std::optional<Rational>& y, const std::string& expr,
                               const Rational& value) {
    switch (format) {
        case Format::text: return value.to_string() + "\n";
        case Format::latex: return rational_latex(value) + "\n";
        case Format::json: {
            Json doc;
            doc["series"] = spec;
            if (r) doc["r"] = *r;
            if (y) doc["y"] = y->to_string();
            doc["expr"] = expr;
            doc["value"] = value.to_string();
            return doc.dump() + "\n";
        }
    }
    return {};
}

struct IdentitySummary {
    std::string id;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<const IdentityInstance*> failed;
};

inline std::vector<IdentitySummary> summarize(const IdentityReport& report) {
    std::vector<IdentitySummary> groups;
    std::map<std::string, std::size_t> index;
    for (const auto& inst : report.instances) {
        auto [it, fresh] = index.try_emplace(inst.id, groups.size());
        if (fresh) groups.push_back({inst.id, 0, 0, {}});
        IdentitySummary& g = groups[it->second];
        ++g.instances;
        if (!inst.pass) {
            ++g.failures;
            g.failed.push_back(&inst);
        }
    }
    return groups;
}

inline std::string report_doc(Format format, const IdentityReport& report) {
    const auto groups = summarize(report);
    const std::size_t failures = report.failures();
    switch (format) {
        case Format::text: {
            std::string out;
            for (const auto& g : groups) {
                out += g.failures == 0 ? "ok    " : "FAIL  ";
                out += g.id + " (" + std::to_string(g.instances) + " instances";
                if (g.failures > 0) out += ", " + std::to_string(g.failures) + " failed";
                out += ")\n";
            }
            for (const auto& g : groups)
                for (const IdentityInstance* inst : g.failed)
                    out += "FAIL  " + inst->id + " " + inst->params + ": " + inst->detail + "\n";
            out += (failures == 0 ? "all identities hold: " : "FAILURES: ");
            out += std::to_string(groups.size()) + " identities, " +
                   std::to_string(report.instances.size()) + " instances, " +
                   std::to_string(failures) + " failures (max-n=" + std::to_string(report.max_n) +
                   ", max-r=" + std::to_string(report.max_r) +
                   ", seed=" + std::to_string(report.seed) + ")\n";
            return out;
        }
        case Format::latex: {
            std::string out = "\\begin{itemize}\n";
            for (const auto& g : groups)
                out += "\\item \\texttt{" + g.id + "}: " +
                       (g.failures == 0 ? "pass" : "fail") + " (" + std::to_string(g.instances) +
                       " instances)\n";
            out += "\\end{itemize}\n";
            return out;
        }
        case Format::json: {
            Json doc;
            doc["max_n"] = report.max_n;
            doc["max_r"] = report.max_r;
            doc["seed"] = report.seed;
            Json ids = Json::array();
            for (const auto& g : groups) {
                Json entry;
                entry["id"] = g.id;
                entry["instances"] = g.instances;
                entry["failures"] = g.failures;
                if (g.failures > 0) {
                    Json ces = Json::array();
                    for (const IdentityInstance* inst : g.failed) {
                        Json ce;
                        ce["params"] = inst->params;
                        ce["detail"] = inst->detail;
                        ces.push_back(ce);
                    }
                    entry["counterexamples"] = ces;
                }
                ids.push_back(entry);
            }
            doc["identities"] = ids;
            doc["instances"] = report.instances.size();
            doc["failures"] = failures;
            doc["status"] = failures == 0 ? "pass" : "fail";
            return doc.dump() + "\n";
        }
    }
    return {};
}

struct CommonOpts {
    std::size_t trunc = 64;
    std::uint64_t seed = kDefaultVerifySeed;
    std::string format;
};

inline void add_common(CLI::App* sub, CommonOpts& opts, const char* default_format) {
    opts.format = default_format;
    sub->add_option("--trunc", opts.trunc, "series truncation for constructed series")
        ->capture_default_str();
    sub->add_option("--seed", opts.seed, "seed for randomized checks")->capture_default_str();
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
}

}  // namespace detail

// Dispatches one command line (without the program name) and returns the
// rendered document, diagnostics, and exit status.  Identical argv always
// produces identical output.
inline RunResult run_command(const std::vector<std::string>& argv) {
    RunResult result;
    const std::size_t max_degree = ParseOptions{}.max_degree;

    CLI::App app{"exact umbral-calculus engine: Bernoulli and Euler families, Sheffer "
                 "expansions, identity verification"};
    app.name("umbra");
    app.require_subcommand(1);

    // bernoulli
    auto* bernoulli_cmd =
        app.add_subcommand("bernoulli", "Bernoulli polynomial (optionally of order r), or its "
                                        "value at a point");
    detail::CommonOpts bernoulli_opts;
    std::size_t bernoulli_n = 0;
    long bernoulli_r = 0;
    std::string bernoulli_at;
    bernoulli_cmd->add_option("--n", bernoulli_n, "degree")
        ->required()
        ->check(CLI::Range(std::size_t{0}, max_degree));
    auto* bernoulli_r_opt = bernoulli_cmd->add_option("--r", bernoulli_r, "order");
    bernoulli_cmd->add_option("--at", bernoulli_at, "evaluation point (rational p/q)");
    detail::add_common(bernoulli_cmd, bernoulli_opts, "text");

    // euler
    auto* euler_cmd = app.add_subcommand("euler", "Euler polynomial, or its value at a point");
    detail::CommonOpts euler_opts;
    std::size_t euler_n = 0;
    std::string euler_at;
    euler_cmd->add_option("--n", euler_n, "degree")
        ->required()
        ->check(CLI::Range(std::size_t{0}, max_degree));
    euler_cmd->add_option("--at", euler_at, "evaluation point (rational p/q)");
    detail::add_common(euler_cmd, euler_opts, "text");

    // numbers
    auto* numbers_cmd = app.add_subcommand("numbers", "table of family numbers up to an index");
    detail::CommonOpts numbers_opts;
    std::string numbers_family;
    long numbers_r = 1;
    std::size_t numbers_upto = 0;
    numbers_cmd->add_option("--family", numbers_family, "family name")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "euler", "bernoulli-order"}));
    auto* numbers_r_opt = numbers_cmd->add_option("--r", numbers_r, "order");
    numbers_cmd->add_option("--upto", numbers_upto, "largest index")
        ->required()
        ->check(CLI::Range(std::size_t{0}, max_degree));
    detail::add_common(numbers_cmd, numbers_opts, "text");

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "expand an expression in a Bernoulli basis");
    detail::CommonOpts expand_opts;
    std::string expand_basis;
    long expand_r = 1;
    std::string expand_expr;
    expand_cmd->add_option("--basis", expand_basis, "target basis")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "bernoulli-order"}));
    expand_cmd->add_option("--r", expand_r, "order for bernoulli-order");
    expand_cmd->add_option("expr", expand_expr, "expression to expand")->required();
    detail::add_common(expand_cmd, expand_opts, "json");

    // pairing
    auto* pairing_cmd =
        app.add_subcommand("pairing", "apply a functional (named series or coefficient list) to "
                                      "an expression");
    detail::CommonOpts pairing_opts;
    std::string pairing_series;
    long pairing_r = 1;
    std::string pairing_y = "1";
    std::string pairing_expr;
    pairing_cmd->add_option("--series", pairing_series, "series name or coefficient list")
        ->required();
    pairing_cmd->add_option("--r", pairing_r, "order for bernoulli-order");
    auto* pairing_y_opt =
        pairing_cmd->add_option("--y", pairing_y, "parameter for exp / integral series");
    pairing_cmd->add_option("expr", pairing_expr, "expression to pair against")->required();
    detail::add_common(pairing_cmd, pairing_opts, "text");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the full identity suite");
    detail::CommonOpts verify_opts;
    std::size_t verify_max_n = 12;
    std::size_t verify_max_r = 4;
    verify_cmd->add_option("--max-n", verify_max_n, "largest degree")->capture_default_str();
    verify_cmd->add_option("--max-r", verify_max_r, "largest order")->capture_default_str();
    detail::add_common(verify_cmd, verify_opts, "text");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(std::move(reversed));

        if (app.got_subcommand(bernoulli_cmd)) {
            detail::FamilyRequest req;
            req.family = bernoulli_r_opt->count() > 0 ? "bernoulli-order" : "bernoulli";
            req.n = bernoulli_n;
            if (bernoulli_r_opt->count() > 0) req.r = bernoulli_r;
            if (!bernoulli_at.empty()) req.at = Rational::from_string(bernoulli_at);
            const Polynomial p = req.r ? bernoulli_poly_order(bernoulli_n, *req.r)
                                       : bernoulli_poly(bernoulli_n);
            result.doc.format = detail::parse_format(bernoulli_opts.format);
            result.doc.payload = detail::family_doc(result.doc.format, req, p);
        } else if (app.got_subcommand(euler_cmd)) {
            detail::FamilyRequest req;
            req.family = "euler";
            req.n = euler_n;
            if (!euler_at.empty()) req.at = Rational::from_string(euler_at);
            result.doc.format = detail::parse_format(euler_opts.format);
            result.doc.payload = detail::family_doc(result.doc.format, req, euler_poly(euler_n));
        } else if (app.got_subcommand(numbers_cmd)) {
            if (numbers_r_opt->count() > 0 && numbers_family != "bernoulli-order")
                throw domain_error("--r applies only to --family bernoulli-order");
            std::vector<Rational> values;
            values.reserve(numbers_upto + 1);
            std::optional<long> r;
            if (numbers_family == "bernoulli-order") r = numbers_r;
            for (std::size_t i = 0; i <= numbers_upto; ++i) {
                if (numbers_family == "bernoulli") values.push_back(bernoulli_number(i));
                else if (numbers_family == "euler") values.push_back(euler_number(i));
                else values.push_back(bernoulli_number_order(i, numbers_r));
            }
            result.doc.format = detail::parse_format(numbers_opts.format);
            result.doc.payload =
                detail::numbers_doc(result.doc.format, numbers_family, r, numbers_upto, values);
        } else if (app.got_subcommand(expand_cmd)) {
            const Polynomial p = lower(*parse_expr(expand_expr));
            BasisExpansion e = expand_basis == "bernoulli"
                                   ? expand_bernoulli_basis(p)
                                   : expand_bernoulli_order_basis(p, expand_r);
            result.doc.format = detail::parse_format(expand_opts.format);
            result.doc.payload = detail::expansion_doc(result.doc.format, e,
                                                       expand_basis == "bernoulli-order");
        } else if (app.got_subcommand(pairing_cmd)) {
            const Polynomial p = lower(*parse_expr(pairing_expr));
            const Rational y = Rational::from_string(pairing_y);
            const PowerSeries f =
                detail::resolve_series(pairing_series, pairing_r, y, pairing_opts.trunc);
            const Rational value = pairing(f, p);
            std::optional<long> r;
            if (pairing_series == "bernoulli-order") r = pairing_r;
            std::optional<Rational> yopt;
            if (pairing_y_opt->count() > 0) yopt = y;
            result.doc.format = detail::parse_format(pairing_opts.format);
            result.doc.payload = detail::pairing_doc(result.doc.format, pairing_series, r, yopt,
                                                     pairing_expr, value);
        } else if (app.got_subcommand(verify_cmd)) {
            const IdentityReport report = verify_all(verify_max_n, verify_max_r, verify_opts.seed);
            result.doc.format = detail::parse_format(verify_opts.format);
            result.doc.payload = detail::report_doc(result.doc.format, report);
            result.status = report.all_pass() ? 0 : 1;
        }
        return result;
    } catch (const CLI::CallForHelp&) {
        result.doc.payload = app.help();
        result.status = 0;
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.doc.payload = app.help("", CLI::AppFormatMode::All);
        result.status = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.diagnostics = std::string("error: ") + e.what() + "\n";
        result.status = 2;
        return result;
    } catch (const parse_error& e) {
        result.diagnostics = std::string("error: ") + e.what() + "\n";
        if (!e.expected().empty()) {
            result.diagnostics += "  expected:";
            for (const auto& tok : e.expected()) result.diagnostics += " '" + tok + "'";
            result.diagnostics += "\n";
        }
        result.status = 2;
        return result;
    } catch (const error& e) {
        result.diagnostics = std::string("error: ") + e.what() + "\n";
        result.status = 2;
        return result;
    }
}

inline int run_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const RunResult result = run_command(args);
    if (!result.doc.payload.empty()) std::cout << result.doc.payload;
    if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
    return result.status;
}

}  // namespace umbra::cli
