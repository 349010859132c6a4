#ifndef CYCLO_CLI_HPP
#define CYCLO_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounds.hpp"
#include "chi_map.hpp"
#include "dense_oracle.hpp"
#include "search.hpp"
#include "ternary_height.hpp"

namespace cyclo::cli {

enum class Format { text, csv, json };

struct CliConfig {
    Format format = Format::text;
    int verbosity = 0;
    bool oracle = false;
    // positional arguments, meaning depends on the subcommand
    i64 n = 0, p = 0, q = 0, r = 0, i = 0;
    std::optional<i64> coeff;
    bool vector = false;
    i64 q_max = 100;
    i64 cap = default_prime_search_cap;
    int jobs = 1;
    std::string checkpoint;
    bool no_prune = false;
    i64 limit = -1;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_compute = 2;

// Environment variable naming a directory for search checkpoints when
// --checkpoint is not given.
inline constexpr const char* checkpoint_dir_env = "CYCLO_CHECKPOINT_DIR";

namespace detail {

inline void print_coeffs(std::ostream& out, Format f, const std::string& key, i64 id, const CoefficientVector& v)
{
    switch (f) {
    case Format::text:
        for (i64 c : v.coeffs())
            out << c << '\n';
        break;
    case Format::csv:
        out << "exponent,coefficient\n";
        for (std::size_t k = 0; k < v.size(); ++k)
            out << k << ',' << v.coeffs()[k] << '\n';
        break;
    case Format::json:
        out << nlohmann::json{{key, id}, {"coefficients", v.coeffs()}}.dump() << '\n';
        break;
    }
}

inline void print_scalar(std::ostream& out, Format f, const std::vector<std::pair<std::string, i64>>& keys,
                         const std::string& name, i64 value)
{
    switch (f) {
    case Format::text:
        out << value << '\n';
        break;
    case Format::csv:
        for (const auto& [k, v] : keys)
            out << k << ',';
        out << name << '\n';
        for (const auto& [k, v] : keys)
            out << v << ',';
        out << value << '\n';
        break;
    case Format::json: {
        nlohmann::json j;
        for (const auto& [k, v] : keys)
            j[k] = v;
        j[name] = value;
        out << j.dump() << '\n';
        break;
    }
    }
}

inline int cmd_height(const CliConfig& c, std::ostream& out, std::ostream& err)
{
    if (c.n < 1)
        throw InvalidArgument("height: N must be positive");
    const RadicalReduction red = reduce_radical(c.n);
    i64 h = 1;
    if (c.oracle) {
        h = height_oracle(c.n);
    } else if (red.odd_prime_count == 3) {
        const auto f = distinct_prime_factors(red.core);
        h = height_fast(make_triple(f[0], f[1], f[2]));
    } else if (red.odd_prime_count >= 4) {
        err << "warning: Phi_" << red.core << " has order " << red.odd_prime_count
            << "; computing the dense polynomial (" << euler_phi(red.core) + 1 << " coefficients)\n";
        h = height_oracle(red.core);
    }
    print_scalar(out, c.format, {{"n", c.n}}, "height", h);
    return exit_ok;
}

inline int cmd_ternary(const CliConfig& c, std::ostream& out)
{
    const TripleParams t = make_triple(c.p, c.q, c.r);
    if (c.coeff) {
        print_scalar(out, c.format, {{"p", c.p}, {"q", c.q}, {"r", c.r}, {"i", *c.coeff}}, "coefficient",
                     ternary_coeff(t, *c.coeff));
    } else if (c.vector) {
        print_coeffs(out, c.format, "n", t.n(), ternary_vector(t));
    } else {
        print_scalar(out, c.format, {{"p", c.p}, {"q", c.q}, {"r", c.r}}, "height", height_fast(t));
    }
    return exit_ok;
}

inline int cmd_bounds(const CliConfig& c, std::ostream& out)
{
    const TripleParams t = make_triple(c.p, c.q, c.r);
    const BoundCertificate cert = bound_certificate(t);
    const BzdegaParams bz = bzdega_params(t);
    switch (c.format) {
    case Format::text:
        out << "triple " << t.p << ' ' << t.q << ' ' << t.r << '\n';
        out << "alpha " << bz.alpha << " beta " << bz.beta << " beta_star " << bz.beta_star << '\n';
        for (const auto& e : cert.entries) {
            out << std::left << std::setw(12) << rule_name(e.rule) << ' ' << std::setw(6) << e.value << ' '
                << (e.applicable ? "applicable" : "n/a");
            if (e.applicable && e.rule == cert.best_rule)
                out << " best";
            out << '\n';
        }
        out << "best " << cert.best << " (" << rule_name(cert.best_rule) << ")\n";
        out << "beiter_ref " << cert.beiter_ref << " (conjectural)\n";
        out << "corrected_ref " << cert.corrected_ref << " (conjectural)\n";
        break;
    case Format::csv:
        out << "rule,value,applicable,best\n";
        for (const auto& e : cert.entries)
            out << rule_name(e.rule) << ',' << e.value << ',' << (e.applicable ? 1 : 0) << ','
                << (e.applicable && e.rule == cert.best_rule ? 1 : 0) << '\n';
        break;
    case Format::json: {
        nlohmann::json j;
        j["triple"] = {t.p, t.q, t.r};
        j["alpha"] = bz.alpha;
        j["beta"] = bz.beta;
        j["beta_star"] = bz.beta_star;
        j["best"] = cert.best;
        j["best_rule"] = std::string(rule_name(cert.best_rule));
        j["beiter_ref"] = cert.beiter_ref;
        j["corrected_ref"] = cert.corrected_ref;
        for (const auto& e : cert.entries)
            j["rules"].push_back(
                {{"rule", std::string(rule_name(e.rule))}, {"value", e.value}, {"applicable", e.applicable}});
        out << j.dump() << '\n';
        break;
    }
    }
    return exit_ok;
}

inline SearchReport run_search(const CliConfig& c, std::ostream& err)
{
    SearchOptions opts;
    opts.cap = c.cap;
    opts.prune = !c.no_prune;
    opts.workers = c.jobs;
    opts.task_limit = c.limit;
    opts.log = &err;
    opts.checkpoint_path = c.checkpoint;
    if (opts.checkpoint_path.empty())
        if (const char* dir = std::getenv(checkpoint_dir_env); dir && *dir)
            opts.checkpoint_path = (std::filesystem::path(dir) / ("search_p" + std::to_string(c.p) + ".jsonl")).string();
    if (c.verbosity > 0 && !opts.checkpoint_path.empty())
        err << "checkpoint " << opts.checkpoint_path << '\n';
    return search_mp(c.p, c.q_max, opts);
}

inline void print_report(const SearchReport& rep, Format f, std::ostream& out)
{
    switch (f) {
    case Format::text: out << report_text(rep); break;
    case Format::csv: out << report_csv(rep); break;
    case Format::json: out << report_json(rep).dump() << '\n'; break;
    }
}

inline int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err)
{
    const SearchReport rep = run_search(c, err);
    const Verdict v = verify_conjectures(rep);
    auto triples = [](const std::vector<std::pair<Triple, i64>>& xs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& [t, h] : xs)
            a.push_back({{"triple", t}, {"height", h}});
        return a;
    };
    switch (c.format) {
    case Format::text:
        out << report_text(rep);
        out << "beiter_ref " << v.beiter_ref << " violations " << v.beiter_violations.size() << '\n';
        for (const auto& [t, h] : v.beiter_violations)
            out << "beiter_violation " << t[0] << ' ' << t[1] << ' ' << t[2] << " height " << h << '\n';
        out << "corrected_ref " << v.corrected_ref << " violations " << v.corrected_violations.size() << '\n';
        for (const auto& [t, h] : v.corrected_violations)
            out << "corrected_violation " << t[0] << ' ' << t[1] << ' ' << t[2] << " height " << h << '\n';
        break;
    case Format::csv:
        out << "conjecture,reference,p,q,r,height\n";
        for (const auto& [t, h] : v.beiter_violations)
            out << "beiter," << v.beiter_ref << ',' << t[0] << ',' << t[1] << ',' << t[2] << ',' << h << '\n';
        for (const auto& [t, h] : v.corrected_violations)
            out << "corrected," << v.corrected_ref << ',' << t[0] << ',' << t[1] << ',' << t[2] << ',' << h << '\n';
        break;
    case Format::json: {
        nlohmann::json j = report_json(rep);
        j["verdict"] = {{"beiter_ref", v.beiter_ref},
                        {"corrected_ref", v.corrected_ref},
                        {"beiter_violations", triples(v.beiter_violations)},
                        {"corrected_violations", triples(v.corrected_violations)}};
        out << j.dump() << '\n';
        break;
    }
    }
    return exit_ok;
}

inline void add_search_flags(CLI::App* sub, CliConfig& c)
{
    sub->add_option("P", c.p, "Smallest prime p")->required();
    sub->add_option("--qmax", c.q_max, "Largest q to sweep")->capture_default_str();
    sub->add_option("--cap", c.cap, "Upper limit for representative primes r")->capture_default_str();
    sub->add_option("--jobs,-j", c.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--checkpoint", c.checkpoint, "Append-only checkpoint file (resumed if present)");
    sub->add_flag("--no-prune", c.no_prune, "Compute every class, never prune by bound");
    sub->add_option("--limit", c.limit, "Stop after this many new tasks")->group("");
}

} // namespace detail

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 usage error, 2 computation error.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CliConfig c;
    CLI::App app{"Cyclotomic polynomial coefficients and ternary heights A(pqr)", "cyclo"};
    app.require_subcommand(1);
    std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format,-f", c.format, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_flag("-v,--verbose", c.verbosity, "Verbose diagnostics on stderr");

    auto* phi = app.add_subcommand("phi", "Dense coefficients of Phi_N");
    phi->add_option("N", c.n)->required();

    auto* height = app.add_subcommand("height", "Height A(N)");
    height->add_option("N", c.n)->required();
    height->add_flag("--oracle", c.oracle, "Force the dense-polynomial computation");

    auto* ternary = app.add_subcommand("ternary", "Coefficients of Phi_pqr for odd primes p < q < r");
    ternary->add_option("P", c.p)->required();
    ternary->add_option("Q", c.q)->required();
    ternary->add_option("R", c.r)->required();
    auto* coeff_opt = ternary->add_option("--coeff", c.coeff, "Single coefficient c_I");
    auto* vec_opt = ternary->add_flag("--vector", c.vector, "Full coefficient vector");
    coeff_opt->excludes(vec_opt);

    auto* chi_cmd = app.add_subcommand("chi", "Window indicator chi_N(I) for primes P < Q");
    chi_cmd->add_option("P", c.p)->required();
    chi_cmd->add_option("Q", c.q)->required();
    chi_cmd->add_option("N", c.n)->required();
    chi_cmd->add_option("I", c.i)->required();

    auto* bounds = app.add_subcommand("bounds", "Upper-bound certificate for A(pqr)");
    bounds->add_option("P", c.p)->required();
    bounds->add_option("Q", c.q)->required();
    bounds->add_option("R", c.r)->required();

    auto* search = app.add_subcommand("search", "Sweep residue classes for the largest A(pqr) with fixed p");
    detail::add_search_flags(search, c);
    auto* verify = app.add_subcommand("verify", "Sweep and report Beiter / corrected Beiter violations");
    detail::add_search_flags(verify, c);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        if (phi->parsed()) {
            detail::print_coeffs(out, c.format, "n", c.n, phi_dense(c.n));
        } else if (height->parsed()) {
            return detail::cmd_height(c, out, err);
        } else if (ternary->parsed()) {
            return detail::cmd_ternary(c, out);
        } else if (chi_cmd->parsed()) {
            const ChiContext ctx = make_chi_context(c.p, c.q);
            detail::print_scalar(out, c.format, {{"p", c.p}, {"q", c.q}, {"n", c.n}, {"i", c.i}}, "chi",
                                 chi(ctx, c.n, c.i));
        } else if (bounds->parsed()) {
            return detail::cmd_bounds(c, out);
        } else if (search->parsed()) {
            detail::print_report(detail::run_search(c, err), c.format, out);
        } else if (verify->parsed()) {
            return detail::cmd_verify(c, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.computational() ? exit_compute : exit_usage;
    }
    return exit_ok;
}

} // namespace cyclo::cli

#endif
