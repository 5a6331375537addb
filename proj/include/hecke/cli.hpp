#pragma once

// Command-line front end: census, claims, growth, poly and verify.
// Exit codes: 0 success, 1 invariant or I/O failure, 2 usage error.

#include "hecke/census.hpp"
#include "hecke/ledger.hpp"
#include "hecke/serialize.hpp"
#include "hecke/spectral.hpp"
#include "hecke/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hecke {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
    std::string command;
    std::vector<int> p;
    std::optional<std::size_t> max_len;
    std::optional<int> r;
    std::size_t extend_to = 80;
    double tol = 1e-12;
    OutputFormat format = OutputFormat::Json;
    std::string out;  // empty: standard output
    unsigned threads = 1;
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Rejects inconsistent or out-of-range settings before any computation.
inline void validate(RunConfig& cfg) {
    auto need_len = [&](std::size_t dflt) {
        if (!cfg.max_len) cfg.max_len = dflt;
        if (*cfg.max_len < 2) throw usage_error("--max-len must be >= 2");
    };
    for (int p : cfg.p)
        if (p < 3) throw usage_error("--p values must be >= 3, got " + std::to_string(p));
    if (!(cfg.tol > 0) || cfg.tol >= 1) throw usage_error("--tol must lie in (0, 1)");
    if (cfg.format == OutputFormat::Text && cfg.command != "verify") throw usage_error(cfg.command + " writes json or csv");

    if (cfg.command == "census") {
        if (cfg.p.empty()) throw usage_error("census needs --p");
        if (!cfg.max_len) throw usage_error("census needs --max-len");
        need_len(0);
        if (cfg.format == OutputFormat::Csv && cfg.p.size() > 1) throw usage_error("CSV output takes a single --p");
    } else if (cfg.command == "claims") {
        if (cfg.p.empty()) throw usage_error("claims needs --p");
        need_len(20);
    } else if (cfg.command == "growth") {
        if (cfg.r) {
            if (*cfg.r < 2) throw usage_error("--r must be >= 2");
            if (cfg.p.empty()) cfg.p = {2 * *cfg.r};
            if (cfg.p.size() != 1 || cfg.p[0] != 2 * *cfg.r) throw usage_error("--r and --p disagree");
        }
        if (cfg.p.size() != 1) throw usage_error("growth needs exactly one --p (or --r)");
        need_len(24);
    } else if (cfg.command == "poly") {
        if (!cfg.r) throw usage_error("poly needs --r");
        if (*cfg.r < 2) throw usage_error("--r must be >= 2");
        if (!cfg.p.empty()) throw usage_error("poly takes --r, not --p");
    } else if (cfg.command == "verify") {
        need_len(24);
        if (cfg.format == OutputFormat::Csv) throw usage_error("verify writes text or json");
    } else {
        throw usage_error("unknown command \"" + cfg.command + "\"");
    }
    if (cfg.command == "claims" || cfg.command == "growth") {
        for (int p : cfg.p)
            if (p % 2 != 0 || p < 4) throw usage_error(cfg.command + " is defined for even p >= 4, got " + std::to_string(p));
        if (cfg.format == OutputFormat::Csv && cfg.p.size() > 1) throw usage_error("CSV output takes a single --p");
    }
    if (cfg.command == "growth" && cfg.extend_to < 2) throw usage_error("--extend-to must be >= 2");
}

struct ParseResult {
    std::optional<RunConfig> config;
    int exit = exit_code::ok;  // meaningful when config is empty (help or error)
};

inline ParseResult parse_args(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Census of reciprocal conjugacy classes in Z2 * Zp"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    RunConfig cfg;
    std::map<std::string, OutputFormat> const formats{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

    std::size_t max_len = 0;
    int r = 0;
    auto add_common = [&](CLI::App* sub, bool p_list, bool len, bool with_r) {
        if (p_list) sub->add_option("--p", cfg.p, "group orders p (one or more)")->expected(1, -1);
        if (len) sub->add_option("--max-len", max_len, "largest word length");
        if (with_r) sub->add_option("--r", r, "r = p/2");
        sub->add_option("--format", cfg.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", cfg.out, "output path (default: standard output)");
    };
    auto* census_cmd = app.add_subcommand("census", "count reciprocal classes by word length");
    add_common(census_cmd, true, true, false);
    census_cmd->add_option("--threads", cfg.threads, "worker threads, 0 = auto");

    auto* claims_cmd = app.add_subcommand("claims", "compare counting formulas with the census");
    add_common(claims_cmd, true, true, false);
    claims_cmd->add_option("--extend-to", cfg.extend_to, "recurrence extension index");
    claims_cmd->add_option("--tol", cfg.tol, "dominant root enclosure width");
    claims_cmd->add_option("--threads", cfg.threads, "worker threads, 0 = auto");

    auto* growth_cmd = app.add_subcommand("growth", "growth of census totals and the dominant root");
    add_common(growth_cmd, true, true, true);
    growth_cmd->add_option("--extend-to", cfg.extend_to, "recurrence extension index");
    growth_cmd->add_option("--tol", cfg.tol, "dominant root enclosure width");
    growth_cmd->add_option("--threads", cfg.threads, "worker threads, 0 = auto");

    auto* poly_cmd = app.add_subcommand("poly", "the growth polynomial for r");
    add_common(poly_cmd, false, false, true);
    poly_cmd->add_option("--tol", cfg.tol, "dominant root enclosure width");

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
    verify_cmd->add_option("--max-len", max_len, "census length for growth and determinism checks");
    std::map<std::string, OutputFormat> const verify_formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};
    verify_cmd->add_option("--format", cfg.format, "text or json")
        ->transform(CLI::CheckedTransformer(verify_formats, CLI::ignore_case));
    verify_cmd->add_option("--out", cfg.out, "output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? exit_code::ok : exit_code::usage};
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    auto given = [&](char const* name) {
        CLI::Option const* opt = app.get_subcommands().front()->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--max-len")) cfg.max_len = max_len;
    if (given("--r")) cfg.r = r;
    if (cfg.command == "verify" && !verify_cmd->count("--format")) cfg.format = OutputFormat::Text;
    try {
        validate(cfg);
    } catch (usage_error const& e) {
        err << "error: " << e.what() << '\n';
        return {std::nullopt, exit_code::usage};
    }
    return {cfg, exit_code::ok};
}

namespace detail {

inline int emit(RunConfig const& cfg, std::string const& text, std::ostream& out, std::ostream& err) {
    if (cfg.out.empty()) {
        out << text;
        out.flush();
        return out ? exit_code::ok : exit_code::failure;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << cfg.out << " for writing\n";
        return exit_code::failure;
    }
    f << text;
    f.close();
    if (!f) {
        err << "error: failed writing " << cfg.out << '\n';
        return exit_code::failure;
    }
    return exit_code::ok;
}

inline std::string run_census(RunConfig const& cfg) {
    std::vector<CensusTable> tables;
    for (int p : cfg.p) tables.push_back(census(make_params(p), *cfg.max_len, cfg.threads));
    std::ostringstream os;
    if (cfg.format == OutputFormat::Csv)
        write_csv(os, tables.front());
    else
        os << census_json(tables).dump(2) << '\n';
    return os.str();
}

inline std::string run_claims(RunConfig const& cfg) {
    ClaimLedger all;
    GrowthOptions opts;
    opts.tol = cfg.tol;
    for (int p : cfg.p) {
        GroupParams const params = make_params(p);
        auto const table = census(params, *cfg.max_len, cfg.threads);
        GrowthReport rep;
        try {
            rep = growth_report(table, cfg.extend_to, opts);
        } catch (std::domain_error const&) {
            // too few census terms for a growth trace; spectral claims only
            rep = spectral_report(params.half(), opts);
        }
        auto ledger = claims_check(params, table, rep);
        all.entries.insert(all.entries.end(), ledger.entries.begin(), ledger.entries.end());
    }
    std::ostringstream os;
    if (cfg.format == OutputFormat::Csv)
        write_csv(os, all);
    else
        os << to_json(all).dump(2) << '\n';
    return os.str();
}

inline std::string run_growth(RunConfig const& cfg) {
    GrowthOptions opts;
    opts.tol = cfg.tol;
    auto const table = census(make_params(cfg.p.front()), *cfg.max_len, cfg.threads);
    auto const rep = growth_report(table, cfg.extend_to, opts);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Csv)
        write_csv(os, rep);
    else
        os << to_json(rep).dump(2) << '\n';
    return os.str();
}

inline std::string run_poly(RunConfig const& cfg) {
    GrowthOptions opts;
    opts.tol = cfg.tol;
    auto const rep = spectral_report(*cfg.r, opts);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Csv)
        write_poly_csv(os, rep);
    else
        os << to_json(rep).dump(2) << '\n';
    return os.str();
}

}  // namespace detail

inline VerifyConfig verify_config(RunConfig const& cfg) {
    VerifyConfig v;
    if (cfg.max_len) v.census_len = *cfg.max_len;
#ifdef HECKE_SCHEMA_DIR
    v.schema_dir = HECKE_SCHEMA_DIR;
#endif
    return v;
}

/// Runs a validated configuration.
inline int run(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "verify") {
            bool const json = cfg.format == OutputFormat::Json;
            auto const results = run_acceptance(verify_config(cfg));
            bool all = true;
            std::ostringstream os;
            Json arr = Json::array();
            for (auto const& r : results) {
                all = all && r.pass;
                if (json)
                    arr.push_back(Json{{"criterion", r.number}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
                else
                    os << format_result(r) << '\n';
            }
            if (json)
                os << Json{{"criteria", arr}, {"pass", all}}.dump(2) << '\n';
            else
                os << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
            int const code = detail::emit(cfg, os.str(), out, err);
            if (code != exit_code::ok) return code;
            return all ? exit_code::ok : exit_code::failure;
        }
        std::string text;
        if (cfg.command == "census")
            text = detail::run_census(cfg);
        else if (cfg.command == "claims")
            text = detail::run_claims(cfg);
        else if (cfg.command == "growth")
            text = detail::run_growth(cfg);
        else if (cfg.command == "poly")
            text = detail::run_poly(cfg);
        else
            throw usage_error("unknown command \"" + cfg.command + "\"");
        return detail::emit(cfg, text, out, err);
    } catch (usage_error const& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (std::domain_error const& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
}

inline int main_entry(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    auto parsed = parse_args(argc, argv, out, err);
    if (!parsed.config) return parsed.exit;
    return run(*parsed.config, out, err);
}

}  // namespace hecke
