#pragma once

// The nine acceptance criteria, runnable from the CLI (`verify`) and from the
// acceptance test binary. Every tolerance and runtime budget is fixed here.

#include "hecke/census.hpp"
#include "hecke/counting.hpp"
#include "hecke/ledger.hpp"
#include "hecke/poly.hpp"
#include "hecke/reciprocal.hpp"
#include "hecke/serialize.hpp"
#include "hecke/spectral.hpp"
#include "hecke/words.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace hecke {

namespace tolerance {
inline constexpr double rho_fixture = 1e-9;
inline constexpr double cauchy = 1e-6;
inline constexpr double growth = 1e-6;
inline constexpr double root_enclosure = 1e-12;
inline constexpr double root_residual = 1e-10;
}  // namespace tolerance

struct VerifyConfig {
    std::size_t census_len = 24;    // criteria 6 and 8
    std::size_t claims_len = 20;    // criterion 7
    std::size_t classify_len = 16;  // criterion 3
    std::size_t normal_form_len = 14;
    std::size_t extend_to = 80;
    std::size_t random_words = 10000;
    std::string schema_dir;  // empty: schema check is reported as skipped
};

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;
};

// ---------------------------------------------------------------------------
// The subset of JSON Schema used by the shipped schemas: local $ref, type,
// enum, required, properties, additionalProperties (bool), items, minItems,
// minimum, pattern.

namespace detail {

inline bool json_type_is(nlohmann::ordered_json const& v, std::string const& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

inline void schema_validate(nlohmann::ordered_json const& v, nlohmann::ordered_json const& s,
                            nlohmann::ordered_json const& root, std::string const& path, std::vector<std::string>& errors) {
    if (errors.size() > 20) return;
    if (s.contains("$ref")) {
        std::string const ref = s["$ref"].get<std::string>();
        if (ref.rfind("#/", 0) != 0) {
            errors.push_back(path + ": unsupported $ref " + ref);
            return;
        }
        schema_validate(v, root.at(nlohmann::ordered_json::json_pointer(ref.substr(1))), root, path, errors);
        return;
    }
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (auto const& t : s["type"]) ok = ok || json_type_is(v, t.get<std::string>());
        } else {
            ok = json_type_is(v, s["type"].get<std::string>());
        }
        if (!ok) {
            errors.push_back(path + ": expected type " + s["type"].dump());
            return;
        }
    }
    if (s.contains("enum")) {
        bool found = false;
        for (auto const& e : s["enum"]) found = found || e == v;
        if (!found) errors.push_back(path + ": value " + v.dump() + " not in enum");
    }
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
        errors.push_back(path + ": \"" + v.get<std::string>() + "\" does not match " + s["pattern"].dump());
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
        errors.push_back(path + ": below minimum");
    if (v.is_object()) {
        if (s.contains("required"))
            for (auto const& k : s["required"])
                if (!v.contains(k.get<std::string>())) errors.push_back(path + ": missing key " + k.dump());
        bool const closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
        for (auto const& [k, sub] : v.items()) {
            if (s.contains("properties") && s["properties"].contains(k))
                schema_validate(sub, s["properties"][k], root, path + "." + k, errors);
            else if (closed)
                errors.push_back(path + ": unexpected key \"" + k + "\"");
        }
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) errors.push_back(path + ": too few items");
        if (s.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i)
                schema_validate(v[i], s["items"], root, path + "[" + std::to_string(i) + "]", errors);
    }
}

}  // namespace detail

/// Validation errors of `doc` against the schema file; empty means valid.
inline std::vector<std::string> validate_against_schema(nlohmann::ordered_json const& doc, std::string const& schema_path) {
    std::ifstream in(schema_path);
    if (!in) return {"cannot open schema " + schema_path};
    auto const schema = nlohmann::ordered_json::parse(in);
    std::vector<std::string> errors;
    detail::schema_validate(doc, schema, schema, "$", errors);
    return errors;
}

namespace detail {

struct Check {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, std::string const& what) {
        ++checks;
        if (!ok && failures.size() < 8) failures.push_back(what);
        if (!ok && failures.size() == 8) failures.push_back("...");
    }
    bool ok() const { return failures.empty(); }
    std::string summary(std::string const& extra = {}) const {
        std::string s = std::to_string(checks) + " checks";
        if (!extra.empty()) s += ", " + extra;
        for (auto const& f : failures) s += "; FAIL " + f;
        return s;
    }
};

inline Word random_word(GroupParams const& params, std::mt19937_64& rng, int max_syllables) {
    std::uniform_int_distribution<int> len(0, max_syllables);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> expo(-params.p, params.p);
    std::vector<Syllable> seq;
    int const n = len(rng);
    for (int i = 0; i < n; ++i) seq.push_back(kind(rng) == 0 ? Syllable::iota() : Syllable::gamma(expo(rng)));
    return reduce(params, seq);
}

// Naive enumerations used as independent references.
inline long long count_compositions(long long n, long long x, long long max_part) {
    if (n == 0) return x == 0 ? 1 : 0;
    long long total = 0;
    for (long long a = 1; a <= std::min(x, max_part); ++a) total += count_compositions(n - 1, x - a, max_part);
    return total;
}

inline long long count_signed_tuples(long long x, long long r) {
    // tuples with n >= 1, -r < k <= r, k != 0, sum (|k| + 1) = x
    long long total = 0;
    for (long long k = -(r - 1); k <= r; ++k) {
        if (k == 0) continue;
        long long const w = std::llabs(k) + 1;
        if (w == x) total += 1;
        if (w < x) total += count_signed_tuples(x - w, r);
    }
    return total;
}

}  // namespace detail

inline CriterionResult criterion_group_law(VerifyConfig const& cfg) {
    detail::Check ck;
    for (int p = 3; p <= 12; ++p) {
        GroupParams const params = make_params(p);
        std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(p));
        for (std::size_t i = 0; i < cfg.random_words; ++i) {
            Word const a = detail::random_word(params, rng, 10);
            Word const b = detail::random_word(params, rng, 10);
            Word const c = detail::random_word(params, rng, 10);
            std::string const tag = "p=" + std::to_string(p) + " a=" + format_word(a);
            ck.expect(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), "associativity " + tag);
            ck.expect(multiply(a, inverse(a)).is_identity() && multiply(inverse(a), a).is_identity(), "inverse " + tag);
            ck.expect(reduce(params, a.syllables()) == a, "reduction idempotence " + tag);
            Word const conj = multiply(multiply(b, a), inverse(b));
            ck.expect(class_key(conj) == class_key(a), "class key under conjugation " + tag);
            auto const red = cyclic_reduce(a);
            ck.expect(multiply(multiply(red.conjugator, red.word.to_word()), inverse(red.conjugator)) == a,
                      "cyclic reduction conjugator " + tag);
        }
    }
    return {1, "group-law property suite", ck.ok(), ck.summary(), 0, 10};
}

inline CriterionResult criterion_census_fixtures(VerifyConfig const&) {
    detail::Check ck;
    auto const t4 = census(make_params(4), 10);
    auto const t6 = census(make_params(6), 8);
    auto eq = [&](BigInt const& got, long long want, std::string const& what) {
        ck.expect(got == want, what + " = " + got.str() + ", want " + std::to_string(want));
    };
    eq(t4.row(3).reciprocal_total, 1, "p=4 total(3)");
    eq(t4.row(4).reciprocal_total, 1, "p=4 total(4)");
    eq(t4.row(7).reciprocal_total, 2, "p=4 total(7)");
    eq(t6.row(4).reciprocal_total, 2, "p=6 total(4)");
    eq(t6.row(6).reciprocal_total, 1, "p=6 total(6)");
    eq(t4.row(4).symmetric, 1, "p=4 symmetric(4)");
    eq(t6.row(6).symmetric, 1, "p=6 symmetric(6)");
    eq(t6.row(8).symmetric, 2, "p=6 symmetric(8)");
    eq(t4.row(10).p_reciprocal, 1, "p=4 p_reciprocal(10)");
    eq(t4.row(8).p_reciprocal, 0, "p=4 p_reciprocal(8)");
    return {2, "hand-verified census fixtures", ck.ok(), ck.summary(), 0, 5};
}

inline CriterionResult criterion_classification(VerifyConfig const& cfg) {
    detail::Check ck;
    std::size_t reciprocal = 0;
    for (int p : {4, 6}) {
        GroupParams const params = make_params(p);
        for (std::size_t len = 2; len <= cfg.classify_len; ++len) {
            for_each_class_of_length(params, len, [&](CyclicWord const& c) {
                ReciprocalInfo const info = classify(c, {.witnesses = false});
                if (!info.is_reciprocal) return;
                ++reciprocal;
                ReciprocatorTypes const second = witness_types(reciprocator_witnesses(c));
                ck.expect(second == info.reciprocator_types, "p=" + std::to_string(p) + " " + format_word(c));
            });
        }
    }
    return {3, "classification cross-validation", ck.ok(), ck.summary(std::to_string(reciprocal) + " reciprocal classes"), 0,
            30};
}

inline CriterionResult criterion_compositions(VerifyConfig const&) {
    detail::Check ck;
    for (long long x = 0; x <= 14; ++x) {
        for (long long n = 0; n <= x; ++n) {
            std::string const at = "(n=" + std::to_string(n) + ",x=" + std::to_string(x);
            ck.expect(compositions(n, x) == detail::count_compositions(n, x, x), "compositions" + at + ")");
            for (long long r = 1; r <= 5; ++r) {
                long long const brute = detail::count_compositions(n, x, r);
                ck.expect(bounded_compositions(n, r, x) == brute, "bounded_compositions" + at + ",r=" + std::to_string(r) + ")");
                ck.expect(bounded_compositions_ie(n, r, x) == brute, "inclusion-exclusion" + at + ",r=" + std::to_string(r) + ")");
            }
        }
    }
    for (long long r = 2; r <= 5; ++r)
        for (long long x = 2; x <= 14; ++x) {
            std::string const at = "(x=" + std::to_string(x) + ",r=" + std::to_string(r) + ")";
            BigInt const truth = signed_syllable_count(x, r);
            ck.expect(truth == detail::count_signed_tuples(x, r), "signed_syllable_count" + at);
            ck.expect(signed_tuple_sum(x, r, FormulaMode::Corrected) == truth, "corrected signed_tuple_sum" + at);
        }
    return {4, "composition layer", ck.ok(), ck.summary(), 0, 5};
}

inline CriterionResult criterion_spectral(VerifyConfig const&) {
    detail::Check ck;
    double const phi = 1.6180339887, trib = 1.8392867552;
    double const rho2 = dominant_root(build_growth_poly(2), tolerance::root_enclosure).value;
    double const rho3 = dominant_root(build_growth_poly(3), tolerance::root_enclosure).value;
    ck.expect(std::fabs(rho2 - phi) <= tolerance::rho_fixture, "rho(r=2) = " + detail::fmt_double(rho2));
    ck.expect(std::fabs(rho3 - trib) <= tolerance::rho_fixture, "rho(r=3) = " + detail::fmt_double(rho3));
    for (int r = 2; r <= 10; ++r) {
        IntPoly const p = build_growth_poly(r);
        std::string const at = " at r=" + std::to_string(r);
        ck.expect(p.eval(BigInt(2)) == 3, "p(2) = 3" + at);
        ck.expect(eval_at_sqrt2(p).sign() < 0, "p(sqrt2) < 0" + at);
        ck.expect(squarefree_multiplicity(p).s == 1, "s = 1" + at);
        if (r <= 6) {
            double const rho = dominant_root(p, tolerance::root_enclosure).value;
            double maxmod = 0;
            for (auto const& z : all_roots(p, tolerance::root_residual)) maxmod = std::max(maxmod, std::abs(z));
            ck.expect(maxmod <= rho + tolerance::cauchy, "max |root| <= rho" + at);
        }
    }
    return {5, "spectral", ck.ok(), ck.summary(), 0, 5};
}

inline CriterionResult criterion_growth(VerifyConfig const& cfg) {
    detail::Check ck;
    std::string detail;
    for (int p : {6, 4}) {
        GrowthOptions opts;
        opts.converge_tol = tolerance::growth;
        auto const rep = growth_report(census(make_params(p), cfg.census_len), cfg.extend_to, opts);
        for (auto const& f : rep.families) {
            double const err = std::fabs(f.trace.ratios.back().ratio - rep.rho.value);
            ck.expect(err < tolerance::growth, "p=" + std::to_string(p) + " " + f.family + " family error " + detail::fmt_double(err));
            detail += (detail.empty() ? "" : ", ") + ("p=" + std::to_string(p) + " " + f.family + " |ratio-rho|=" + detail::fmt_double(err));
        }
        ck.expect(rep.families.size() == (p == 4 ? 2u : 1u), "family count for p=" + std::to_string(p));
    }
    return {6, "growth convergence", ck.ok(), ck.summary(detail), 0, 5};
}

inline CriterionResult criterion_ledger(VerifyConfig const& cfg) {
    detail::Check ck;
    auto ledger_for = [&](int p) {
        GroupParams const params = make_params(p);
        auto const table = census(params, cfg.claims_len);
        auto const rep = growth_report(table, cfg.extend_to);
        return std::pair{table, claims_check(params, table, rep)};
    };
    auto const [t6, l6] = ledger_for(6);
    auto const [t4, l4] = ledger_for(4);

    std::set<std::string> const want6 = {"L2.6", "L3.2", "L3.3", "L3.4", "L3.5", "P3.6", "L4.1.1", "L4.1.2", "L4.1.3",
                                         "L4.1.3-probe", "PARITY", "MA-5.3.2", "L4.6-bracket", "L4.6-interval",
                                         "L4.6-cauchy", "S4.2-squarefree", "EISEN", "THM-MAIN"};
    std::set<std::string> want4 = want6;
    want4.erase("PARITY");
    want4.insert({"L4.7.1", "L4.7.2", "L4.7.3"});
    using Case = std::tuple<ClaimLedger const*, std::set<std::string> const*, int>;
    for (auto const& [ledger, want, p] : {Case{&l6, &want6, 6}, Case{&l4, &want4, 4}}) {
        auto const got = ledger->ids();
        for (auto const& id : *want) ck.expect(got.count(id) == 1, "p=" + std::to_string(p) + " ledger lacks " + id);
        std::set<std::string> keys;
        for (auto const& e : ledger->entries)
            ck.expect(keys.insert(e.id + e.params.dump()).second, "duplicate entry " + e.id + " " + e.params.dump());
    }

    auto entry_is = [&](ClaimLedger const& l, std::string const& id, nlohmann::ordered_json const& match, BigInt const& census_value,
                        std::string const& expected) {
        ClaimEntry const* e = l.find(id, match);
        ck.expect(e != nullptr, "missing " + id + " " + match.dump());
        if (!e) return;
        ck.expect(e->observed == census_value.str(), id + " observed " + e->observed + " vs census " + census_value.str());
        ck.expect(e->expected == expected, id + " expected " + e->expected + ", formula gives " + expected);
        ck.expect(e->status == (e->expected == e->observed ? ClaimStatus::Pass : ClaimStatus::Mismatch), id + " status");
    };
    entry_is(l4, "L2.6", {{"x", 3}, {"r", 2}, {"mode", "verbatim"}}, signed_syllable_count(3, 2),
             to_decimal(Rational(signed_tuple_sum(3, 2, FormulaMode::Verbatim))));
    entry_is(l6, "L4.1.1", {{"p", 6}, {"l", 2}}, t6.row(4).reciprocal_total, to_decimal(*total_count_even(2, make_params(6))));
    entry_is(l4, "L4.7.1", {{"p", 4}, {"l", 4}}, t4.row(7).reciprocal_total, to_decimal(*total_count_odd(4, make_params(4))));
    ClaimEntry const* l411 = l6.find("L4.1.1", {{"l", 2}});
    ck.expect(l411 && l411->status == ClaimStatus::Mismatch, "L4.1.1(p=6,l=2) is a MISMATCH");

    // Schema and byte stability.
    Json const doc = to_json(l6);
    std::string extra = std::to_string(l6.entries.size()) + "+" + std::to_string(l4.entries.size()) + " entries";
    if (cfg.schema_dir.empty()) {
        extra += ", schema check skipped (no schema dir)";
    } else {
        for (auto const& err : validate_against_schema(doc, cfg.schema_dir + "/ledger.schema.json")) ck.expect(false, err);
        for (auto const& err : validate_against_schema(to_json(l4), cfg.schema_dir + "/ledger.schema.json")) ck.expect(false, err);
    }
    ck.expect(to_json(ledger_for(6).second).dump(2) == doc.dump(2), "ledger output differs between runs");
    return {7, "claims ledger completeness and stability", ck.ok(), ck.summary(extra), 0, 120};
}

inline CriterionResult criterion_determinism(VerifyConfig const& cfg) {
    detail::Check ck;
    GroupParams const params = make_params(6);
    auto const t0 = std::chrono::steady_clock::now();
    auto const base = census(params, cfg.census_len, 1);
    double const single = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ck.expect(single < 60, "single-threaded census took " + detail::fmt_double(single) + " s");
    std::ostringstream ref;
    ref << census_json(std::span(&base, 1)).dump(2) << '\n';
    write_csv(ref, base);
    for (unsigned threads : {2u, 8u}) {
        auto const t = census(params, cfg.census_len, threads);
        std::ostringstream out;
        out << census_json(std::span(&t, 1)).dump(2) << '\n';
        write_csv(out, t);
        ck.expect(out.str() == ref.str(), "output with " + std::to_string(threads) + " threads differs");
    }
    return {8, "performance and determinism", ck.ok(),
            ck.summary("single-threaded p=6 len<=" + std::to_string(cfg.census_len) + " in " + detail::fmt_double(single) + " s"),
            0, 60 * 3};
}

inline CriterionResult criterion_normal_forms(VerifyConfig const& cfg) {
    detail::Check ck;
    std::size_t emitted = 0, findings = 0;
    for (int p : {4, 6}) {
        GroupParams const params = make_params(p);
        for (std::size_t len = 2; len <= cfg.normal_form_len; ++len) {
            for (auto const& c : normal_form_generate(params, static_cast<int>(len))) {
                ++emitted;
                ck.expect(is_reciprocal(c), "p=" + std::to_string(p) + " normal form " + format_word(c) + " is not reciprocal");
            }
        }
        auto const table = census(params, cfg.normal_form_len);
        auto const ledger = claims_check(params, table, spectral_report(params.half()));
        for (std::size_t len = 2; len <= cfg.normal_form_len; ++len) {
            ClaimEntry const* e = ledger.find("L3.2", {{"word_length", len}, {"check", "completeness"}});
            ck.expect(e != nullptr, "no completeness entry at length " + std::to_string(len));
            if (e && e->status != ClaimStatus::Pass) ++findings;
        }
    }
    return {9, "normal-form soundness", ck.ok(),
            ck.summary(std::to_string(emitted) + " normal forms, " + std::to_string(findings) + " completeness findings"), 0, 30};
}

inline std::vector<CriterionResult> run_acceptance(VerifyConfig const& cfg,
                                                   std::function<void(CriterionResult const&)> const& on_result = {}) {
    using Fn = CriterionResult (*)(VerifyConfig const&);
    Fn const all[] = {criterion_group_law,   criterion_census_fixtures, criterion_classification,
                      criterion_compositions, criterion_spectral,       criterion_growth,
                      criterion_ledger,       criterion_determinism,    criterion_normal_forms};
    std::vector<CriterionResult> out;
    int number = 0;
    for (Fn fn : all) {
        ++number;
        auto const t0 = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = fn(cfg);
        } catch (std::exception const& e) {
            res = {number, "criterion " + std::to_string(number), false, std::string("exception: ") + e.what(), 0, 0};
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (res.budget > 0 && res.seconds > res.budget) {
            res.pass = false;
            res.detail += "; over budget " + detail::fmt_double(res.budget) + " s";
        }
        if (on_result) on_result(res);
        out.push_back(std::move(res));
    }
    return out;
}

inline std::string format_result(CriterionResult const& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.number) + "] " + r.title + " (" + secs + "): " + r.detail;
}

}  // namespace hecke
