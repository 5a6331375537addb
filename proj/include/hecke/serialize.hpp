#pragma once

// JSON and CSV forms of census tables, ledgers and growth reports. Counts are
// written as decimal strings; key order is fixed.

#include "hecke/census.hpp"
#include "hecke/ledger.hpp"
#include "hecke/spectral.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace hecke {

using Json = nlohmann::ordered_json;

inline Json to_json(CensusRow const& row) {
    return Json{{"len", row.length},
                {"symmetric", to_decimal(row.symmetric)},
                {"p_reciprocal", to_decimal(row.p_reciprocal)},
                {"symmetric_p", to_decimal(row.symmetric_p)},
                {"power", to_decimal(row.power)},
                {"reciprocal_total", to_decimal(row.reciprocal_total)},
                {"all_classes", to_decimal(row.all_classes)}};
}

inline Json to_json(CensusTable const& t) {
    Json rows = Json::array();
    for (auto const& row : t.rows) rows.push_back(to_json(row));
    return Json{{"p", t.params.p}, {"max_len", t.max_len}, {"rows", std::move(rows)}};
}

inline Json census_json(std::span<const CensusTable> tables) {
    Json arr = Json::array();
    for (auto const& t : tables) arr.push_back(to_json(t));
    return Json{{"tables", std::move(arr)}};
}

inline Json to_json(ClaimLedger const& ledger) {
    Json arr = Json::array();
    for (auto const& e : ledger.entries)
        arr.push_back(Json{{"id", e.id},
                           {"params", e.params},
                           {"expected", e.expected},
                           {"observed", e.observed},
                           {"status", to_string(e.status)},
                           {"paper_ref", e.paper_ref}});
    return Json{{"claims", std::move(arr)}};
}

inline Json to_json(GrowthTrace const& g) {
    Json ratios = Json::array();
    for (auto const& pt : g.ratios) ratios.push_back(Json{{"l", pt.index}, {"ratio", pt.ratio}});
    return Json{{"base", g.base},
                {"ratio_trace", std::move(ratios)},
                {"normalized_trace", g.normalized},
                {"normalized_max", g.normalized_max},
                {"final_error", g.final_error},
                {"converged", g.converged}};
}

inline Json to_json(EisensteinReport const& e) {
    Json shifted = Json::array();
    for (auto const& c : e.shifted.coefficients()) shifted.push_back(to_decimal(c));
    Json j{{"prime", to_decimal(e.prime)},
           {"shift", to_decimal(e.shift)},
           {"shifted_coefficients", std::move(shifted)},
           {"status", e.satisfied ? "satisfied" : "not_satisfied"}};
    if (!e.satisfied) {
        j["violating_degree"] = *e.violating_degree;
        j["violating_coefficient"] = to_decimal(e.violating_coefficient);
        j["reason"] = e.reason;
    }
    return j;
}

/// Polynomial part of a growth report; families are added when present.
inline Json to_json(GrowthReport const& g) {
    Json coeffs = Json::array();
    for (auto const& c : g.poly.coefficients()) coeffs.push_back(to_decimal(c));
    Json roots = Json::array();
    for (auto const& z : g.roots) roots.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    Json j{{"r", g.r},
           {"polynomial", Json{{"coefficients", std::move(coeffs)}, {"text", format_poly(g.poly)}}},
           {"rho", g.rho.value},
           {"rho_enclosure", Json{{"lo", to_decimal(g.rho.lo)}, {"hi", to_decimal(g.rho.hi)}}},
           {"roots", std::move(roots)},
           {"cauchy_bound", g.cauchy},
           {"s", g.multiplicity.s},
           {"squarefree", g.multiplicity.squarefree},
           {"eisenstein_at_2", to_json(g.eisenstein)}};
    if (!g.families.empty()) {
        Json fams = Json::array();
        for (auto const& f : g.families) {
            Json terms = Json::array();
            for (auto const& t : f.terms) terms.push_back(to_decimal(t));
            Json fj{{"family", f.family}, {"seed_terms", f.seed_terms}, {"terms", std::move(terms)}};
            fj.update(to_json(f.trace));
            fams.push_back(std::move(fj));
        }
        j["families"] = std::move(fams);
    }
    return j;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& os, CensusTable const& t) {
    os << "len,symmetric,p_reciprocal,symmetric_p,power,reciprocal_total,all_classes\n";
    for (auto const& r : t.rows)
        os << r.length << ',' << r.symmetric << ',' << r.p_reciprocal << ',' << r.symmetric_p << ',' << r.power << ','
           << r.reciprocal_total << ',' << r.all_classes << '\n';
}

inline void write_csv(std::ostream& os, ClaimLedger const& ledger) {
    os << "id,params,expected,observed,status,paper_ref\n";
    for (auto const& e : ledger.entries)
        os << csv_field(e.id) << ',' << csv_field(e.params.dump()) << ',' << csv_field(e.expected) << ','
           << csv_field(e.observed) << ',' << to_string(e.status) << ',' << csv_field(e.paper_ref) << '\n';
}

/// One row per term of each growth family.
inline void write_csv(std::ostream& os, GrowthReport const& g) {
    os << "family,l,term,ratio\n";
    auto num = [](double v) { return Json(v).dump(); };
    for (auto const& f : g.families) {
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            std::size_t const l = i + 1;
            os << f.family << ',' << l << ',' << f.terms[i] << ',';
            for (auto const& pt : f.trace.ratios)
                if (pt.index == l) os << num(pt.ratio);
            os << '\n';
        }
    }
}

/// Key/value rows for the polynomial report.
inline void write_poly_csv(std::ostream& os, GrowthReport const& g) {
    auto num = [](double v) { return Json(v).dump(); };
    os << "key,value\n";
    os << "r," << g.r << '\n';
    for (int i = 0; i <= g.poly.degree(); ++i) os << "coefficient_" << i << ',' << g.poly.coefficient(i) << '\n';
    os << "rho," << num(g.rho.value) << '\n';
    os << "rho_lo," << to_decimal(g.rho.lo) << '\n';
    os << "rho_hi," << to_decimal(g.rho.hi) << '\n';
    for (std::size_t i = 0; i < g.roots.size(); ++i)
        os << "root_" << i << ',' << num(g.roots[i].real()) << (g.roots[i].imag() < 0 ? "" : "+")
           << num(g.roots[i].imag()) << "i\n";
    os << "cauchy_bound," << num(g.cauchy) << '\n';
    os << "s," << g.multiplicity.s << '\n';
    os << "squarefree," << (g.multiplicity.squarefree ? "true" : "false") << '\n';
    os << "eisenstein_at_2," << (g.eisenstein.satisfied ? "satisfied" : "not_satisfied") << '\n';
    if (!g.eisenstein.satisfied) {
        os << "eisenstein_violating_degree," << *g.eisenstein.violating_degree << '\n';
        os << "eisenstein_violating_coefficient," << g.eisenstein.violating_coefficient << '\n';
    }
}

}  // namespace hecke
