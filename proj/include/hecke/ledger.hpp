#pragma once

// Claims ledger: each counting formula and spectral statement evaluated at
// every applicable parameter point and compared with the census and the
// exact polynomial computations.

#include "hecke/bigint.hpp"
#include "hecke/census.hpp"
#include "hecke/counting.hpp"
#include "hecke/poly.hpp"
#include "hecke/reciprocal.hpp"
#include "hecke/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

namespace hecke {

enum class ClaimStatus { Pass, Mismatch, NotApplicable };

inline char const* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "PASS";
        case ClaimStatus::Mismatch: return "MISMATCH";
        case ClaimStatus::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

struct ClaimEntry {
    std::string id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::string expected;
    std::string observed;
    ClaimStatus status = ClaimStatus::NotApplicable;
    std::string paper_ref;
};

struct ClaimLedger {
    std::vector<ClaimEntry> entries;

    std::size_t count(ClaimStatus s) const {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [s](ClaimEntry const& e) { return e.status == s; }));
    }
    std::set<std::string> ids() const {
        std::set<std::string> out;
        for (auto const& e : entries) out.insert(e.id);
        return out;
    }
    /// First entry with this id whose params contain every key/value of `match`.
    ClaimEntry const* find(std::string const& id, nlohmann::ordered_json const& match) const {
        for (auto const& e : entries) {
            if (e.id != id) continue;
            bool ok = true;
            for (auto const& [k, v] : match.items()) ok = ok && e.params.contains(k) && e.params[k] == v;
            if (ok) return &e;
        }
        return nullptr;
    }
};

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string blocks_text(CyclicWord const& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.blocks().size(); ++i) s += (i ? "," : "") + std::to_string(c.blocks()[i]);
    return s + ")";
}

// Distinct block rotations of the form (a, rev-neg a).
inline std::size_t palindromic_rotations(CyclicWord const& c) {
    auto const b = c.blocks();
    std::size_t const n = b.size();
    if (n % 2 != 0) return 0;
    std::size_t const d = rotation_period(b);
    std::size_t count = 0;
    for (std::size_t t = 0; t < d; ++t) {
        bool ok = true;
        for (std::size_t i = 0; i < n / 2 && ok; ++i)
            ok = b[(t + n / 2 + i) % n] == canonical_exponent(-static_cast<long long>(b[(t + n / 2 - 1 - i) % n]), c.params());
        if (ok) ++count;
    }
    return count;
}

class LedgerBuilder {
public:
    LedgerBuilder(ClaimLedger& ledger, int p) : ledger_(ledger), p_(p) {}

    void exact(std::string id, nlohmann::ordered_json params, Rational const& expected, BigInt const& observed,
               std::string ref) {
        ClaimStatus const st = expected == Rational(observed) ? ClaimStatus::Pass : ClaimStatus::Mismatch;
        add(std::move(id), std::move(params), to_decimal(expected), to_decimal(observed), st, std::move(ref));
    }
    void add(std::string id, nlohmann::ordered_json params, std::string expected, std::string observed,
             ClaimStatus status, std::string ref) {
        if (!params.contains("p")) {
            nlohmann::ordered_json with_p = {{"p", p_}};
            with_p.update(params);
            params = std::move(with_p);
        }
        ledger_.entries.push_back(
            {std::move(id), std::move(params), std::move(expected), std::move(observed), status, std::move(ref)});
    }

private:
    ClaimLedger& ledger_;
    int p_;
};

}  // namespace detail

/// Ledger for even p. `spectral` must be built for r = p/2 (growth families
/// are optional; THM-MAIN entries appear for each family present).
inline ClaimLedger claims_check(GroupParams const& params, CensusTable const& table, GrowthReport const& spectral) {
    using nlohmann::ordered_json;
    if (!params.even()) throw std::domain_error("claims are stated for even p only");
    if (!(table.params == params)) throw std::domain_error("census table was computed for another p");
    long long const r = params.half();
    long long const u = *params.u;
    if (spectral.r != r) throw std::domain_error("spectral report was computed for another r");
    long long const max_len = static_cast<long long>(table.max_len);
    int const p = params.p;

    ClaimLedger ledger;
    detail::LedgerBuilder b(ledger, p);
    auto N = [&](long long len) { return table.total(len); };
    constexpr FormulaMode modes[] = {FormulaMode::Verbatim, FormulaMode::Corrected};

    // Signed syllable tuples.
    for (long long x = 2; x <= max_len; ++x)
        for (auto m : modes)
            b.exact("L2.6", {{"x", x}, {"r", r}, {"mode", to_string(m)}}, Rational(signed_tuple_sum(x, r, m)),
                    signed_syllable_count(x, r), "tuples (n; k1..kn) with n + sum|ki| = x");

    // Category counts at even length 2l.
    for (long long l = 2; 2 * l <= max_len; ++l)
        for (auto m : modes)
            b.exact("L3.3", {{"p", p}, {"l", l}, {"mode", to_string(m)}}, symmetric_count(l, params, m),
                    table.row(static_cast<std::size_t>(2 * l)).symmetric, "symmetric classes of length 2l");
    for (long long l = 2; 2 * l <= max_len; ++l)
        for (auto m : modes)
            b.exact("L3.4", {{"p", p}, {"l", l}, {"mode", to_string(m)}}, p_reciprocal_count(l, params, m),
                    table.row(static_cast<std::size_t>(2 * l)).p_reciprocal, "p-reciprocal classes of length 2l");
    for (long long L = 2; L <= max_len; ++L) {
        auto const& row = table.row(static_cast<std::size_t>(L));
        for (auto m : modes) {
            if (auto v = symmetric_p_nonpower_count(L, params, m))
                b.exact("L3.5", {{"p", p}, {"word_length", L}, {"mode", to_string(m)}}, *v,
                        BigInt(row.symmetric_p - row.power), "symmetric p-reciprocal classes, powers of i g~ excluded");
        }
        for (auto m : modes)
            b.exact("P3.6", {{"p", p}, {"word_length", L}, {"part", 3}, {"mode", to_string(m)}},
                    symmetric_p_count(L, params, m), row.symmetric_p,
                    "symmetric p-reciprocal classes including the power class");
    }

    // Totals at even length.
    for (long long l = 1; 2 * l <= max_len; ++l) {
        std::string const id = l <= r ? "L4.1.1" : (l == r + 1 ? "L4.1.2" : "L4.1.3");
        char const* ref = "reciprocal classes of length 2l";
        ordered_json prm = {{"p", p}, {"l", l}};
        if (r % 2 == 0) {
            b.add(id, prm, "stated for odd r only", to_decimal(N(2 * l)), ClaimStatus::NotApplicable, ref);
            continue;
        }
        if (id != "L4.1.3") {
            b.exact(id, prm, *total_count_even(l, params), N(2 * l), ref);
            continue;
        }
        BigInt rec = N(2 * (l - r - 1));
        for (long long j = 1; j <= r - 1; ++j) rec += 2 * N(2 * (l - j - 1));
        prm["expected_from"] = "census";
        b.exact(id, prm, Rational(rec), N(2 * l), ref);
        prm["expected_from"] = "formula";
        b.exact(id, prm, *total_count_even(l, params), N(2 * l), ref);
    }
    for (long long l = r + 2; 2 * l <= max_len; ++l) {
        auto col = [&](char const* name, auto member) {
            auto v = [&](long long k) -> BigInt { return k < 1 ? BigInt(0) : BigInt(table.row(static_cast<std::size_t>(2 * k)).*member); };
            BigInt rec = v(l - r - 1);
            for (long long j = 1; j <= r - 1; ++j) rec += 2 * v(l - j - 1);
            b.exact("L4.1.3-probe", {{"p", p}, {"l", l}, {"column", name}}, Rational(rec), v(l),
                    "recurrence applied to one category column");
        };
        col("symmetric", &CensusRow::symmetric);
        col("p_reciprocal", &CensusRow::p_reciprocal);
        col("symmetric_p", &CensusRow::symmetric_p);
    }

    // Totals at odd length.
    if (r % 2 != 0) {
        for (long long L = 1; L <= max_len; L += 2)
            b.exact("PARITY", {{"p", p}, {"word_length", L}}, Rational(0), N(L), "no reciprocal classes of odd length for odd r");
    } else {
        for (long long l = 1; 2 * l - 1 <= max_len; ++l) {
            std::string const id = l <= r + u + 1 ? "L4.7.1" : (l == r + u + 2 ? "L4.7.2" : "L4.7.3");
            char const* ref = "reciprocal classes of length 2l-1";
            ordered_json prm = {{"p", p}, {"l", l}};
            if (l - u - 1 < 1) {
                b.add(id, prm, "formula exponent l-u-1 below 1", to_decimal(N(2 * l - 1)), ClaimStatus::NotApplicable, ref);
                continue;
            }
            if (id != "L4.7.3") {
                b.exact(id, prm, *total_count_odd(l, params), N(2 * l - 1), ref);
                continue;
            }
            prm["relation"] = "formula";
            b.exact(id, prm, *total_count_odd(l, params), N(2 * l - 1), ref);
            prm["relation"] = "odd_to_even";
            b.exact(id, prm, Rational(N(2 * (l - u - 1))), N(2 * l - 1), ref);
            BigInt rec = N(2 * (l - u - r - 2));
            for (long long j = 1; j <= r - 1; ++j) rec += 2 * N(2 * (l - u - j - 2));
            prm["relation"] = "even_recurrence";
            b.exact(id, prm, Rational(rec), N(2 * l - 1), ref);
        }
    }

    // Reciprocal word count for the odd group of order p - 1.
    {
        GroupParams const odd = make_params(p - 1);
        for (long long l = 1; l <= r && 2 * l <= max_len; ++l) {
            std::size_t words = 0;
            for_each_class_of_length(odd, static_cast<std::size_t>(2 * l), [&](CyclicWord const& c) {
                if (is_reciprocal(c)) words += detail::palindromic_rotations(c);
            });
            b.exact("MA-5.3.2", {{"p", p}, {"odd_p", p - 1}, {"l", l}}, Rational(odd_p_reciprocal_words(l)), BigInt(words),
                    "cyclically reduced words (a, rev-neg a) of length 2l for odd p");
        }
    }

    // Normal forms against the census classes.
    for (long long L = 2; L <= max_len; ++L) {
        std::set<CyclicWord> oracle;
        for_each_class_of_length(params, static_cast<std::size_t>(L), [&](CyclicWord c) {
            if (is_reciprocal(c)) oracle.insert(std::move(c));
        });
        auto const nf = normal_form_generate(params, static_cast<int>(L));
        std::vector<std::string> unsound, missing;
        std::set<CyclicWord> nf_set;
        for (auto const& c : nf) {
            nf_set.insert(c);
            if (!oracle.count(c)) unsound.push_back(detail::blocks_text(c));
        }
        for (auto const& c : oracle)
            if (!nf_set.count(c)) missing.push_back(detail::blocks_text(c));
        b.add("L3.2", {{"p", p}, {"word_length", L}, {"check", "soundness"}, {"not_reciprocal", unsound}},
              "every normal form is reciprocal", std::to_string(nf.size() - unsound.size()) + " of " + std::to_string(nf.size()),
              unsound.empty() ? ClaimStatus::Pass : ClaimStatus::Mismatch, "normal forms of reciprocal classes");
        b.add("L3.2", {{"p", p}, {"word_length", L}, {"check", "completeness"}, {"missing", missing}},
              std::to_string(oracle.size()), std::to_string(nf.size() - unsound.size()),
              missing.empty() ? ClaimStatus::Pass : ClaimStatus::Mismatch, "normal forms of reciprocal classes");
    }

    // Spectral statements.
    IntPoly const& poly = spectral.poly;
    ordered_json const rp = {{"r", r}};
    {
        Sqrt2Value const at_sqrt2 = eval_at_sqrt2(poly);
        BigInt const at2 = poly.eval(BigInt(2));
        b.add("L4.6-bracket", rp, "p(sqrt2) < 0 and p(2) = 3",
              "p(sqrt2) = " + at_sqrt2.str() + (at_sqrt2.sign() < 0 ? " < 0" : " >= 0") + ", p(2) = " + at2.str(),
              at_sqrt2.sign() < 0 && at2 == 3 ? ClaimStatus::Pass : ClaimStatus::Mismatch, "sign change of p on [sqrt2, 2]");
        bool const inside = spectral.rho.lo * spectral.rho.lo > 2 && spectral.rho.hi < 2;
        b.add("L4.6-interval", rp, "sqrt2 < rho < 2",
              "rho in [" + detail::fmt_double(static_cast<double>(spectral.rho.lo)) + ", " +
                  detail::fmt_double(static_cast<double>(spectral.rho.hi)) + "]",
              inside ? ClaimStatus::Pass : ClaimStatus::Mismatch, "dominant root between sqrt2 and 2");
        double maxmod = 0;
        for (auto const& z : spectral.roots) maxmod = std::max(maxmod, std::abs(z));
        b.add("L4.6-cauchy", rp, "max |root| <= rho + 1e-6", detail::fmt_double(maxmod),
              maxmod <= spectral.rho.value + 1e-6 ? ClaimStatus::Pass : ClaimStatus::Mismatch,
              "every root modulus bounded by the positive root");
        b.add("S4.2-squarefree", rp, "s = 1", "s = " + std::to_string(spectral.multiplicity.s) + " (exact gcd)",
              spectral.multiplicity.s == 1 ? ClaimStatus::Pass : ClaimStatus::Mismatch, "simple roots of p");

        EisensteinReport const& e = spectral.eisenstein;
        std::string obs = "satisfied";
        if (!e.satisfied)
            obs = "not_satisfied: coefficient " + e.violating_coefficient.str() + " at degree " +
                  std::to_string(*e.violating_degree) + " (" + e.reason + ")";
        b.add("EISEN", {{"r", r}, {"check", "eisenstein"}, {"prime", 2}, {"shift", 1}}, "satisfied", obs,
              e.satisfied ? ClaimStatus::Pass : ClaimStatus::Mismatch, "Eisenstein criterion for p(x+1) at 2");
        BigInt const c0 = e.shifted.coefficient(0);
        bool const twice_odd = c0 % 2 == 0 && (c0 / 2) % 2 != 0;
        b.add("EISEN", {{"r", r}, {"check", "constant_term"}}, "p(1) = 2c with c odd", "p(1) = " + c0.str(),
              twice_odd ? ClaimStatus::Pass : ClaimStatus::Mismatch, "constant term of p(x+1)");
        BigInt const at_minus1 = poly.eval(BigInt(-1));
        b.add("EISEN", {{"r", r}, {"check", "irreducible"}}, "p irreducible over Q",
              at_minus1 == 0 ? "p(-1) = 0, so x + 1 divides p" : "p(-1) = " + at_minus1.str() + " (no root at -1)",
              at_minus1 == 0 ? ClaimStatus::Mismatch : ClaimStatus::Pass, "irreducibility of p");
    }
    for (auto const& f : spectral.families) {
        std::size_t const last = f.terms.size();
        b.add("THM-MAIN",
              {{"p", p}, {"family", f.family}, {"seed_terms", f.seed_terms}, {"extend_to", last}, {"s", spectral.multiplicity.s}},
              "|a_(l+1)/a_l - rho| < 1e-6 at l = " + std::to_string(last - 1),
              "|ratio - rho| = " + detail::fmt_double(f.trace.final_error) + ", max normalized term " +
                  detail::fmt_double(f.trace.normalized_max),
              f.trace.converged ? ClaimStatus::Pass : ClaimStatus::Mismatch, "growth rate of reciprocal classes");
    }
    return ledger;
}

}  // namespace hecke
