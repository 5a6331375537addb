#pragma once

// Roots of the growth polynomial and growth-rate diagnostics for census
// sequences.

#include "hecke/bigint.hpp"
#include "hecke/census.hpp"
#include "hecke/counting.hpp"
#include "hecke/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootEnclosure {
    double value = 0;  // midpoint
    Rational lo = 0;
    Rational hi = 0;
};

/// Bisection with exact rational midpoints on a bracket with p(lo) < 0 < p(hi).
inline RootEnclosure bisect_root(IntPoly const& p, Rational lo, Rational hi, double tol) {
    if (!(tol > 0)) throw std::domain_error("bisection tolerance must be positive");
    if (!(p.eval(lo) < 0 && p.eval(hi) > 0)) throw internal_error("bisection bracket has no sign change");
    Rational const width_tol(tol);
    while (hi - lo > width_tol) {
        Rational const mid = (lo + hi) / 2;
        Rational const v = p.eval(mid);
        if (v == 0) return {static_cast<double>(mid), mid, mid};
        (v < 0 ? lo : hi) = mid;
    }
    return {static_cast<double>((lo + hi) / 2), lo, hi};
}

inline bool contains_integer(RootEnclosure const& e) {
    BigInt const fl = numerator(e.lo) / denominator(e.lo);  // lo > 0, so this is floor
    return Rational(fl) == e.lo || Rational(fl + 1) <= e.hi;
}

/// The positive root in (sqrt 2, 2), after checking p(sqrt 2) < 0 exactly and
/// p(2) > 0.
inline RootEnclosure dominant_root(IntPoly const& p, double tol = 1e-12) {
    if (eval_at_sqrt2(p).sign() >= 0) throw internal_error("p(sqrt2) is not negative: " + eval_at_sqrt2(p).str());
    if (p.eval(Rational(2)) <= 0) throw internal_error("p(2) is not positive");
    // 99/70 lies just above sqrt 2
    Rational const lo(99, 70);
    if (p.eval(lo) >= 0) throw internal_error("root lies in [sqrt2, 99/70]; bracket too coarse");
    RootEnclosure e = bisect_root(p, lo, Rational(2), tol);
    if (contains_integer(e)) throw internal_error("dominant root enclosure contains an integer");
    return e;
}

namespace detail {

inline std::complex<long double> horner(std::vector<long double> const& c, std::complex<long double> z) {
    std::complex<long double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace detail

/// All complex roots with multiplicity by Aberth iteration from a fixed
/// starting circle. Sorted by decreasing modulus, then by imaginary part.
inline std::vector<std::complex<double>> all_roots(IntPoly const& p, double tol = 1e-10, int max_iter = 500) {
    int const n = p.degree();
    if (n < 1) throw std::domain_error("all_roots needs degree >= 1");
    std::vector<long double> c;
    for (auto const& v : p.coefficients()) c.push_back(to_long_double(v));
    long double const lead = c.back();
    for (auto& v : c) v /= lead;
    std::vector<long double> dc;
    for (int i = 1; i <= n; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * i);

    long double maxc = 0;
    for (auto v : c) maxc = std::max(maxc, std::fabs(v));
    long double const radius = 1 + maxc;
    std::vector<std::complex<long double>> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        long double const ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
    }

    auto residual = [&](std::complex<long double> x) { return static_cast<double>(std::abs(detail::horner(c, x))); };
    auto worst = [&] {
        double w = 0;
        for (auto const& x : z) w = std::max(w, residual(x));
        return w;
    };
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        long double step = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            auto const f = detail::horner(c, z[i]);
            if (f == std::complex<long double>(0)) continue;
            auto const ratio = f / detail::horner(dc, z[i]);
            std::complex<long double> sum = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) sum += 1.0L / (z[i] - z[j]);
            auto const w = ratio / (1.0L - ratio * sum);
            z[i] -= w;
            step = std::max(step, std::abs(w));
        }
        if (step < 1e-18L && worst() <= tol) break;
    }
    if (worst() > tol) {
        std::ostringstream msg;
        msg << "root iteration did not reach residual " << tol << " after " << iter << " iterations (worst "
            << worst() << ") for " << format_poly(p);
        throw numeric_error(msg.str());
    }
    std::vector<std::complex<double>> out;
    for (auto const& x : z) {
        double re = static_cast<double>(x.real()), im = static_cast<double>(x.imag());
        if (std::fabs(im) < 1e-14) im = 0;
        out.emplace_back(re, im);
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        double const ma = std::abs(a), mb = std::abs(b);
        if (std::fabs(ma - mb) > 1e-9) return ma > mb;
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    return out;
}

/// The positive root of x^n - sum_{k<n} |a_k| x^k for monic p; bounds every
/// root modulus.
inline double cauchy_bound(IntPoly const& p) {
    if (p.degree() < 1 || p.leading() != 1) throw std::domain_error("cauchy_bound needs a monic polynomial of degree >= 1");
    std::vector<BigInt> c;
    for (int i = 0; i < p.degree(); ++i) c.push_back(-abs(p.coefficient(i)));
    c.push_back(1);
    IntPoly const q(std::move(c));
    BigInt hi = 1;
    for (int i = 0; i < p.degree(); ++i) hi = std::max(hi, BigInt(abs(p.coefficient(i)) + 1));
    if (q.eval(Rational(0)) == 0) return 0;
    return bisect_root(q, Rational(0), Rational(hi), 1e-12).value;
}

// ---------------------------------------------------------------------------
// Growth of sequences.

struct RatioPoint {
    std::size_t index = 0;  // l; ratio is a_{l+1} / a_l
    double ratio = 0;
};

struct GrowthTrace {
    std::size_t first_index = 1;  // index of seq[0]
    std::size_t base = 1;         // first index used for ratios
    std::vector<RatioPoint> ratios;
    std::vector<double> normalized;  // a_l / (l^(s-1) rho^l) for l >= base
    double normalized_max = 0;
    double final_error = 0;  // |last ratio - rho|
    bool converged = false;
};

/// Ratios and normalized terms of seq (seq[i] has index first_index + i)
/// from index `base` on. Every term from base on must be nonzero.
template <class T>
GrowthTrace growth_estimate(std::span<const T> seq, double rho, int s, std::size_t base, double tol = 1e-6,
                            std::size_t first_index = 1) {
    if (s < 1) throw std::domain_error("multiplicity s must be >= 1");
    if (base < first_index || base - first_index + 2 > seq.size())
        throw std::domain_error("base segment leaves fewer than two terms");
    GrowthTrace g;
    g.first_index = first_index;
    g.base = base;
    auto value = [&](std::size_t l) -> long double {
        if constexpr (std::is_same_v<T, BigInt>)
            return to_long_double(seq[l - first_index]);
        else
            return static_cast<long double>(seq[l - first_index]);
    };
    std::size_t const last = first_index + seq.size() - 1;
    for (std::size_t l = base; l <= last; ++l)
        if (value(l) == 0) throw numeric_error("zero term at index " + std::to_string(l) + " beyond the base segment");
    for (std::size_t l = base; l <= last; ++l) {
        long double const norm = value(l) / (std::pow(static_cast<long double>(l), s - 1) * std::pow(static_cast<long double>(rho), static_cast<long double>(l)));
        g.normalized.push_back(static_cast<double>(norm));
        g.normalized_max = std::max(g.normalized_max, std::fabs(static_cast<double>(norm)));
        if (l < last) g.ratios.push_back({l, static_cast<double>(value(l + 1) / value(l))});
    }
    g.final_error = std::fabs(g.ratios.back().ratio - rho);
    g.converged = g.final_error < tol;
    return g;
}

struct SequenceGrowth {
    std::string family;  // "even": a_l = N_{2l}; "odd": a_l = N_{2l-1}
    std::size_t seed_terms = 0;
    std::vector<BigInt> terms;  // index 1..extend_to
    GrowthTrace trace;
};

struct GrowthReport {
    int r = 0;
    IntPoly poly;
    RootEnclosure rho;
    std::vector<std::complex<double>> roots;
    double cauchy = 0;
    Multiplicity multiplicity;
    EisensteinReport eisenstein;
    std::vector<SequenceGrowth> families;
};

struct GrowthOptions {
    double tol = 1e-12;          // dominant root enclosure width
    double root_tol = 1e-10;     // all-roots residual
    double converge_tol = 1e-6;  // ratio convergence threshold
};

inline GrowthReport spectral_report(int r, GrowthOptions const& opts = {}) {
    GrowthReport rep;
    rep.r = r;
    rep.poly = build_growth_poly(r);
    rep.rho = dominant_root(rep.poly, opts.tol);
    rep.roots = all_roots(rep.poly, opts.root_tol);
    rep.cauchy = cauchy_bound(rep.poly);
    rep.multiplicity = squarefree_multiplicity(rep.poly);
    rep.eisenstein = eisenstein_check(rep.poly, 2, 1);
    return rep;
}

/// Extends a census family by the recurrence and measures its growth.
inline SequenceGrowth family_growth(std::string family, std::vector<BigInt> seed, int r, std::size_t extend_to,
                                    double rho, int s, double converge_tol) {
    if (seed.size() < static_cast<std::size_t>(r) + 1)
        throw std::domain_error(family + " family seed has " + std::to_string(seed.size()) + " terms, needs " +
                                std::to_string(r + 1) + "; raise --max-len");
    SequenceGrowth g;
    g.family = std::move(family);
    g.seed_terms = seed.size();
    std::size_t const more = extend_to > seed.size() ? extend_to - seed.size() : 0;
    g.terms = recurrence_extend(seed, r, more);
    std::size_t base = 1;
    for (std::size_t i = 0; i < g.terms.size(); ++i)
        if (g.terms[i] == 0) base = i + 2;
    g.trace = growth_estimate<BigInt>(g.terms, rho, s, base, converge_tol, 1);
    return g;
}

/// Spectral data for r = p/2 plus growth of the even-length totals a_l =
/// N_{2l} and, for even r, the odd-length totals b_l = N_{2l-1}.
inline GrowthReport growth_report(CensusTable const& table, std::size_t extend_to, GrowthOptions const& opts = {}) {
    GroupParams const& params = table.params;
    if (!params.even()) throw std::domain_error("growth analysis needs even p");
    int const r = params.half();
    if (r < 2) throw std::domain_error("growth analysis needs p >= 4");
    GrowthReport rep = spectral_report(r, opts);
    double const rho = rep.rho.value;
    int const s = rep.multiplicity.s;

    std::vector<BigInt> even;
    for (std::size_t l = 1; 2 * l <= table.max_len; ++l) even.push_back(table.row(2 * l).reciprocal_total);
    rep.families.push_back(family_growth("even", std::move(even), r, extend_to, rho, s, opts.converge_tol));
    if (r % 2 == 0) {
        std::vector<BigInt> odd;
        for (std::size_t l = 1; 2 * l - 1 <= table.max_len; ++l) odd.push_back(table.row(2 * l - 1).reciprocal_total);
        rep.families.push_back(family_growth("odd", std::move(odd), r, extend_to, rho, s, opts.converge_tol));
    }
    return rep;
}

}  // namespace hecke
