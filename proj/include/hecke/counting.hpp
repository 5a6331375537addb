#pragma once

// Closed-form class counts for even p = 2r, evaluated exactly.
//
// Formulas that divide (by 2, 3, 6) return a Rational so a failed
// divisibility shows up as a non-integer value instead of being truncated.
// Most formulas exist in two modes: Verbatim keeps the original index ranges
// untouched; Corrected uses the repaired ranges documented next to each
// function.

#include "hecke/bigint.hpp"
#include "hecke/words.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

enum class FormulaMode { Verbatim, Corrected };

inline char const* to_string(FormulaMode m) { return m == FormulaMode::Verbatim ? "verbatim" : "corrected"; }

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// Psi_n(x): ordered n-tuples of positive integers summing to x, C(x-1, n-1).
/// Psi_0(0) = 1.
inline BigInt compositions(long long n, long long x) {
    if (n < 0) return 0;
    if (n == 0) return x == 0 ? 1 : 0;
    if (x < n) return 0;
    return binomial(x - 1, n - 1);
}

/// Psi_n^r(x): compositions of x into n parts, each in [1, r]. Dynamic program.
inline BigInt bounded_compositions(long long n, long long r, long long x) {
    if (r < 1) throw std::domain_error("part bound r must be >= 1");
    if (n < 0 || x < 0) return 0;
    if (x < n || x > n * r) return 0;
    std::vector<BigInt> ways(static_cast<std::size_t>(x) + 1, 0);
    ways[0] = 1;
    for (long long part = 0; part < n; ++part) {
        std::vector<BigInt> next(ways.size(), 0);
        for (long long s = 0; s <= x; ++s) {
            if (ways[static_cast<std::size_t>(s)] == 0) continue;
            for (long long v = 1; v <= r && s + v <= x; ++v)
                next[static_cast<std::size_t>(s + v)] += ways[static_cast<std::size_t>(s)];
        }
        ways.swap(next);
    }
    return ways[static_cast<std::size_t>(x)];
}

/// Psi_n^r(x) by inclusion-exclusion: sum_j (-1)^j C(n,j) C(x - j r - 1, n - 1).
inline BigInt bounded_compositions_ie(long long n, long long r, long long x) {
    if (r < 1) throw std::domain_error("part bound r must be >= 1");
    if (n < 0 || x < 0) return 0;
    if (n == 0) return x == 0 ? 1 : 0;
    BigInt total = 0;
    for (long long j = 0; j <= n; ++j) {
        long long const top = x - j * r - 1;
        if (top < n - 1) break;
        BigInt const term = binomial(n, j) * binomial(top, n - 1);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// Tuples (n; k1..kn), n > 0, -r < ki <= r, ki != 0, with sum |ki| + n = x.
/// Direct dynamic program over the weight.
inline BigInt signed_syllable_count(long long x, long long r) {
    if (r < 1) throw std::domain_error("exponent bound r must be >= 1");
    if (x < 2) return 0;
    std::vector<BigInt> f(static_cast<std::size_t>(x) + 1, 0);
    f[0] = 1;
    for (long long w = 1; w <= x; ++w) {
        BigInt acc = 0;
        for (long long a = 1; a <= r; ++a) {
            long long const prev = w - a - 1;
            if (prev < 0) break;
            acc += (a < r ? 2 : 1) * f[static_cast<std::size_t>(prev)];
        }
        f[static_cast<std::size_t>(w)] = acc;
    }
    return f[static_cast<std::size_t>(x)];
}

/// Double sum over q (number of ki equal to r) and n (tuple length):
///   sum_q sum_n Psi_{n'}^{r-1}(x - n - r q) 2^(n-q) C(n, q)
/// Verbatim: q <= ceil(x/(r+1)) - 1 and n' = n.
/// Corrected: q <= floor(x/(r+1)) and n' = n - q (the parts that are not r).
inline BigInt signed_tuple_sum(long long x, long long r, FormulaMode mode) {
    if (r < 2) throw std::domain_error("signed_tuple_sum needs r >= 2");
    BigInt total = 0;
    long long const q_max = mode == FormulaMode::Verbatim ? ceil_div(x, r + 1) - 1 : floor_div(x, r + 1);
    for (long long q = 0; q <= q_max; ++q) {
        long long const n_lo = ceil_div(x - q, r);
        long long const n_hi = floor_div(x - (r - 1) * q, 2);
        for (long long n = std::max(n_lo, 0LL); n <= n_hi; ++n) {
            if (n < q) continue;
            long long const parts = mode == FormulaMode::Verbatim ? n : n - q;
            BigInt const psi = bounded_compositions(parts, r - 1, x - n - r * q);
            if (psi == 0) continue;
            total += psi * pow2(static_cast<unsigned>(n - q)) * binomial(n, q);
        }
    }
    return total;
}

/// Symmetric classes of word length 2l: half the signed tuple sum at x = l.
inline Rational symmetric_count(long long l, GroupParams const& params, FormulaMode mode = FormulaMode::Verbatim) {
    long long const r = params.half();
    return Rational(signed_tuple_sum(l, r, mode)) / 2;
}

/// p-reciprocal classes of word length 2l.
/// Verbatim: (1/2) sum_{q=0}^{ceil(l/(r+1))-2} sum_{n=ceil((l-(r+1)-q)/r)}^{floor((l-1-(r+1)q-r)/2)}
///           Psi_n^{r-1}(l-(n+1)-(q+1)r) 2^(n-q) C(n,q).
/// Corrected: the form i g~ (a) i g~ (rev-neg a) has n + sum|ki| = l - r - 1, so
///           (1/2) signed_tuple_sum(l - r - 1, corrected).
inline Rational p_reciprocal_count(long long l, GroupParams const& params, FormulaMode mode = FormulaMode::Verbatim) {
    long long const r = params.half();
    if (mode == FormulaMode::Corrected) {
        if (l - r - 1 < 2) return 0;
        return Rational(signed_tuple_sum(l - r - 1, r, FormulaMode::Corrected)) / 2;
    }
    BigInt total = 0;
    for (long long q = 0; q <= ceil_div(l, r + 1) - 2; ++q) {
        long long const n_lo = ceil_div(l - (r + 1) - q, r);
        long long const n_hi = floor_div(l - 1 - (r + 1) * q - r, 2);
        for (long long n = std::max(n_lo, 0LL); n <= n_hi; ++n) {
            if (n < q) continue;
            BigInt const psi = bounded_compositions(n, r - 1, l - (n + 1) - (q + 1) * r);
            if (psi == 0) continue;
            total += psi * pow2(static_cast<unsigned>(n - q)) * binomial(n, q);
        }
    }
    return Rational(total) / 2;
}

/// Weight n + sum|ki| of the block tuple in i g~ (a) (rev-neg a) of word
/// length L; nullopt when L has the wrong parity for this form.
inline std::optional<long long> symmetric_p_weight(long long word_length, GroupParams const& params, FormulaMode mode) {
    long long const r = params.half();
    long long const u = *params.u;
    if ((word_length - r - 1) % 2 != 0) return std::nullopt;
    if (mode == FormulaMode::Corrected) return (word_length - r - 1) / 2;
    // verbatim: word length 2l (r odd) or 2l + 1 (r even), weight l - u
    long long const l = r % 2 == 0 ? (word_length - 1) / 2 : word_length / 2;
    return l - u;
}

/// Symmetric p-reciprocal classes that are not powers of i g~, word length L.
inline std::optional<Rational> symmetric_p_nonpower_count(long long word_length, GroupParams const& params,
                                                          FormulaMode mode = FormulaMode::Verbatim) {
    auto const w = symmetric_p_weight(word_length, params, mode);
    if (!w) return std::nullopt;
    if (*w < 2) return Rational(0);
    return Rational(signed_tuple_sum(*w, params.half(), mode)) / 2;
}

/// All symmetric p-reciprocal classes of word length L: the sum above (empty
/// at the other parity) plus one for the power class (i g~)^m when (r+1)
/// divides L.
inline Rational symmetric_p_count(long long word_length, GroupParams const& params,
                                  FormulaMode mode = FormulaMode::Verbatim) {
    Rational v = symmetric_p_nonpower_count(word_length, params, mode).value_or(Rational(0));
    if (word_length % (params.half() + 1) == 0) v += 1;
    return v;
}

namespace detail {

// (2^e + 2 (-1)^e) / 6, exact for any integer e.
inline Rational sixth_term(long long e) {
    Rational two_pow = e >= 0 ? Rational(pow2(static_cast<unsigned>(e))) : Rational(1) / Rational(pow2(static_cast<unsigned>(-e)));
    Rational const sign = (e % 2 == 0) ? 1 : -1;
    return (two_pow + 2 * sign) / 6;
}

}  // namespace detail

/// Reciprocal classes of word length 2l for odd r, from the piecewise
/// formula: (2^l + 2(-1)^l)/6 for l <= r, the l = r+1 correction, then
/// N_2l = 2 sum_{j=1}^{r-1} N_2(l-j-1) + N_2(l-r-1). nullopt for even r.
inline std::optional<Rational> total_count_even(long long l, GroupParams const& params) {
    long long const r = params.half();
    if (r % 2 == 0 || l < 1) return std::nullopt;
    long long const u = *params.u;
    std::vector<Rational> t(static_cast<std::size_t>(l) + 1, 0);
    for (long long i = 1; i <= l; ++i) {
        Rational v;
        if (i <= r)
            v = detail::sixth_term(i);
        else if (i == r + 1)
            v = detail::sixth_term(i) + detail::sixth_term(u + 1) - 1;
        else {
            v = t[static_cast<std::size_t>(i - r - 1)];
            for (long long j = 1; j <= r - 1; ++j) v += 2 * t[static_cast<std::size_t>(i - j - 1)];
        }
        t[static_cast<std::size_t>(i)] = v;
    }
    return t[static_cast<std::size_t>(l)];
}

/// Reciprocal classes of word length 2l - 1 for even r = 2u:
/// (2^(l-u-1) + 2(-1)^(l-u-1))/6 for l <= r+u+1, the l = r+u+2 correction,
/// then the same recurrence shifted by u+1. nullopt for odd r.
inline std::optional<Rational> total_count_odd(long long l, GroupParams const& params) {
    long long const r = params.half();
    if (r % 2 != 0 || l < 1) return std::nullopt;
    long long const u = *params.u;
    std::vector<Rational> t(static_cast<std::size_t>(l) + 1, 0);
    for (long long i = 1; i <= l; ++i) {
        Rational v;
        if (i <= r + u + 1)
            v = detail::sixth_term(i - u - 1);
        else if (i == r + u + 2)
            v = detail::sixth_term(i - u - 1) + detail::sixth_term(u + 1) - 1;
        else {
            v = t[static_cast<std::size_t>(i - r - 1)];
            for (long long j = 1; j <= r - 1; ++j) v += 2 * t[static_cast<std::size_t>(i - j - 1)];
        }
        t[static_cast<std::size_t>(i)] = v;
    }
    return t[static_cast<std::size_t>(l)];
}

/// (2^l + 2(-1)^l) / 3, the count of cyclically reduced reciprocal words of
/// length l for odd p.
inline BigInt odd_p_reciprocal_words(long long l) {
    if (l < 1) throw std::domain_error("odd_p_reciprocal_words needs l >= 1");
    BigInt v = pow2(static_cast<unsigned>(l)) + (l % 2 == 0 ? 2 : -2);
    return v / 3;
}

/// One step of a_l = 2 sum_{j=1}^{r-1} a_{l-j-1} + a_{l-r-1} applied to the
/// tail of `a`.
template <class T>
T recurrence_next(std::span<const T> a, long long r) {
    std::size_t const L = a.size();
    T v = a[L - static_cast<std::size_t>(r) - 1];
    for (long long j = 1; j <= r - 1; ++j) v += 2 * a[L - static_cast<std::size_t>(j) - 1];
    return v;
}

inline std::vector<BigInt> recurrence_extend(std::span<const BigInt> seed, long long r, std::size_t count) {
    if (r < 2) throw std::domain_error("recurrence order r must be >= 2");
    if (seed.size() < static_cast<std::size_t>(r) + 1)
        throw std::domain_error("recurrence seed needs at least r + 1 = " + std::to_string(r + 1) + " terms, got " +
                                std::to_string(seed.size()));
    std::vector<BigInt> out(seed.begin(), seed.end());
    out.reserve(seed.size() + count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(recurrence_next<BigInt>(out, r));
    return out;
}

}  // namespace hecke
