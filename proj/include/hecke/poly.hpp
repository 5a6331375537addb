#pragma once

// Exact integer polynomials: evaluation at rationals and at sqrt(2), gcd over
// Q, multiplicity of roots, Taylor shifts and the Eisenstein test.

#include "hecke/bigint.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

class IntPoly {
public:
    IntPoly() = default;
    /// Coefficients, constant term first.
    explicit IntPoly(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::vector<BigInt> const& coefficients() const { return c_; }
    BigInt coefficient(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
    bool is_zero() const { return c_.empty(); }

    Rational eval(Rational const& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    BigInt eval(BigInt const& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPoly derivative() const {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long long>(i));
        return IntPoly(std::move(d));
    }

    /// q(x) = p(x + a).
    IntPoly taylor_shift(BigInt const& a) const {
        std::vector<BigInt> q = c_;
        std::size_t const n = q.size();
        // repeated synthetic division
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) q[j - 1] += a * q[j];
        return IntPoly(std::move(q));
    }

    friend bool operator==(IntPoly const&, IntPoly const&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// x^(r+1) - 2 sum_{j=1}^{r-1} x^(r-j) - 1.
inline IntPoly build_growth_poly(int r) {
    if (r < 2) throw std::domain_error("growth polynomial needs r >= 2, got " + std::to_string(r));
    std::vector<BigInt> c(static_cast<std::size_t>(r) + 2, 0);
    c[0] = -1;
    for (int j = 1; j <= r - 1; ++j) c[static_cast<std::size_t>(r - j)] = -2;
    c[static_cast<std::size_t>(r) + 1] = 1;
    return IntPoly(std::move(c));
}

inline std::string format_poly(IntPoly const& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt const c = p.coefficient(i);
        if (c == 0) continue;
        BigInt const mag = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

/// a + b sqrt(2) with exact integers.
struct Sqrt2Value {
    BigInt a = 0;
    BigInt b = 0;

    int sign() const {
        auto sgn = [](BigInt const& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
        int const sa = sgn(a), sb = sgn(b);
        if (sa == sb || sb == 0) return sa;
        if (sa == 0) return sb;
        // opposite signs: compare a^2 with 2 b^2
        BigInt const diff = a * a - 2 * b * b;
        return sa > 0 ? sgn(diff) : -sgn(diff);
    }
    std::string str() const { return a.str() + (b < 0 ? " - " : " + ") + (b < 0 ? BigInt(-b) : b).str() + "*sqrt2"; }
};

inline Sqrt2Value eval_at_sqrt2(IntPoly const& p) {
    Sqrt2Value v;
    BigInt pow2k = 1;  // 2^(i/2)
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0 && i % 2 == 0) pow2k *= 2;
        if (i % 2 == 0)
            v.a += p.coefficient(i) * pow2k;
        else
            v.b += p.coefficient(i) * pow2k;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Rational polynomial arithmetic for gcd.

using RatPoly = std::vector<Rational>;  // constant first, trimmed

namespace detail {

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(IntPoly const& p) {
    RatPoly out;
    for (auto const& c : p.coefficients()) out.emplace_back(c);
    return out;
}

inline RatPoly poly_mod(RatPoly a, RatPoly const& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational const f = a.back() / b.back();
        std::size_t const shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline RatPoly monic(RatPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rational const lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

}  // namespace detail

/// Monic gcd over Q.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    detail::trim(a);
    detail::trim(b);
    while (!b.empty()) {
        RatPoly r = detail::poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return detail::monic(std::move(a));
}

inline RatPoly derivative(RatPoly const& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
    detail::trim(d);
    return d;
}

struct Multiplicity {
    bool squarefree = true;
    int s = 1;  // largest root multiplicity
};

/// If f has largest multiplicity m then gcd(f, f') has m - 1; iterate until
/// the gcd is constant.
inline Multiplicity squarefree_multiplicity(IntPoly const& p) {
    if (p.degree() < 1) throw std::domain_error("multiplicity of a constant polynomial");
    RatPoly g = detail::monic(detail::to_rat(p));
    int s = 1;
    while (true) {
        RatPoly const next = poly_gcd(g, derivative(g));
        if (next.size() <= 1) break;
        ++s;
        g = next;
    }
    return {s == 1, s};
}

struct EisensteinReport {
    BigInt prime = 2;
    BigInt shift = 0;
    IntPoly shifted;  // p(x + shift)
    bool satisfied = false;
    std::optional<int> violating_degree;
    BigInt violating_coefficient = 0;
    std::string reason;
};

/// Eisenstein at `prime` for p(x + shift): prime divides every non-leading
/// coefficient, not the leading one, and prime^2 does not divide the constant.
/// Reports the first violation scanning from the top degree down.
inline EisensteinReport eisenstein_check(IntPoly const& p, BigInt const& prime, BigInt const& shift = 1) {
    if (prime < 2) throw std::domain_error("Eisenstein prime must be >= 2");
    if (p.degree() < 1) throw std::domain_error("Eisenstein test of a constant polynomial");
    EisensteinReport rep;
    rep.prime = prime;
    rep.shift = shift;
    rep.shifted = p.taylor_shift(shift);
    IntPoly const& q = rep.shifted;
    int const n = q.degree();
    auto fail = [&](int deg, std::string why) {
        rep.satisfied = false;
        rep.violating_degree = deg;
        rep.violating_coefficient = q.coefficient(deg);
        rep.reason = std::move(why);
        return rep;
    };
    if (q.coefficient(n) % prime == 0) return fail(n, "leading coefficient divisible by " + prime.str());
    for (int i = n - 1; i >= 0; --i)
        if (q.coefficient(i) % prime != 0) return fail(i, "coefficient not divisible by " + prime.str());
    if (q.coefficient(0) % (prime * prime) == 0) return fail(0, "constant term divisible by " + BigInt(prime * prime).str());
    rep.satisfied = true;
    return rep;
}

}  // namespace hecke
