#pragma once

// Reduced words in the free product Z2 * Zp = < i, g | i^2, g^p >.

#include "hecke/necklace.hpp"

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

struct GroupParams {
    int p = 0;
    std::optional<int> r;  // p / 2, even p only
    std::optional<int> u;  // r = 2u or r = 2u + 1
    double lambda_p = 0.0; // 2 cos(pi / p); informational, never used in arithmetic

    bool even() const { return p % 2 == 0; }

    /// r for even p; throws for odd p, where the involution g^r does not exist.
    int half() const {
        if (!r) throw std::domain_error("p = " + std::to_string(p) + " is odd: g^(p/2) is undefined");
        return *r;
    }

    /// Largest absolute value of a canonical exponent.
    int max_exponent() const { return p / 2; }

    friend bool operator==(GroupParams const& a, GroupParams const& b) { return a.p == b.p; }
};

inline GroupParams make_params(int p) {
    if (p < 3) throw std::domain_error("Hecke group parameter p must be >= 3, got " + std::to_string(p));
    GroupParams g;
    g.p = p;
    g.lambda_p = 2.0 * std::cos(std::numbers::pi / p);
    if (p % 2 == 0) {
        int const r = p / 2;
        g.r = r;
        g.u = r / 2;  // floor(r/2) covers both r = 2u and r = 2u + 1
    }
    return g;
}

/// Representative of k mod p in (-p/2, p/2]; 0 means the syllable is trivial.
inline int canonical_exponent(long long k, GroupParams const& params) {
    long long const p = params.p;
    long long m = k % p;
    if (m < 0) m += p;
    // m in [0, p); move to (-p/2, p/2]
    if (2 * m > p) m -= p;
    return static_cast<int>(m);
}

enum class SyllableKind : std::uint8_t { Iota, Gamma };

struct Syllable {
    SyllableKind kind = SyllableKind::Iota;
    int exponent = 0;  // Gamma only; canonical once inside a Word

    static constexpr Syllable iota() { return {SyllableKind::Iota, 0}; }
    static constexpr Syllable gamma(int k) { return {SyllableKind::Gamma, k}; }

    constexpr bool is_iota() const { return kind == SyllableKind::Iota; }
    friend bool operator==(Syllable const&, Syllable const&) = default;
};

/// Position of g^k in the order g^1 < g^-1 < g^2 < g^-2 < ...
constexpr int exponent_rank(int k) { return k > 0 ? 2 * k - 1 : -2 * k; }

/// Total order i < g^1 < g^-1 < g^2 < g^-2 < ... < g^r used for class keys.
constexpr int syllable_rank(Syllable s) { return s.is_iota() ? 0 : exponent_rank(s.exponent); }

/// Block exponent wrapper ordered by exponent_rank, so necklace routines can
/// run directly on (k1, ..., kn).
struct RankedExponent {
    int k = 0;
    friend bool operator==(RankedExponent, RankedExponent) = default;
    friend bool operator<(RankedExponent a, RankedExponent b) { return exponent_rank(a.k) < exponent_rank(b.k); }
};

struct RankedSyllable {
    Syllable s;
    friend bool operator==(RankedSyllable, RankedSyllable) = default;
    friend bool operator<(RankedSyllable a, RankedSyllable b) { return syllable_rank(a.s) < syllable_rank(b.s); }
};

inline std::size_t syllable_length(Syllable s) { return s.is_iota() ? 1 : static_cast<std::size_t>(std::abs(s.exponent)); }

class Word;
Word reduce(GroupParams const& params, std::span<const Syllable> seq);

/// A reduced word: adjacent syllables alternate in kind, all exponents are
/// canonical and nonzero. The empty word is the identity.
class Word {
public:
    explicit Word(GroupParams params) : params_(std::move(params)) {}

    static Word identity(GroupParams const& params) { return Word(params); }
    static Word iota(GroupParams const& params) { return reduce(params, std::vector{Syllable::iota()}); }
    static Word gamma(GroupParams const& params, int k) { return reduce(params, std::vector{Syllable::gamma(k)}); }

    GroupParams const& params() const { return params_; }
    std::span<const Syllable> syllables() const { return syllables_; }
    std::size_t syllable_count() const { return syllables_.size(); }
    bool is_identity() const { return syllables_.empty(); }

    friend bool operator==(Word const& a, Word const& b) {
        return a.params_ == b.params_ && a.syllables_ == b.syllables_;
    }

private:
    friend Word reduce(GroupParams const&, std::span<const Syllable>);
    GroupParams params_;
    std::vector<Syllable> syllables_;
};

/// Free-product reduction: merges same-kind neighbours until the sequence
/// alternates. Exponents may be arbitrary integers on input.
inline Word reduce(GroupParams const& params, std::span<const Syllable> seq) {
    Word w(params);
    auto& st = w.syllables_;
    st.reserve(seq.size());
    for (Syllable s : seq) {
        if (!s.is_iota()) {
            s.exponent = canonical_exponent(s.exponent, params);
            if (s.exponent == 0) continue;
        }
        if (st.empty() || st.back().kind != s.kind) {
            st.push_back(s);
            continue;
        }
        if (s.is_iota()) {
            st.pop_back();
        } else {
            int const k = canonical_exponent(static_cast<long long>(st.back().exponent) + s.exponent, params);
            if (k == 0)
                st.pop_back();
            else
                st.back().exponent = k;
        }
    }
    return w;
}

inline void require_same_group(Word const& a, Word const& b) {
    if (!(a.params() == b.params()))
        throw std::domain_error("words from different groups: p = " + std::to_string(a.params().p) + " vs " +
                                std::to_string(b.params().p));
}

inline Word multiply(Word const& a, Word const& b) {
    require_same_group(a, b);
    std::vector<Syllable> cat(a.syllables().begin(), a.syllables().end());
    cat.insert(cat.end(), b.syllables().begin(), b.syllables().end());
    return reduce(a.params(), cat);
}

inline Word inverse(Word const& w) {
    std::vector<Syllable> out;
    out.reserve(w.syllable_count());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        out.push_back(it->is_iota() ? *it : Syllable::gamma(-it->exponent));
    return reduce(w.params(), out);
}

/// w^m for any integer m.
inline Word power(Word const& w, long long m) {
    Word base = m < 0 ? inverse(w) : w;
    Word acc = Word::identity(w.params());
    for (long long i = 0; i < (m < 0 ? -m : m); ++i) acc = multiply(acc, base);
    return acc;
}

/// Sum of 1 per i and |k| per g^k.
inline std::size_t word_length(Word const& w) {
    std::size_t len = 0;
    for (Syllable s : w.syllables()) len += syllable_length(s);
    return len;
}

/// Conjugacy-class representative: cyclically reduced, rotated to the least
/// rotation under syllable_rank. With at least two syllables it reads
/// i g^k1 i g^k2 ... i g^kn, and blocks() holds (k1, ..., kn).
class CyclicWord {
public:
    explicit CyclicWord(GroupParams params) : params_(std::move(params)) {}

    /// Canonicalizes exponents and rotates to the least rotation. All exponents
    /// must be nonzero mod p.
    static CyclicWord from_blocks(GroupParams const& params, std::span<const int> blocks) {
        if (blocks.empty()) throw std::domain_error("block sequence must be nonempty");
        std::vector<RankedExponent> ks;
        ks.reserve(blocks.size());
        for (int k : blocks) {
            int const c = canonical_exponent(k, params);
            if (c == 0) throw std::domain_error("block exponent " + std::to_string(k) + " is trivial mod p");
            ks.push_back({c});
        }
        std::size_t const t = least_rotation<RankedExponent>(ks);
        CyclicWord c(params);
        c.blocks_.reserve(ks.size());
        for (std::size_t i = 0; i < ks.size(); ++i) c.blocks_.push_back(ks[(i + t) % ks.size()].k);
        c.rebuild_syllables();
        return c;
    }
    static CyclicWord from_blocks(GroupParams const& params, std::initializer_list<int> blocks) {
        return from_blocks(params, std::span<const int>(blocks.begin(), blocks.size()));
    }

    /// Blocks already canonical and least-rotated; used by the enumerator.
    static CyclicWord from_canonical_blocks(GroupParams const& params, std::vector<int> blocks) {
        CyclicWord c(params);
        c.blocks_ = std::move(blocks);
        c.rebuild_syllables();
        return c;
    }

    /// Torsion class: identity or a single syllable.
    static CyclicWord torsion(GroupParams const& params, std::optional<Syllable> s) {
        CyclicWord c(params);
        if (s) c.syllables_.push_back(*s);
        return c;
    }

    GroupParams const& params() const { return params_; }
    std::span<const Syllable> syllables() const { return syllables_; }
    std::span<const int> blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t syllable_count() const { return syllables_.size(); }
    bool is_torsion() const { return syllables_.size() <= 1; }

    Word to_word() const { return reduce(params_, syllables_); }

    std::size_t length() const {
        std::size_t len = 0;
        for (Syllable s : syllables_) len += syllable_length(s);
        return len;
    }

    friend bool operator==(CyclicWord const& a, CyclicWord const& b) {
        return a.params_ == b.params_ && a.syllables_ == b.syllables_;
    }

    /// Lexicographic by syllable_rank.
    friend bool operator<(CyclicWord const& a, CyclicWord const& b) {
        return std::lexicographical_compare(
            a.syllables_.begin(), a.syllables_.end(), b.syllables_.begin(), b.syllables_.end(),
            [](Syllable x, Syllable y) { return syllable_rank(x) < syllable_rank(y); });
    }

private:
    void rebuild_syllables() {
        syllables_.clear();
        syllables_.reserve(2 * blocks_.size());
        for (int k : blocks_) {
            syllables_.push_back(Syllable::iota());
            syllables_.push_back(Syllable::gamma(k));
        }
    }

    GroupParams params_;
    std::vector<Syllable> syllables_;
    std::vector<int> blocks_;
};

struct CyclicReduction {
    CyclicWord word;
    Word conjugator;  // w == conjugator * word * conjugator^-1
};

inline CyclicReduction cyclic_reduce(Word const& w) {
    GroupParams const& params = w.params();
    std::vector<Syllable> s(w.syllables().begin(), w.syllables().end());
    std::vector<Syllable> h;
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo].kind == s[hi - 1].kind) {
        if (s[lo].is_iota()) {
            // i X i = i X i^-1
            h.push_back(s[lo]);
            ++lo;
            --hi;
        } else {
            // g^a X g^b = g^a (X g^(a+b)) g^-a
            int const a = s[lo].exponent;
            int const c = canonical_exponent(static_cast<long long>(a) + s[hi - 1].exponent, params);
            h.push_back(s[lo]);
            ++lo;
            if (c == 0)
                --hi;
            else
                s[hi - 1].exponent = c;
        }
    }
    std::span<const Syllable> core(s.data() + lo, hi - lo);
    if (core.size() <= 1) {
        std::optional<Syllable> single;
        if (!core.empty()) single = core.front();
        return {CyclicWord::torsion(params, single), reduce(params, h)};
    }
    // Rotating by t conjugates by the length-t prefix.
    std::vector<int> blocks;
    std::size_t const start = core.front().is_iota() ? 0 : 1;
    for (std::size_t i = 0; i < core.size() / 2; ++i) blocks.push_back(core[(start + 2 * i + 1) % core.size()].exponent);
    CyclicWord cw = CyclicWord::from_blocks(params, blocks);
    std::vector<RankedSyllable> ranked;
    ranked.reserve(core.size());
    for (Syllable x : core) ranked.push_back({x});
    std::size_t const t = least_rotation<RankedSyllable>(ranked);
    h.insert(h.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(t));
    return {std::move(cw), reduce(params, h)};
}

/// Conjugacy-class key; two words are conjugate iff their keys are equal.
inline CyclicWord class_key(Word const& w) { return cyclic_reduce(w).word; }

inline CyclicWord inverse_class(CyclicWord const& c) { return class_key(inverse(c.to_word())); }

enum class InvolutionType { IotaType, TildeGammaType, NotInvolution };

inline InvolutionType involution_type(Word const& w) {
    CyclicWord const c = class_key(w);
    if (c.syllable_count() != 1) return InvolutionType::NotInvolution;
    Syllable const s = c.syllables().front();
    if (s.is_iota()) return InvolutionType::IotaType;
    if (w.params().even() && s.exponent == w.params().half()) return InvolutionType::TildeGammaType;
    return InvolutionType::NotInvolution;
}

/// Element order; nullopt for infinite order.
inline std::optional<long long> element_order(Word const& w) {
    CyclicWord const c = class_key(w);
    if (c.syllable_count() == 0) return 1;
    if (c.syllable_count() >= 2) return std::nullopt;
    Syllable const s = c.syllables().front();
    if (s.is_iota()) return 2;
    long long const p = w.params().p;
    return p / std::gcd(p, static_cast<long long>(std::abs(s.exponent)));
}

struct PrimitiveDecomposition {
    CyclicWord root;
    std::size_t power = 1;
};

/// c = root^power with root primitive, via the rotation period of the blocks.
inline PrimitiveDecomposition primitive_decomposition(CyclicWord const& c) {
    if (c.is_torsion()) throw std::domain_error("primitive decomposition of a torsion class");
    std::size_t const d = rotation_period(c.blocks());
    std::vector<int> root(c.blocks().begin(), c.blocks().begin() + static_cast<std::ptrdiff_t>(d));
    return {CyclicWord::from_blocks(c.params(), root), c.block_count() / d};
}

// ---------------------------------------------------------------------------
// Text syntax: "i" for iota, "g^k" (or "g" for g^1), tokens separated by
// whitespace or '*'. The identity prints as "1"; "1" and "e" parse to it.

inline std::string format_syllables(std::span<const Syllable> s) {
    if (s.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        if (s[i].is_iota())
            out += 'i';
        else
            out += "g^" + std::to_string(s[i].exponent);
    }
    return out;
}

inline std::string format_word(Word const& w) { return format_syllables(w.syllables()); }
inline std::string format_word(CyclicWord const& c) { return format_syllables(c.syllables()); }

inline Word parse_word(GroupParams const& params, std::string_view text) {
    std::vector<Syllable> seq;
    std::size_t pos = 0;
    auto fail = [&](std::string const& what) {
        throw std::invalid_argument("word syntax error at offset " + std::to_string(pos) + ": " + what + " in \"" +
                                    std::string(text) + "\"");
    };
    while (pos < text.size()) {
        char const ch = text[pos];
        if (ch == ' ' || ch == '\t' || ch == '*' || ch == '\n') {
            ++pos;
        } else if (ch == 'i') {
            seq.push_back(Syllable::iota());
            ++pos;
        } else if (ch == '1' || ch == 'e') {
            ++pos;
        } else if (ch == 'g') {
            ++pos;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t const start = pos;
                if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                std::string_view const num = text.substr(start, pos - start);
                if (num.empty() || num == "-" || num == "+") fail("missing exponent after '^'");
                if (num.size() > 9) fail("exponent too large");
                seq.push_back(Syllable::gamma(std::stoi(std::string(num))));
            } else {
                seq.push_back(Syllable::gamma(1));
            }
        } else {
            fail(std::string("unexpected character '") + ch + "'");
        }
    }
    return reduce(params, seq);
}

}  // namespace hecke
