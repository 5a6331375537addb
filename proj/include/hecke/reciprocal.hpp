#pragma once

// Reciprocity of conjugacy classes and the type of their reciprocators.
//
// A class of infinite order is reciprocal when its block sequence (k1..kn)
// is a rotation of rev-neg(k) = (-kn, ..., -k1). Each such rotation acts on
// the 2n syllable positions of the cyclic word as a reflection with exactly
// two antipodal fixed syllables; a fixed i gives an i-type reciprocator and a
// fixed g^k needs k = -k mod p, i.e. k = r, giving a g^r-type reciprocator.

#include "hecke/words.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Raised when two routes that must agree do not; always a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Category { NotReciprocal, Symmetric, PReciprocal, SymmetricPReciprocal };

inline char const* to_string(Category c) {
    switch (c) {
        case Category::NotReciprocal: return "not_reciprocal";
        case Category::Symmetric: return "symmetric";
        case Category::PReciprocal: return "p_reciprocal";
        case Category::SymmetricPReciprocal: return "symmetric_p";
    }
    return "?";
}

inline char const* to_string(InvolutionType t) {
    switch (t) {
        case InvolutionType::IotaType: return "iota";
        case InvolutionType::TildeGammaType: return "tilde_gamma";
        case InvolutionType::NotInvolution: return "none";
    }
    return "?";
}

struct ReciprocatorTypes {
    bool iota = false;
    bool tilde_gamma = false;

    void add(InvolutionType t) {
        if (t == InvolutionType::IotaType) iota = true;
        if (t == InvolutionType::TildeGammaType) tilde_gamma = true;
    }
    bool empty() const { return !iota && !tilde_gamma; }
    friend bool operator==(ReciprocatorTypes, ReciprocatorTypes) = default;
};

inline Category category_of(ReciprocatorTypes t) {
    if (t.iota && t.tilde_gamma) return Category::SymmetricPReciprocal;
    if (t.iota) return Category::Symmetric;
    if (t.tilde_gamma) return Category::PReciprocal;
    return Category::NotReciprocal;
}

struct ReciprocalInfo {
    bool is_reciprocal = false;
    Category category = Category::NotReciprocal;
    bool is_power_of_iota_tilde_gamma = false;
    std::size_t power_exponent = 0;  // m in (i g^r)^m
    ReciprocatorTypes reciprocator_types;
    std::vector<Word> witnesses;
    std::vector<std::size_t> reflection_offsets;
};

inline void require_infinite_order(CyclicWord const& c) {
    if (c.is_torsion())
        throw std::domain_error("reciprocity is only analysed for classes of infinite order, got \"" +
                                format_word(c) + "\"");
}

/// Block offsets t with rev-neg(k)[(i + t) % n] == k[i] for all i.
inline std::vector<std::size_t> reversal_offsets(CyclicWord const& c) {
    require_infinite_order(c);
    auto const k = c.blocks();
    std::size_t const n = k.size();
    std::vector<int> revneg(n);
    for (std::size_t j = 0; j < n; ++j) revneg[j] = canonical_exponent(-static_cast<long long>(k[n - 1 - j]), c.params());
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < n; ++t) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = revneg[(i + t) % n] == k[i];
        if (ok) out.push_back(t);
    }
    return out;
}

inline bool is_reciprocal(CyclicWord const& c) { return !reversal_offsets(c).empty(); }

struct FixedSyllable {
    std::size_t index = 0;  // syllable position in c.syllables()
    InvolutionType type = InvolutionType::NotInvolution;
    friend bool operator==(FixedSyllable const&, FixedSyllable const&) = default;
};

namespace detail {

// t must already be a valid reversal offset.
inline std::array<FixedSyllable, 2> fixed_syllables_at(CyclicWord const& c, std::size_t t) {
    std::size_t const n = c.block_count();
    std::size_t const m = 2 * n;
    // pos -> (2n - 2t - pos) mod 2n; fixed where pos = n - t (mod n)
    std::size_t const f1 = (n - t) % m;
    std::size_t const f2 = (f1 + n) % m;
    std::array<FixedSyllable, 2> out{};
    std::size_t slot = 0;
    for (std::size_t pos : {std::min(f1, f2), std::max(f1, f2)}) {
        Syllable const s = c.syllables()[pos];
        InvolutionType type = InvolutionType::IotaType;
        if (!s.is_iota()) {
            if (!c.params().even() || s.exponent != c.params().half())
                throw internal_error("reflection fixes g^" + std::to_string(s.exponent) + " which is not an involution");
            type = InvolutionType::TildeGammaType;
        }
        out[slot++] = {pos, type};
    }
    return out;
}

}  // namespace detail

/// The two syllables fixed by the reflection belonging to offset t, in
/// increasing position order.
inline std::array<FixedSyllable, 2> reflection_fixed_syllables(CyclicWord const& c, std::size_t t) {
    auto const offsets = reversal_offsets(c);
    if (std::find(offsets.begin(), offsets.end(), t) == offsets.end())
        throw std::domain_error("offset " + std::to_string(t) + " is not a reversal offset of \"" + format_word(c) + "\"");
    return detail::fixed_syllables_at(c, t);
}

/// Second, independent route to the reciprocator types. A rotation of c^-1
/// onto c gives h0 with h0 c h0^-1 = c^-1; every h0 * c0^j (c0 the primitive
/// root) does the same, and these split into two dihedral families by the
/// parity of j. Returns the shortest involution found in each family.
inline std::vector<Word> reciprocator_witnesses(CyclicWord const& c) {
    require_infinite_order(c);
    GroupParams const& params = c.params();
    Word const cw = c.to_word();
    Word const inv = inverse(cw);
    auto const target = cw.syllables();
    auto const src = inv.syllables();
    std::size_t const m = src.size();

    std::optional<Word> h0;
    for (std::size_t s = 0; s < m && !h0; ++s) {
        bool eq = true;
        for (std::size_t i = 0; i < m && eq; ++i) eq = src[(i + s) % m] == target[i];
        if (eq) h0 = reduce(params, src.first(s));
    }
    if (!h0) throw std::domain_error("\"" + format_word(c) + "\" is not reciprocal");

    std::size_t const d = rotation_period(c.blocks());
    Word const root = reduce(params, target.first(2 * d));
    Word const root_inv = inverse(root);
    long long const bound = 2 * static_cast<long long>(c.block_count());

    std::array<std::optional<Word>, 2> best;
    auto consider = [&](Word const& h, long long j) {
        if (h.is_identity() || !multiply(h, h).is_identity()) return;
        if (!(multiply(multiply(h, cw), inverse(h)) == inv))
            throw internal_error("coset element fails to conjugate \"" + format_word(c) + "\" to its inverse");
        auto& slot = best[static_cast<std::size_t>(((j % 2) + 2) % 2)];
        if (!slot || word_length(h) < word_length(*slot)) slot = h;
    };
    // j = 0, 1, -1, 2, -2, ... so ties keep the smallest |j|
    Word up = *h0, down = *h0;
    consider(*h0, 0);
    for (long long j = 1; j <= bound; ++j) {
        up = multiply(up, root);
        down = multiply(down, root_inv);
        consider(up, j);
        consider(down, -j);
    }
    std::vector<Word> out;
    for (auto& w : best)
        if (w) out.push_back(*w);
    if (out.empty()) throw internal_error("no involution in the reciprocator coset of \"" + format_word(c) + "\"");
    std::sort(out.begin(), out.end(), [](Word const& a, Word const& b) {
        if (word_length(a) != word_length(b)) return word_length(a) < word_length(b);
        return format_word(a) < format_word(b);
    });
    return out;
}

inline ReciprocatorTypes witness_types(std::vector<Word> const& witnesses) {
    ReciprocatorTypes t;
    for (auto const& w : witnesses) t.add(involution_type(w));
    return t;
}

struct ClassifyOptions {
    bool witnesses = true;
};

inline ReciprocalInfo classify(CyclicWord const& c, ClassifyOptions opts = {}) {
    ReciprocalInfo info;
    info.reflection_offsets = reversal_offsets(c);
    if (info.reflection_offsets.empty()) return info;
    info.is_reciprocal = true;
    for (std::size_t t : info.reflection_offsets)
        for (auto const& f : detail::fixed_syllables_at(c, t)) info.reciprocator_types.add(f.type);
    info.category = category_of(info.reciprocator_types);
    if (c.params().even()) {
        int const r = c.params().half();
        auto const b = c.blocks();
        if (std::all_of(b.begin(), b.end(), [r](int k) { return k == r; })) {
            info.is_power_of_iota_tilde_gamma = true;
            info.power_exponent = b.size();
        }
    }
    if (opts.witnesses) info.witnesses = reciprocator_witnesses(c);
    return info;
}

// ---------------------------------------------------------------------------
// Normal forms for even p.

/// All (k1..kn), n >= min_blocks, canonical nonzero exponents, with
/// n + sum |ki| == weight.
inline std::vector<std::vector<int>> signed_block_tuples(GroupParams const& params, int weight, int min_blocks) {
    std::vector<std::vector<int>> out;
    if (weight < 0) return out;
    int const kmax = params.max_exponent();
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            if (static_cast<int>(cur.size()) >= min_blocks) out.push_back(cur);
            return;
        }
        for (int a = 1; a <= kmax && a + 1 <= left; ++a) {
            for (int sgn : {1, -1}) {
                int const k = sgn * a;
                if (canonical_exponent(k, params) != k) continue;
                cur.push_back(k);
                self(self, left - a - 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, weight);
    return out;
}

/// Classes of word length `length` with a representative of one of the forms
///   (1) i g^k1 .. i g^kn i g^-kn .. i g^-k1
///   (2) i g~ i g^k1 .. i g^kn i g~ i g^-kn .. i g^-k1
///   (3) i g~ i g^k1 .. i g^kn i g^-kn .. i g^-k1,  i g^k1 .. i g^kn i g~ i g^-kn .. i g^-k1
///   and (i g~)^m,
/// deduplicated by class key and sorted.
inline std::vector<CyclicWord> normal_form_generate(GroupParams const& params, int length) {
    if (!params.even()) throw std::domain_error("normal forms are defined for even p only");
    if (length < 2) throw std::domain_error("normal form length must be >= 2");
    int const r = params.half();
    std::set<CyclicWord> found;
    auto revneg = [&](std::vector<int> const& a) {
        std::vector<int> out;
        for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(canonical_exponent(-static_cast<long long>(*it), params));
        return out;
    };
    auto emit = [&](std::vector<int> const& blocks) {
        CyclicWord c = CyclicWord::from_blocks(params, blocks);
        if (static_cast<int>(c.length()) != length) throw internal_error("normal form has the wrong length");
        found.insert(std::move(c));
    };
    auto cat = [](std::initializer_list<std::vector<int>> parts) {
        std::vector<int> out;
        for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    };
    std::vector<int> const tilde{r};

    if (length % 2 == 0) {
        for (auto const& a : signed_block_tuples(params, length / 2, 1)) emit(cat({a, revneg(a)}));
        for (auto const& a : signed_block_tuples(params, length / 2 - (r + 1), 0))
            emit(cat({tilde, a, tilde, revneg(a)}));
    }
    if ((length - r - 1) >= 0 && (length - r - 1) % 2 == 0) {
        for (auto const& a : signed_block_tuples(params, (length - r - 1) / 2, 0)) {
            emit(cat({tilde, a, revneg(a)}));
            emit(cat({a, tilde, revneg(a)}));
        }
    }
    if (length % (r + 1) == 0) emit(std::vector<int>(static_cast<std::size_t>(length / (r + 1)), r));
    return {found.begin(), found.end()};
}

}  // namespace hecke
