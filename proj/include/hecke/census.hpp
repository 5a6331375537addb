#pragma once

// Brute-force census of conjugacy classes of infinite order by word length.
//
// Classes of infinite order correspond to necklaces of block exponents
// (k1..kn) under rotation; the word length of i g^k1 .. i g^kn is
// n + sum |ki|. The enumerator walks block sequences depth first and keeps
// the ones equal to their own least rotation, so memory stays O(length).

#include "hecke/bigint.hpp"
#include "hecke/reciprocal.hpp"
#include "hecke/words.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hecke {

struct CensusRow {
    std::size_t length = 0;
    BigInt symmetric = 0;
    BigInt p_reciprocal = 0;
    BigInt symmetric_p = 0;
    BigInt power = 0;  // (i g~)^m classes, a subset of symmetric_p
    BigInt reciprocal_total = 0;
    BigInt all_classes = 0;  // every class of infinite order

    CensusRow& operator+=(CensusRow const& o) {
        symmetric += o.symmetric;
        p_reciprocal += o.p_reciprocal;
        symmetric_p += o.symmetric_p;
        power += o.power;
        reciprocal_total += o.reciprocal_total;
        all_classes += o.all_classes;
        return *this;
    }
    friend bool operator==(CensusRow const&, CensusRow const&) = default;
};

struct CensusTable {
    GroupParams params;
    std::size_t max_len = 0;
    std::vector<CensusRow> rows;  // rows[i].length == i + 1, lengths 1..max_len

    CensusRow const& row(std::size_t length) const {
        if (length < 1 || length > rows.size())
            throw std::out_of_range("census has no row for length " + std::to_string(length));
        return rows[length - 1];
    }

    /// Reciprocal total at `length`, 0 outside the table's range below it.
    BigInt total(long long length) const {
        if (length < 1) return 0;
        return row(static_cast<std::size_t>(length)).reciprocal_total;
    }

    friend bool operator==(CensusTable const& a, CensusTable const& b) {
        return a.params == b.params && a.max_len == b.max_len && a.rows == b.rows;
    }
};

/// Canonical nonzero exponents in class-key order (g^1, g^-1, g^2, ...).
inline std::vector<int> canonical_exponents(GroupParams const& params) {
    std::vector<int> ks;
    for (int a = 1; a <= params.max_exponent(); ++a)
        for (int k : {a, -a})
            if (canonical_exponent(k, params) == k) ks.push_back(k);
    return ks;
}

namespace detail {

// Depth-first walk over sequences starting with `first`; calls visit on every
// necklace with weight in [min_len, max_len]. Every later block has rank >=
// rank(first), a necessary condition for first to start a least rotation.
template <class Visit>
void walk_necklaces(std::span<const int> exps, int first, std::size_t min_len,
                    std::size_t max_len, Visit&& visit) {
    std::vector<RankedExponent> cur{{first}};
    std::size_t const first_w = static_cast<std::size_t>(std::abs(first)) + 1;
    if (first_w > max_len) return;
    int const first_rank = exponent_rank(first);
    auto rec = [&](auto&& self, std::size_t weight) -> void {
        if (weight >= min_len && is_necklace<RankedExponent>(cur)) visit(std::span<const RankedExponent>(cur), weight);
        for (int k : exps) {
            if (exponent_rank(k) < first_rank) continue;
            std::size_t const w = weight + static_cast<std::size_t>(std::abs(k)) + 1;
            if (w > max_len) continue;
            cur.push_back({k});
            self(self, w);
            cur.pop_back();
        }
    };
    rec(rec, first_w);
}

inline CyclicWord make_class(GroupParams const& params, std::span<const RankedExponent> seq) {
    std::vector<int> blocks;
    blocks.reserve(seq.size());
    for (auto e : seq) blocks.push_back(e.k);
    return CyclicWord::from_canonical_blocks(params, std::move(blocks));
}

inline void tally(CensusRow& row, ReciprocalInfo const& info) {
    row.all_classes += 1;
    if (!info.is_reciprocal) return;
    row.reciprocal_total += 1;
    switch (info.category) {
        case Category::Symmetric: row.symmetric += 1; break;
        case Category::PReciprocal: row.p_reciprocal += 1; break;
        case Category::SymmetricPReciprocal: row.symmetric_p += 1; break;
        case Category::NotReciprocal: break;
    }
    if (info.is_power_of_iota_tilde_gamma) row.power += 1;
}

inline std::vector<CensusRow> empty_rows(std::size_t max_len) {
    std::vector<CensusRow> rows(max_len);
    for (std::size_t i = 0; i < max_len; ++i) rows[i].length = i + 1;
    return rows;
}

}  // namespace detail

/// Every class of infinite order and word length exactly `length`, in
/// class-key order, each once.
template <class Visit>
void for_each_class_of_length(GroupParams const& params, std::size_t length, Visit&& visit) {
    auto const exps = canonical_exponents(params);
    for (int first : exps)
        detail::walk_necklaces(exps, first, length, length,
                               [&](std::span<const RankedExponent> seq, std::size_t) {
                                   visit(detail::make_class(params, seq));
                               });
}

/// Classes of infinite order with word length <= max_len, ordered by
/// (length, class key).
inline std::vector<CyclicWord> enumerate_classes(GroupParams const& params, std::size_t max_len) {
    if (max_len < 2) throw std::domain_error("max_len must be >= 2");
    std::vector<CyclicWord> out;
    for (std::size_t len = 2; len <= max_len; ++len)
        for_each_class_of_length(params, len, [&](CyclicWord c) { out.push_back(std::move(c)); });
    return out;
}

/// Partial census for the subtree of block sequences whose least rotation
/// starts with `first`.
inline std::vector<CensusRow> census_subtree(GroupParams const& params, std::size_t max_len, int first) {
    auto rows = detail::empty_rows(max_len);
    auto const exps = canonical_exponents(params);
    detail::walk_necklaces(exps, first, 2, max_len, [&](std::span<const RankedExponent> seq, std::size_t w) {
        CyclicWord const c = detail::make_class(params, seq);
        detail::tally(rows[w - 1], classify(c, {.witnesses = false}));
    });
    return rows;
}

/// threads == 0 uses the hardware concurrency. The result does not depend on
/// the thread count: subtrees are keyed by first block and merged by addition.
inline CensusTable census(GroupParams const& params, std::size_t max_len, unsigned threads = 1) {
    if (max_len < 2) throw std::domain_error("max_len must be >= 2");
    auto const firsts = canonical_exponents(params);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(firsts.size()));

    std::vector<std::vector<CensusRow>> partial(firsts.size());
    std::vector<std::exception_ptr> errors(firsts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < firsts.size(); i = next++) {
            try {
                partial[i] = census_subtree(params, max_len, firsts[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (auto const& e : errors)
        if (e) std::rethrow_exception(e);

    CensusTable table{params, max_len, detail::empty_rows(max_len)};
    for (auto const& part : partial)
        for (std::size_t i = 0; i < max_len; ++i) table.rows[i] += part[i];
    return table;
}

}  // namespace hecke
