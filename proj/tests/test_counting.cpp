#include "hecke/counting.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {

constexpr auto V = FormulaMode::Verbatim;
constexpr auto C = FormulaMode::Corrected;

std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// Tuples (k1..kn), n >= 1, each ki in (-r, r] \ {0}, weighing n + sum |ki| = x.
long long brute_signed(int x, int r) {
    if (x == 0) return 0;
    long long total = 0;
    auto rec = [&](auto&& self, int left, int n) -> void {
        if (left == 0) {
            total += n > 0;
            return;
        }
        for (int k = -r + 1; k <= r; ++k)
            if (k != 0 && std::abs(k) + 1 <= left) self(self, left - std::abs(k) - 1, n + 1);
    };
    rec(rec, x, 0);
    return total;
}

}  // namespace

TEST(Compositions, SmallValues) {
    EXPECT_EQ(compositions(0, 0), 1);
    EXPECT_EQ(compositions(0, 3), 0);
    EXPECT_EQ(compositions(2, 5), 4);
    EXPECT_EQ(compositions(3, 2), 0);
    EXPECT_EQ(bounded_compositions(2, 2, 3), 2);
    EXPECT_EQ(bounded_compositions(3, 1, 3), 1);
    EXPECT_EQ(bounded_compositions(2, 2, 5), 0);
    EXPECT_EQ(bounded_compositions(0, 4, 0), 1);
    EXPECT_THROW(bounded_compositions(2, 0, 2), std::domain_error);
    EXPECT_THROW(bounded_compositions_ie(2, 0, 2), std::domain_error);
}

TEST(Compositions, MatchBruteForce) {
    for (int n = 0; n <= 6; ++n)
        for (int x = 0; x <= 14; ++x) {
            EXPECT_EQ(compositions(n, x), oracle::compositions(n, x, std::max(x, 1))) << n << " " << x;
            for (int r = 1; r <= 4; ++r) {
                EXPECT_EQ(bounded_compositions(n, r, x), oracle::compositions(n, x, r)) << n << " " << r << " " << x;
                EXPECT_EQ(bounded_compositions_ie(n, r, x), oracle::compositions(n, x, r)) << n << " " << r << " " << x;
            }
        }
}

TEST(SignedSyllables, MatchBruteForce) {
    EXPECT_THROW(signed_syllable_count(3, 0), std::domain_error);
    for (int r = 1; r <= 4; ++r)
        for (int x = 0; x <= 14; ++x) EXPECT_EQ(signed_syllable_count(x, r), brute_signed(x, r)) << r << " " << x;
}

TEST(SignedTupleSum, Examples) {
    EXPECT_EQ(signed_tuple_sum(4, 2, V), 4);
    EXPECT_EQ(signed_tuple_sum(3, 2, V), 0);
    EXPECT_EQ(signed_tuple_sum(3, 2, C), 1);
    EXPECT_THROW(signed_tuple_sum(3, 1, V), std::domain_error);
    EXPECT_STREQ(to_string(V), "verbatim");
    EXPECT_STREQ(to_string(C), "corrected");
}

TEST(SignedTupleSum, CorrectedCountsSignedTuples) {
    for (int r = 2; r <= 5; ++r)
        for (int x = 2; x <= 20; ++x) EXPECT_EQ(signed_tuple_sum(x, r, C), signed_syllable_count(x, r)) << r << " " << x;
}

TEST(Counts, Examples) {
    auto const P4 = make_params(4), P6 = make_params(6);
    EXPECT_EQ(symmetric_count(2, P4), Rational(1));
    EXPECT_EQ(symmetric_count(3, P4), Rational(0));
    EXPECT_EQ(symmetric_count(4, P6), Rational(2));
    EXPECT_EQ(p_reciprocal_count(5, P4), Rational(1));
    EXPECT_EQ(symmetric_p_count(3, P4), Rational(1));
    EXPECT_EQ(symmetric_p_count(7, P4), Rational(1));
    EXPECT_EQ(symmetric_p_count(4, P6), Rational(1));
    EXPECT_FALSE(symmetric_p_nonpower_count(4, P4).has_value());
    EXPECT_EQ(symmetric_p_count(4, P4), Rational(0));
    EXPECT_THROW(symmetric_count(2, make_params(5)), std::domain_error);
}

TEST(Counts, TotalsSelectByParity) {
    auto const P4 = make_params(4), P6 = make_params(6);
    EXPECT_FALSE(total_count_even(3, P4).has_value());
    EXPECT_FALSE(total_count_odd(3, P6).has_value());
    EXPECT_FALSE(total_count_even(0, P6).has_value());
    EXPECT_EQ(*total_count_even(1, P6), Rational(0));
    EXPECT_EQ(*total_count_even(2, P6), Rational(1));
    EXPECT_EQ(*total_count_even(3, P6), Rational(1));
}

TEST(Counts, OddPReciprocalWords) {
    EXPECT_EQ(odd_p_reciprocal_words(1), 0);
    EXPECT_EQ(odd_p_reciprocal_words(2), 2);
    EXPECT_EQ(odd_p_reciprocal_words(3), 2);
    EXPECT_EQ(odd_p_reciprocal_words(4), 6);
    EXPECT_EQ(odd_p_reciprocal_words(5), 10);
    EXPECT_THROW(odd_p_reciprocal_words(0), std::domain_error);
    for (int l = 1; l <= 40; ++l) {
        BigInt const v = odd_p_reciprocal_words(l);
        EXPECT_EQ(3 * v, pow2(static_cast<unsigned>(l)) + (l % 2 == 0 ? 2 : -2));
    }
}

TEST(Recurrence, Extend) {
    auto const a = big({0, 1, 1, 3});
    auto const out = recurrence_extend(a, 3, 1);
    EXPECT_EQ(out, big({0, 1, 1, 3, 4}));
    EXPECT_EQ(recurrence_extend(big({1, 0, 0, 0}), 3, 2), big({1, 0, 0, 0, 1, 0}));
    EXPECT_EQ(recurrence_extend(big({1, 1, 1}), 2, 3), big({1, 1, 1, 3, 3, 7}));
    EXPECT_THROW(recurrence_extend(big({1, 1}), 2, 1), std::domain_error);
    EXPECT_THROW(recurrence_extend(big({1, 1, 1}), 1, 1), std::domain_error);
}

TEST(Recurrence, Linearity) {
    auto const a = big({2, 0, 5, 1, 3}), b = big({1, 4, 0, 0, 7});
    std::vector<BigInt> mix;
    for (std::size_t i = 0; i < a.size(); ++i) mix.push_back(3 * a[i] + 2 * b[i]);
    auto const ea = recurrence_extend(a, 4, 30), eb = recurrence_extend(b, 4, 30), em = recurrence_extend(mix, 4, 30);
    for (std::size_t i = 0; i < em.size(); ++i) EXPECT_EQ(em[i], 3 * ea[i] + 2 * eb[i]);
}

TEST(Recurrence, PositiveSeedsGrow) {
    for (int r = 2; r <= 6; ++r) {
        std::vector<BigInt> seed(static_cast<std::size_t>(r) + 1, 1);
        auto const e = recurrence_extend(seed, r, 40);
        for (std::size_t i = seed.size() + 1; i < e.size(); ++i) EXPECT_GE(e[i], e[i - 1]);
        EXPECT_EQ(recurrence_next<BigInt>(e, r), recurrence_extend(e, r, 1).back());
    }
}

TEST(Recurrence, RationalAndBigIntAgree) {
    std::vector<Rational> q{Rational(1, 2), 0, 3, Rational(5, 2)};
    std::vector<BigInt> z{1, 0, 6, 5};
    EXPECT_EQ(recurrence_next<Rational>(q, 3) * 2, Rational(recurrence_next<BigInt>(z, 3)));
}
