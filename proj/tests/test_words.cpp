#include "hecke/words.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hecke;

namespace {

Word W(int p, char const* text) { return parse_word(make_params(p), text); }

Word random_word(GroupParams const& params, std::mt19937& rng, int max_syllables) {
    std::uniform_int_distribution<int> len(0, max_syllables), kind(0, 1), ex(-2 * params.p, 2 * params.p);
    std::vector<Syllable> seq;
    for (int i = len(rng); i > 0; --i) seq.push_back(kind(rng) ? Syllable::iota() : Syllable::gamma(ex(rng)));
    return reduce(params, seq);
}

oracle::Seq encode(Word const& w) {
    oracle::Seq s;
    for (auto x : w.syllables()) s.push_back(x.is_iota() ? 0 : x.exponent);
    return s;
}

}  // namespace

TEST(Params, MakeParams) {
    auto const p4 = make_params(4);
    EXPECT_EQ(p4.p, 4);
    EXPECT_EQ(p4.r, 2);
    EXPECT_EQ(p4.u, 1);
    auto const p6 = make_params(6);
    EXPECT_EQ(p6.r, 3);
    EXPECT_EQ(p6.u, 1);
    EXPECT_FALSE(make_params(5).r.has_value());
    EXPECT_THROW(make_params(2), std::domain_error);
    EXPECT_THROW(make_params(5).half(), std::domain_error);
}

TEST(Params, CanonicalExponent) {
    EXPECT_EQ(canonical_exponent(-2, make_params(4)), 2);
    EXPECT_EQ(canonical_exponent(5, make_params(6)), -1);
    EXPECT_EQ(canonical_exponent(3, make_params(6)), 3);
    EXPECT_EQ(canonical_exponent(2, make_params(5)), 2);
    EXPECT_EQ(canonical_exponent(3, make_params(5)), -2);
    EXPECT_EQ(canonical_exponent(-12, make_params(6)), 0);
}

TEST(Words, ReduceExamples) {
    auto const P = make_params(4);
    EXPECT_TRUE(reduce(P, std::vector{Syllable::iota(), Syllable::iota()}).is_identity());
    EXPECT_TRUE(reduce(P, std::vector{Syllable::gamma(2), Syllable::gamma(-2)}).is_identity());
    EXPECT_TRUE(
        reduce(P, std::vector{Syllable::iota(), Syllable::gamma(2), Syllable::gamma(2), Syllable::iota()}).is_identity());
    EXPECT_EQ(format_word(reduce(P, std::vector{Syllable::gamma(1), Syllable::gamma(1), Syllable::iota()})), "g^2 i");
}

TEST(Words, MultiplyInverse) {
    EXPECT_TRUE(multiply(W(6, "i g^2"), W(6, "g^-2 i")).is_identity());
    EXPECT_EQ(inverse(W(6, "i g^3")), W(6, "g^3 i"));
    EXPECT_TRUE(inverse(Word::identity(make_params(6))).is_identity());
    EXPECT_THROW(multiply(W(4, "i"), W(6, "i")), std::domain_error);
}

TEST(Words, Length) {
    EXPECT_EQ(word_length(W(6, "i g^3")), 4u);
    EXPECT_EQ(word_length(W(4, "i g i g^-1")), 4u);
    EXPECT_EQ(word_length(Word::identity(make_params(4))), 0u);
}

TEST(Words, ParseFormat) {
    auto const P = make_params(6);
    EXPECT_EQ(format_word(parse_word(P, "i*g*i*g^-1")), "i g^1 i g^-1");
    EXPECT_EQ(format_word(parse_word(P, "  g^7 ")), "g^1");
    EXPECT_EQ(format_word(parse_word(P, "1")), "1");
    EXPECT_TRUE(parse_word(P, "e").is_identity());
    EXPECT_THROW(parse_word(P, "i x"), std::invalid_argument);
    EXPECT_THROW(parse_word(P, "g^"), std::invalid_argument);
    EXPECT_THROW(parse_word(P, "g^2x"), std::invalid_argument);
}

TEST(CyclicReduce, Examples) {
    auto const red = cyclic_reduce(W(6, "g^2 i g i g^-2"));
    EXPECT_EQ(format_word(red.word), "g^1");
    EXPECT_TRUE(red.word.is_torsion());
    EXPECT_EQ(multiply(multiply(red.conjugator, red.word.to_word()), inverse(red.conjugator)), W(6, "g^2 i g i g^-2"));

    auto const same = cyclic_reduce(W(4, "i g i g^-1"));
    EXPECT_EQ(format_word(same.word), "i g^1 i g^-1");
    EXPECT_TRUE(same.conjugator.is_identity());

    auto const iota = cyclic_reduce(W(4, "i"));
    EXPECT_EQ(format_word(iota.word), "i");
    EXPECT_TRUE(iota.conjugator.is_identity());
}

TEST(ClassKey, Examples) {
    EXPECT_EQ(format_word(class_key(W(4, "g i g^-1 i"))), "i g^1 i g^-1");
    EXPECT_EQ(format_word(class_key(W(4, "i g^-1 i g"))), "i g^1 i g^-1");
    EXPECT_EQ(format_word(class_key(W(4, "g^2"))), "g^2");
    EXPECT_EQ(class_key(Word::identity(make_params(4))).syllable_count(), 0u);
}

TEST(ClassKey, FromBlocksIsLeastRotation) {
    auto const P = make_params(6);
    auto const c = CyclicWord::from_blocks(P, {3, -1, 1, 2});
    EXPECT_EQ(std::vector<int>(c.blocks().begin(), c.blocks().end()), (std::vector<int>{1, 2, 3, -1}));
    EXPECT_EQ(c.length(), 11u);
    EXPECT_THROW(CyclicWord::from_blocks(P, {1, 6}), std::domain_error);
    EXPECT_THROW(CyclicWord::from_blocks(P, std::span<const int>{}), std::domain_error);
}

TEST(Involutions, Types) {
    EXPECT_EQ(involution_type(W(6, "i")), InvolutionType::IotaType);
    EXPECT_EQ(involution_type(W(6, "i g^3 i")), InvolutionType::TildeGammaType);
    EXPECT_EQ(involution_type(W(6, "i g^3")), InvolutionType::NotInvolution);
    EXPECT_EQ(involution_type(W(6, "g i g^-1")), InvolutionType::IotaType);
    EXPECT_EQ(involution_type(W(6, "g^2")), InvolutionType::NotInvolution);
    EXPECT_EQ(involution_type(W(5, "g^2")), InvolutionType::NotInvolution);
}

TEST(Order, ElementOrderAndPrimitive) {
    EXPECT_EQ(element_order(W(6, "g^2")), 3);
    EXPECT_EQ(element_order(W(6, "i")), 2);
    EXPECT_EQ(element_order(Word::identity(make_params(6))), 1);
    EXPECT_FALSE(element_order(W(6, "i g")).has_value());
    EXPECT_EQ(element_order(W(5, "g i g^2 i g^-1")), 5);
    EXPECT_EQ(element_order(W(5, "g^2 i g^-2")), 2);

    auto const P = make_params(4);
    auto const d = primitive_decomposition(CyclicWord::from_blocks(P, {2, 2}));
    EXPECT_EQ(format_word(d.root), "i g^2");
    EXPECT_EQ(d.power, 2u);
    auto const e = primitive_decomposition(CyclicWord::from_blocks(P, {1, -1}));
    EXPECT_EQ(format_word(e.root), "i g^1 i g^-1");
    EXPECT_EQ(e.power, 1u);
    EXPECT_THROW(primitive_decomposition(class_key(W(4, "i"))), std::domain_error);
}

TEST(Necklace, LeastRotationMatchesNaive) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        std::uniform_int_distribution<int> len(1, 9), val(0, 2);
        std::vector<int> v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = val(rng);
        std::vector<int> best = v;
        std::size_t best_t = 0;
        for (std::size_t t = 0; t < v.size(); ++t) {
            auto r = rotated<int>(v, t);
            if (r < best) {
                best = r;
                best_t = t;
            }
        }
        EXPECT_EQ(least_rotation<int>(v), best_t);
        EXPECT_EQ(is_necklace<int>(v), best == v);
        std::size_t period = v.size();
        for (std::size_t d = 1; d <= v.size(); ++d)
            if (v.size() % d == 0 && rotated<int>(v, d) == v) {
                period = d;
                break;
            }
        EXPECT_EQ(rotation_period<int>(v), period);
    }
}

class GroupLaw : public ::testing::TestWithParam<int> {};

TEST_P(GroupLaw, RandomizedProperties) {
    auto const P = make_params(GetParam());
    std::mt19937 rng(1000 + static_cast<unsigned>(GetParam()));
    for (int i = 0; i < 1500; ++i) {
        Word const a = random_word(P, rng, 9), b = random_word(P, rng, 9), c = random_word(P, rng, 9);
        ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        ASSERT_TRUE(multiply(a, inverse(a)).is_identity());
        ASSERT_EQ(inverse(inverse(a)), a);
        ASSERT_EQ(reduce(P, a.syllables()), a);
        ASSERT_EQ(class_key(multiply(multiply(b, a), inverse(b))), class_key(a));
        auto const red = cyclic_reduce(a);
        ASSERT_EQ(multiply(multiply(red.conjugator, red.word.to_word()), inverse(red.conjugator)), a);
        ASSERT_EQ(parse_word(P, format_word(a)), a);
        // independent reduction and class key
        ASSERT_EQ(oracle::mul(encode(a), encode(b), P.p), encode(multiply(a, b)));
        if (red.word.syllable_count() >= 2) {
            ASSERT_EQ(oracle::key(encode(red.word.to_word())), encode(red.word.to_word()));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(AllP, GroupLaw, ::testing::Range(3, 13));
