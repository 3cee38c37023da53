#include "crysext/characters.hpp"
#include "crysext/error.hpp"

#include <gtest/gtest.h>

#include <set>
#include <utility>

using namespace crysext;

namespace {

TEST(Context, DerivedQuantities) {
    const Context ctx(5, 3, 2);
    EXPECT_EQ(ctx.e_prime(), 12);
    EXPECT_EQ(ctx.ring_length(), 60);
    EXPECT_EQ(ctx.tame_order(), 4);
    EXPECT_EQ(ctx.reduce(-1), 3);
    EXPECT_EQ(ctx.field().order(), 25u);
    EXPECT_TRUE(ctx.cyclotomic_scalar().is_one());
}

TEST(Context, RejectsBadParameters) {
    EXPECT_THROW(Context(2, 1), Error);
    EXPECT_THROW(Context(9, 1), Error);
    EXPECT_THROW(Context(3, 0), Error);
    EXPECT_THROW(Context(3, 1, 0), Error);
    const Context c(3, 1);
    EXPECT_THROW(Context(3, 1, 1, c.field().zero()), Error);
}

TEST(WeightEquivalence, Examples) {
    const Context ctx(3, 1);
    EXPECT_TRUE(weight_equivalent({2, 0}, {4, 2}, ctx));
    EXPECT_FALSE(weight_equivalent({2, 0}, {3, 1}, ctx));
    EXPECT_TRUE(weight_equivalent({1, 0}, {1, 0}, ctx));
    EXPECT_THROW(weight_equivalent({3, 0}, {1, 0}, ctx), Error);
    EXPECT_THROW(weight_equivalent({0, 1}, {1, 0}, ctx), Error);
}

TEST(WeightEquivalence, ClassCount) {
    for (int p : {3, 5, 7}) {
        const Context ctx(p, 1);
        std::vector<SerreWeight> ws;
        for (int a2 = 0; a2 < p * (p - 1); ++a2)
            for (int d = 0; d <= p - 1; ++d) ws.push_back({a2 + d, a2});
        std::vector<SerreWeight> reps;
        for (const auto& w : ws) {
            bool seen = false;
            for (const auto& r : reps) seen = seen || weight_equivalent(w, r, ctx);
            if (!seen) reps.push_back(w);
        }
        EXPECT_EQ(static_cast<int>(reps.size()), p * (p - 1));
        // equivalence relation on a sample: symmetric and transitive
        for (std::size_t i = 0; i < ws.size(); i += 7)
            for (std::size_t j = 0; j < ws.size(); j += 5) {
                EXPECT_EQ(weight_equivalent(ws[i], ws[j], ctx), weight_equivalent(ws[j], ws[i], ctx));
                for (std::size_t k = 0; k < ws.size(); k += 13)
                    if (weight_equivalent(ws[i], ws[j], ctx) && weight_equivalent(ws[j], ws[k], ctx))
                        EXPECT_TRUE(weight_equivalent(ws[i], ws[k], ctx));
            }
    }
}

TEST(Characters, GroupLaw) {
    const Context ctx(5, 1);
    const FullChar chi = make_char(ctx, 1, 2);
    EXPECT_TRUE(char_mul(chi, char_inv(chi)).is_trivial());
    EXPECT_EQ(char_mul(make_char(ctx, 1), make_char(ctx, 3)), trivial_char(ctx));
    EXPECT_EQ(char_mul(chi, chi), make_char(ctx, 2, 4));
    EXPECT_EQ(char_pow(chi, 4), trivial_char(ctx));
    EXPECT_EQ(char_pow(chi, -1), char_inv(chi));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int s = 1; s < 5; ++s) {
                const FullChar x = make_char(ctx, a, s);
                const FullChar y = make_char(ctx, b, 5 - s);
                EXPECT_EQ(char_mul(x, y), char_mul(y, x));
            }
}

TEST(Characters, Unramified) {
    const Context ctx(3, 1);
    EXPECT_TRUE(make_char(ctx, 2, 2).is_unramified());
    EXPECT_FALSE(make_char(ctx, 2, 2).is_trivial());
    EXPECT_FALSE(make_char(ctx, 1).is_unramified());
    EXPECT_THROW(make_char(ctx, 0, 0), Error);
}

TEST(Cyclotomic, Examples) {
    EXPECT_EQ(cyclotomic(Context(3, 2)).exponent(), 0);
    EXPECT_EQ(cyclotomic(Context(5, 1)), make_char(Context(5, 1), 1, 1));
    EXPECT_EQ(cyclotomic(Context(3, 3)), make_char(Context(3, 3), 1, 1));
    const Context scaled(5, 2, 1, GaloisField::get(5, 1).from_int(3));
    EXPECT_EQ(cyclotomic(scaled), make_char(scaled, 2, 3));
    for (int p : {3, 5, 7})
        for (int e = 1; e <= 4; ++e) EXPECT_TRUE(char_pow(cyclotomic(Context(p, e)), p - 1).is_unramified());
}

TEST(Niveau2, FrobeniusConjugate) {
    EXPECT_EQ(niveau2_frobenius_conjugate(InertialChar2(0, 3)).exponent(), 0);
    EXPECT_EQ(niveau2_frobenius_conjugate(InertialChar2(1, 3)).exponent(), 3);
    EXPECT_EQ(niveau2_frobenius_conjugate(InertialChar2(3, 3)).exponent(), 1);
    EXPECT_EQ(niveau2_frobenius_conjugate(InertialChar2(7, 5)).exponent(), 11);
    for (int p : {3, 5, 7})
        for (int n = 0; n < p * p - 1; ++n) {
            const InertialChar2 chi(n, p);
            EXPECT_EQ(niveau2_frobenius_conjugate(niveau2_frobenius_conjugate(chi)), chi);
        }
}

TEST(InertialChar, Reduction) {
    EXPECT_EQ(InertialChar1(-1, 5).exponent(), 3);
    EXPECT_EQ(InertialChar1(9, 5).exponent(), 1);
    EXPECT_EQ(InertialChar2(-1, 3).exponent(), 7);
    EXPECT_EQ(InertialChar2(24, 5).exponent(), 0);
}

}  // namespace
