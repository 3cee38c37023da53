#include "crysext/error.hpp"
#include "crysext/galois_field.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <tuple>

using namespace crysext;

namespace {

class FieldAxioms : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(FieldAxioms, HoldExhaustively) {
    const auto [p, f] = GetParam();
    const GaloisField& F = GaloisField::get(p, f);
    const auto q = F.order();
    ASSERT_EQ(q, static_cast<std::uint32_t>(std::pow(p, f)));
    for (GaloisField::Code a = 0; a < q; ++a) {
        EXPECT_EQ(F.add(a, 0), a);
        EXPECT_EQ(F.mul(a, 1), a);
        EXPECT_EQ(F.add(a, F.neg(a)), 0u);
        EXPECT_EQ(F.pow(a, q), a);  // x^q = x
        if (a != 0) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        for (GaloisField::Code b = 0; b < q; ++b) {
            EXPECT_EQ(F.add(a, b), F.add(b, a));
            EXPECT_EQ(F.mul(a, b), F.mul(b, a));
            EXPECT_EQ(F.sub(F.add(a, b), b), a);
            // Frobenius is additive and multiplicative
            EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
            EXPECT_EQ(F.frobenius(F.mul(a, b)), F.mul(F.frobenius(a), F.frobenius(b)));
        }
    }
    std::set<GaloisField::Code> image;
    for (GaloisField::Code a = 0; a < q; ++a) image.insert(F.frobenius(a));
    EXPECT_EQ(image.size(), q);
}

TEST_P(FieldAxioms, DistributiveOnSample) {
    const auto [p, f] = GetParam();
    const GaloisField& F = GaloisField::get(p, f);
    const auto q = F.order();
    for (GaloisField::Code a = 0; a < q; a += 1 + q / 17)
        for (GaloisField::Code b = 0; b < q; ++b)
            for (GaloisField::Code c = 0; c < q; c += 1 + q / 11)
                EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
}

TEST_P(FieldAxioms, PrimitiveElementGeneratesUnits) {
    const auto [p, f] = GetParam();
    const GaloisField& F = GaloisField::get(p, f);
    EXPECT_EQ(F.multiplicative_order(F.primitive_element().code()), F.order() - 1);
}

TEST_P(FieldAxioms, FormatParseRoundTrip) {
    const auto [p, f] = GetParam();
    const GaloisField& F = GaloisField::get(p, f);
    for (GaloisField::Code a = 0; a < F.order(); ++a) EXPECT_EQ(F.parse_code(F.format(a)), a) << F.format(a);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::make_tuple(3, 1), std::make_tuple(3, 2), std::make_tuple(3, 3),
                                           std::make_tuple(5, 1), std::make_tuple(5, 2), std::make_tuple(7, 2),
                                           std::make_tuple(11, 1), std::make_tuple(13, 2)));

TEST(GaloisField, ConwayModuli) {
    EXPECT_EQ(GaloisField::get(3, 2).modulus(), (std::vector<int>{2, 2, 1}));
    EXPECT_EQ(GaloisField::get(5, 2).modulus(), (std::vector<int>{2, 4, 1}));
}

TEST(GaloisField, PrimeFieldGenerator) {
    EXPECT_EQ(GaloisField::get(3, 1).prime_field_generator(), 2);
    EXPECT_EQ(GaloisField::get(5, 1).prime_field_generator(), 2);
    EXPECT_EQ(GaloisField::get(7, 1).prime_field_generator(), 3);
}

TEST(GaloisField, ElementArithmetic) {
    const GaloisField& F5 = GaloisField::get(5, 1);
    EXPECT_EQ(F5.from_int(2).inverse(), F5.from_int(3));
    EXPECT_EQ(F5.from_int(-1), F5.from_int(4));
    EXPECT_EQ(F5.from_int(2) * F5.from_int(2), F5.from_int(4));

    const GaloisField& F9 = GaloisField::get(3, 2);
    const FieldElem a = F9.parse("a");
    // a^2 + 2a + 2 = 0
    EXPECT_TRUE((a * a + F9.from_int(2) * a + F9.from_int(2)).is_zero());
    EXPECT_EQ(F9.parse("2a+1").to_string(), "2a+1");
    EXPECT_EQ(F9.parse("a^2").to_string(), (a * a).to_string());
}

TEST(GaloisField, RejectsBadInput) {
    EXPECT_THROW(GaloisField::get(4, 1), Error);
    EXPECT_THROW(GaloisField::get(2, 1).order(), Error);
    EXPECT_THROW(GaloisField::get(3, 1).parse("a"), Error);
    EXPECT_THROW(GaloisField::get(3, 2).parse("x"), Error);
    EXPECT_THROW(GaloisField::get(3, 1).inv(0), Error);
}

TEST(GaloisField, SameInstanceForSameParameters) {
    EXPECT_EQ(&GaloisField::get(3, 2), &GaloisField::get(3, 2));
}

}  // namespace
