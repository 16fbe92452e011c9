#include <gtest/gtest.h>

#include <random>

#include "origami/rational.hpp"

using origami::Rational;

TEST(Rational, NormalisesOnConstruction) {
    EXPECT_EQ(Rational::make(10, 9).to_string(), "10/9");
    EXPECT_EQ(Rational::make(-4, -6).to_string(), "2/3");
    EXPECT_EQ(Rational::make(0, 7).to_string(), "0");
    EXPECT_EQ(Rational::make(0, 7).denominator(), 1);
    EXPECT_EQ(Rational::make(3, -6).to_string(), "-1/2");
    EXPECT_EQ(Rational::make(8, 4).to_string(), "2");
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational::make(1, 0), origami::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), origami::domain_error);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational::make(2, 9) + Rational::make(10, 9), Rational::make(4, 3));
    EXPECT_EQ(Rational::make(1, 12) * Rational::make(8, 3), Rational::make(2, 9));
    EXPECT_EQ(Rational::make(3, 2) - Rational::make(5, 4), Rational::make(1, 4));
    EXPECT_EQ(Rational::make(3, 2) / Rational::make(3, 4), Rational(2));
    EXPECT_EQ(-Rational::make(1, 3), Rational::make(-1, 3));
    EXPECT_LT(Rational::make(1, 3), Rational::make(1, 2));
    EXPECT_GT(Rational::make(-1, 3), Rational::make(-1, 2));
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("53/28"), Rational::make(53, 28));
    EXPECT_EQ(Rational::parse(" -6/4 "), Rational::make(-3, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), origami::domain_error);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
}

TEST(Rational, FieldAxiomsOnRandomInputs) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
    auto draw = [&] { return Rational::make(num(rng), den(rng)); };
    for (int i = 0; i < 2000; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            EXPECT_EQ(a * (Rational(1) / a), Rational(1));
        }
    }
}

TEST(Rational, RoundTripThroughText) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000), den(1, 1'000'000'000);
    for (int i = 0; i < 2000; ++i) {
        const Rational r = Rational::make(num(rng), den(rng));
        EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
}

TEST(Rational, StaysExactBeyondMachineIntegers) {
    // (2^62 + 1)^2 / (2^62 - 1)^2 needs ~125 bits in numerator and denominator.
    const Rational big = Rational::make((std::int64_t{1} << 62) + 1, (std::int64_t{1} << 62) - 1);
    const Rational sq = big * big;
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ(sq.numerator(), origami::BigInt((std::int64_t{1} << 62) + 1) * origami::BigInt((std::int64_t{1} << 62) + 1));
    Rational h;
    for (int k = 1; k <= 60; ++k) h += Rational::make(1, k);
    EXPECT_EQ(Rational::parse(h.to_string()), h);
    EXPECT_GT(h.denominator(), origami::BigInt(std::numeric_limits<std::int64_t>::max()));
}
