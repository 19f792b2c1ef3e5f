#include <gtest/gtest.h>

#include <stdexcept>

#include "tilebalance/rational.hpp"

using tilebalance::BigInt;
using tilebalance::Rational;

TEST(Rational, NormalizesSignAndGcd) {
    const Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).str(), "0");
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Arithmetic) {
    const Rational a = Rational::parse("2/3");
    const Rational b = Rational::parse("1/6");
    EXPECT_EQ(a + b, Rational::parse("5/6"));
    EXPECT_EQ(a - b, Rational::parse("1/2"));
    EXPECT_EQ(a * b, Rational::parse("1/9"));
    EXPECT_EQ(a / b, Rational(4));
    EXPECT_EQ(-a, Rational::parse("-2/3"));
    EXPECT_EQ(a.reciprocal(), Rational::parse("3/2"));
    EXPECT_EQ((-a).abs(), a);
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational::parse("34/11"), Rational::parse("10/3"));
    EXPECT_GT(Rational::parse("-1/3"), Rational::parse("-1/2"));
    EXPECT_LE(Rational(3), Rational::parse("6/2"));
}

TEST(Rational, ParseRejectsGarbage) {
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("a/2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
    EXPECT_EQ(Rational::parse("  -4/8 "), Rational::parse("-1/2"));
}

TEST(Rational, NoOverflowOnLargeProducts) {
    Rational r(1);
    for (int i = 0; i < 40; ++i) r *= Rational(BigInt(1000000007), BigInt(3));
    for (int i = 0; i < 40; ++i) r /= Rational(BigInt(1000000007), BigInt(3));
    EXPECT_EQ(r, Rational(1));
}

TEST(Rational, ToDouble) {
    EXPECT_DOUBLE_EQ(Rational::parse("1/4").to_double(), 0.25);
    EXPECT_NEAR(Rational::parse("34/11").to_double(), 34.0 / 11.0, 1e-15);
}
