#include <gtest/gtest.h>

#include <random>

#include "cantor/errors.hpp"
#include "cantor/rational.hpp"

using cantor::Integer;
using cantor::Rational;

TEST(Rational, ConstructionIsCanonical) {
  EXPECT_EQ(Rational(14, 12).to_string(), "7/6");
  EXPECT_EQ(Rational(0, 5).to_string(), "0/1");
  EXPECT_EQ(Rational(7, -6).to_string(), "-7/6");
  EXPECT_EQ(Rational(-4, -8).to_string(), "1/2");
  EXPECT_THROW(Rational(1, 0), cantor::ArithmeticError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(7) * Rational(1, 6), Rational(7, 6));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 18), Rational(5, 9));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 2), Rational(0));
  EXPECT_EQ(Rational(7, 6) / Rational(7), Rational(1, 6));
  EXPECT_THROW(Rational(1) / Rational(0), cantor::ArithmeticError);
}

TEST(Rational, BeyondFixedWidth) {
  // 3^200 overflows every built-in integer type.
  const Rational tiny = cantor::inverse_pow3(200);
  EXPECT_EQ(tiny * Rational(cantor::pow3(200), Integer(1)), Rational(1));
  EXPECT_EQ((tiny + tiny).denominator(), cantor::pow3(200));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-7/6"), Rational(-7, 6));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  for (const char* bad : {"0.5", "", "-", "1/", "/2", "1/0", "1 /2", "+1", "1/-2", "abc", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), cantor::ParseError) << bad;
  }
}

TEST(Rational, CompactString) {
  EXPECT_EQ(Rational(0).to_compact_string(), "0");
  EXPECT_EQ(Rational(-7, 6).to_compact_string(), "-7/6");
  EXPECT_EQ(Rational(9).to_string(), "9/1");
}

TEST(Rational, Decimal) {
  EXPECT_EQ(Rational(7, 6).to_decimal(6), "1.16667");
  EXPECT_EQ(Rational(1, 3).to_decimal(3), "0.333");
  EXPECT_EQ(Rational(-5, 9).to_decimal(4), "-0.5556");
  EXPECT_EQ(Rational(0).to_decimal(12), "0.000000000000");
  EXPECT_EQ(Rational(1).to_decimal(12), "1.00000000000");
  EXPECT_EQ(Rational(1, 6).to_decimal(12), "0.166666666667");
  EXPECT_EQ(Rational(9).to_decimal(12), "9.00000000000");
  EXPECT_EQ(Rational(123456).to_decimal(3), "123000");
  EXPECT_EQ(Rational(1, 1000).to_decimal(2), "0.0010");
  // Carry into a new leading digit.
  EXPECT_EQ(Rational(9999, 1000).to_decimal(3), "10.0");
  EXPECT_EQ(Rational(-99999, 100000).to_decimal(2), "-1.0");
}

TEST(Rational, DecimalRoundsHalfToEven) {
  EXPECT_EQ(Rational(5, 2).to_decimal(1), "2");
  EXPECT_EQ(Rational(7, 2).to_decimal(1), "4");
  EXPECT_EQ(Rational(-5, 2).to_decimal(1), "-2");
  EXPECT_EQ(Rational(125, 1000).to_decimal(2), "0.12");
  EXPECT_EQ(Rational(135, 1000).to_decimal(2), "0.14");
  // Just above a tie rounds up.
  EXPECT_EQ(Rational(1250001, 10000000).to_decimal(2), "0.13");
}

TEST(Rational, DecimalAgreesWithDouble) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 999983);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    EXPECT_NEAR(std::stod(r.to_decimal(12)), r.to_double(), 1e-10 * std::max(1.0, std::abs(r.to_double())));
  }
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> num(-1000000000, 1000000000);
  std::uniform_int_distribution<long> den(1, 1000000000);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), Rational(0));
    if (!a.is_zero()) EXPECT_EQ(a * (Rational(1) / a), Rational(1));
    for (const Rational& r : {a + b, a - b, a * b}) {
      EXPECT_GE(r.denominator(), 1);
      EXPECT_EQ(gcd(r.numerator(), r.denominator()), 1);
    }
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}
