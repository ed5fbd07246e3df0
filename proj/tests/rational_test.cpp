#include <gtest/gtest.h>

#include <sstream>
#include <unordered_set>

#include "hypermat/rational.hpp"

using hypermat::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_TRUE(Rational(6, 3).is_integer());
  EXPECT_TRUE(Rational().is_zero());
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("5/2"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("0.5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("+3/9"), Rational(1, 3));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890"),
            Rational(mpz_class("123456789012345678901234567890")));
}

TEST(Rational, ParseRejects) {
  for (const char* bad : {"", "1/0", "1e3", "abc", "1/2/3", ".", "1.2.3",
                          "--1", "1/-2", " 1"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(Rational, OrderingAndRounding) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).ceil(), 4);
  EXPECT_EQ(hypermat::min(Rational(1), Rational(2)), Rational(1));
  EXPECT_EQ(hypermat::abs(Rational(-3, 4)), Rational(3, 4));
}

TEST(Rational, LargeIntegers) {
  Rational big(static_cast<long long>(1) << 62);
  EXPECT_EQ((big * big).str(), "21267647932558653966460912964485513216");
}

TEST(Rational, StreamAndHash) {
  std::ostringstream os;
  os << Rational(-2, 3);
  EXPECT_EQ(os.str(), "-2/3");
  std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4)};
  EXPECT_EQ(set.size(), 1u);
}
