#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace avgord;

TEST(Rational, AlwaysReduced) {
  Rational r(BigInt(62), BigInt(24));
  EXPECT_EQ(r.num(), 31);
  EXPECT_EQ(r.den(), 12);
  Rational n(BigInt(3), BigInt(-6));
  EXPECT_EQ(n.num(), -1);
  EXPECT_EQ(n.den(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-5)).den(), 1);
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(BigInt(1), BigInt(0)), InvalidArgument); }

TEST(Rational, ArithmeticIsExact) {
  Rational a(BigInt(1), BigInt(3)), b(BigInt(1), BigInt(6));
  EXPECT_EQ(a + b, Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(a - b, Rational(BigInt(1), BigInt(6)));
  EXPECT_EQ(a * b, Rational(BigInt(1), BigInt(18)));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_THROW(a / Rational(0), InvalidArgument);
}

TEST(Rational, OrderingAroundThreshold) {
  const Rational t(BigInt(31), BigInt(12));
  EXPECT_LT(Rational(BigInt(43), BigInt(18)), t);
  EXPECT_GT(Rational(BigInt(67), BigInt(24)), t);
  EXPECT_EQ(Rational(BigInt(62), BigInt(24)), t);
  EXPECT_LT(Rational(BigInt(-1), BigInt(2)), Rational(0));
}

TEST(Rational, HugeValuesStayExact) {
  BigInt big = boost::multiprecision::pow(BigInt(3), 200);
  Rational r(big + 1, big);
  EXPECT_GT(r, Rational(1));
  EXPECT_EQ(r - Rational(1), Rational(BigInt(1), big));
}

TEST(Rational, Rendering) {
  Rational a4(BigInt(31), BigInt(12));
  EXPECT_EQ(a4.str(), "31/12");
  EXPECT_EQ(a4.decimal(6), "2.583333");
  EXPECT_EQ(Rational(BigInt(211), BigInt(60)).decimal(6), "3.516667");
  EXPECT_EQ(Rational(BigInt(2), BigInt(3)).decimal(6), "0.666667");
  EXPECT_EQ(Rational(BigInt(-1), BigInt(8)).decimal(2), "-0.13");
  EXPECT_EQ(Rational(3).str(), "3/1");
  EXPECT_EQ(Rational(3).decimal(0), "3");
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("31/12"), Rational(BigInt(31), BigInt(12)));
  EXPECT_EQ(Rational::parse("62/24"), Rational(BigInt(31), BigInt(12)));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("211/60").str(), "211/60");
  EXPECT_THROW(Rational::parse("1/0"), InvalidArgument);
  EXPECT_THROW(Rational::parse("a/b"), InvalidArgument);
  EXPECT_THROW(Rational::parse(""), InvalidArgument);
  EXPECT_THROW(Rational::parse("1/"), InvalidArgument);
}

TEST(NumberTheory, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(2), 1u);
  EXPECT_EQ(euler_phi(12), 4u);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++count;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
  EXPECT_THROW(euler_phi(0), InvalidArgument);
}

TEST(NumberTheory, PrimesAndPowers) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(29));
  EXPECT_FALSE(is_prime(27));
  EXPECT_EQ(prime_divisors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_TRUE(prime_divisors(1).empty());
  EXPECT_EQ(p_part(72, 2), 8u);
  EXPECT_EQ(p_part(72, 3), 9u);
  EXPECT_EQ(p_part(72, 5), 1u);
  EXPECT_TRUE(is_power_of(1, 3));
  EXPECT_TRUE(is_power_of(64, 4));
  EXPECT_FALSE(is_power_of(32, 4));
  EXPECT_TRUE(is_power_of(16, 4));
  EXPECT_FALSE(is_power_of(12, 2));
}
