#include <random>

#include <gtest/gtest.h>

#include "meshsum/error.hpp"
#include "meshsum/rational.hpp"

namespace meshsum {
namespace {

BigRational q(std::int64_t n, std::int64_t d) { return BigRational(BigInt(n), BigInt(d)); }

TEST(BigRational, TextbookArithmetic) {
  EXPECT_EQ(rational_add(q(1, 2), q(1, 3)), q(5, 6));
  EXPECT_EQ(rational_div(q(-6, 1), q(1, 1)), q(-6, 1));
  EXPECT_EQ(rational_mul(q(2, 3), q(9, 4)), q(3, 2));
}

TEST(BigRational, NormalizesOnConstruction) {
  const BigRational half = q(2, 4);
  EXPECT_EQ(half.num(), BigInt(1));
  EXPECT_EQ(half.den(), BigInt(2));
  const BigRational neg = q(3, -9);
  EXPECT_EQ(neg.num(), BigInt(-1));
  EXPECT_EQ(neg.den(), BigInt(3));
  EXPECT_EQ(q(0, -5).den(), BigInt(1));
  EXPECT_EQ(q(6, 3).to_string(), "2");
  EXPECT_EQ(q(-6, 4).to_string(), "-3/2");
}

TEST(BigRational, DivisionByZeroIsAnError) {
  EXPECT_THROW(BigRational(BigInt(1), BigInt(0)), DivisionByZero);
  EXPECT_THROW(q(1, 2) / BigRational(0), DivisionByZero);
}

TEST(BigInt, DecimalRoundTripAtLargeMagnitude) {
  const std::string big = "-123456789012345678901234567890123456789012345678901234567890";
  EXPECT_EQ(BigInt::from_string(big).to_string(), big);
  EXPECT_EQ(BigInt::from_string("0").to_string(), "0");
  EXPECT_THROW(BigInt::from_string(""), DomainError);
  EXPECT_THROW(BigInt::from_string("12a"), DomainError);
  EXPECT_THROW(BigInt::from_string("-"), DomainError);
}

TEST(BigInt, ExactBeyondMachineWords) {
  // (3^100) computed by repeated multiplication vs. pow.
  BigInt acc(1);
  for (int i = 0; i < 100; ++i) acc *= BigInt(3);
  EXPECT_EQ(acc, BigInt::pow(BigInt(3), 100));
  EXPECT_EQ(acc.to_string(), "515377520732011331036461129765621272702107522001");
  const BigInt e40 = BigInt::pow(BigInt(10), 40);
  EXPECT_EQ((e40 + BigInt(1)) * (e40 - BigInt(1)), BigInt::pow(BigInt(10), 80) - BigInt(1));
  EXPECT_FALSE(e40.fits_int64());
  EXPECT_THROW(e40.to_int64(), DomainError);
  EXPECT_EQ(BigInt(-42).to_int64(), -42);
}

TEST(BigInt, DivideExact) {
  BigInt out(7);
  EXPECT_TRUE(BigInt::divide_exact(BigInt(-12), BigInt(4), out));
  EXPECT_EQ(out, BigInt(-3));
  EXPECT_FALSE(BigInt::divide_exact(BigInt(13), BigInt(4), out));
  EXPECT_EQ(out, BigInt(-3));
  EXPECT_FALSE(BigInt::divide_exact(BigInt(13), BigInt(0), out));
}

TEST(BigRational, FieldLawsOnRandomSmallValues) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const BigRational p = q(num(rng), den(rng));
    const BigRational r1 = q(num(rng), den(rng));
    const BigRational r2 = q(num(rng), den(rng));
    ASSERT_EQ((p + r1) + r2, p + (r1 + r2));
    ASSERT_EQ(p * (r1 + r2), p * r1 + p * r2);
    // Renormalizing an already-normalized value is the identity.
    ASSERT_EQ(BigRational(p.num(), p.den()).num(), p.num());
    ASSERT_EQ(BigRational(p.num(), p.den()).den(), p.den());
    ASSERT_EQ(p.den().sign(), 1);
    if (!r1.is_zero()) ASSERT_EQ((p / r1) * r1, p);
  }
}

}  // namespace
}  // namespace meshsum
