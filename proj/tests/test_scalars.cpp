#include <gtest/gtest.h>

#include <cmath>

#include "quatlie/scalars.hpp"
#include "support.hpp"

using namespace quatlie;

TEST(Rational, ReducedFormAndSign) {
  Rational q(6, -4);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(q + Rational(3, 2), Rational(0));
  EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse("12/8"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("1e-3"), Rational(1, 1000));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational().inv(), std::domain_error);
}

TEST(Rational, PromotesBeyondSixtyFourBits) {
  Rational big(1);
  for (int k = 0; k < 100; ++k) big *= Rational(3);
  Rational back = big;
  for (int k = 0; k < 100; ++k) back /= Rational(3);
  EXPECT_EQ(back, Rational(1));
  EXPECT_EQ((big + Rational(1)) - big, Rational(1));
  EXPECT_TRUE(Rational(std::numeric_limits<long long>::max()) + Rational(1) > Rational(0));
  mpq_class expect = 1;
  for (int k = 0; k < 100; ++k) expect *= 3;
  EXPECT_EQ(big.to_mpq(), expect);
}

TEST(CayleyScalar, DefiningRelations) {
  const CayleyScalar i = CayleyScalar::i(), r2 = CayleyScalar::sqrt2();
  EXPECT_EQ((CayleyScalar(1) + i) * (CayleyScalar(1) - i), CayleyScalar(2));
  EXPECT_EQ(r2 * r2, CayleyScalar(2));
  EXPECT_EQ(i * i, CayleyScalar(-1));
  EXPECT_EQ((i * r2).conj(), -(i * r2));
  EXPECT_THROW(CayleyScalar().inv(), std::domain_error);
}

TEST(CayleyScalar, FieldAxiomsOnRandomTriples) {
  qtest::Sampler s(11);
  for (int k = 0; k < 10000; ++k) {
    CayleyScalar x = s.cayley(), y = s.cayley(), z = s.cayley();
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
  }
  for (int k = 0; k < 1000; ++k) {
    CayleyScalar x = s.cayley();
    if (x.is_zero()) continue;
    ASSERT_EQ(x * x.inv(), CayleyScalar(1));
  }
}

// Digit-by-digit square root of 2 by integer long division.
static double sqrt2_long_division() {
  mpz_class n("2");
  for (int k = 0; k < 40; ++k) n *= 100;
  mpz_class r = 0, rem = 0;
  std::string digits = n.get_str();
  if (digits.size() % 2) digits = "0" + digits;
  for (std::size_t p = 0; p < digits.size(); p += 2) {
    rem = rem * 100 + std::stoi(digits.substr(p, 2));
    int d = 9;
    while ((r * 20 + d) * d > rem) --d;
    rem -= (r * 20 + d) * d;
    r = r * 10 + d;
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 40);
  return mpq_class(r, scale).get_d();
}

TEST(CayleyScalar, ToMachine) {
  EXPECT_EQ(CayleyScalar(Rational(1, 2)).to_machine(), MachineComplex(0.5, 0));
  EXPECT_EQ(CayleyScalar::i().to_machine(), MachineComplex(0, 1));
  EXPECT_NEAR(CayleyScalar::sqrt2().to_machine().real(), sqrt2_long_division(), 1e-15);
  EXPECT_EQ(CayleyScalar::sqrt2().to_machine().imag(), 0.0);
}
