#include <gtest/gtest.h>

#include <random>

#include "liecg/exact_arith.hpp"

using namespace liecg;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-60, 60), den(1, 40);
  return q(num(rng), den(rng));
}

SignedRadical random_srad(std::mt19937_64& rng) {
  Rational r = random_rational(rng);
  int s = sgn(r);
  return SignedRadical(s, s ? Rational(abs(r)) : Rational(0));
}

}  // namespace

TEST(ExactArith, FromSignedRational) {
  EXPECT_EQ(srad_from_signed_rational(q(3, 4)), SignedRadical(1, q(9, 16)));
  EXPECT_EQ(srad_from_signed_rational(q(-2)), SignedRadical(-1, q(4)));
  EXPECT_TRUE(srad_from_signed_rational(q(0)).is_zero());
}

TEST(ExactArith, Mul) {
  EXPECT_EQ(srad_mul(SignedRadical(1, q(1, 2)), SignedRadical(1, q(1, 2))), SignedRadical(1, q(1, 4)));
  EXPECT_EQ(srad_mul(SignedRadical(-1, q(3, 4)), SignedRadical(1, q(1, 3))), SignedRadical(-1, q(1, 4)));
  EXPECT_TRUE(srad_mul(SignedRadical(), SignedRadical(1, q(7))).is_zero());
}

TEST(ExactArith, Ratio) {
  EXPECT_EQ(srad_ratio_as_rational(SignedRadical(1, q(9, 16)), SignedRadical(1, q(1, 16))), q(3));
  EXPECT_EQ(srad_ratio_as_rational(SignedRadical(-1, q(1, 2)), SignedRadical(1, q(2))), q(-1, 2));
  try {
    srad_ratio_as_rational(SignedRadical(1, q(2)), SignedRadical(1, q(3)));
    FAIL() << "expected NotCommensurable";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommensurable);
  }
}

TEST(ExactArith, ParseAndPrint) {
  for (const char* s : {"+sqrt(5/7)", "-sqrt(1/21)", "+sqrt(1/1)"}) EXPECT_EQ(parse_srad(s).str(), s);
  EXPECT_EQ(parse_srad("-sqrt(3)"), SignedRadical(-1, q(3)));
  EXPECT_EQ(parse_srad("+sqrt(4/8)"), SignedRadical(1, q(1, 2)));
  EXPECT_TRUE(parse_srad("0").is_zero());
  EXPECT_THROW(parse_srad("sqrt(-1)"), Error);
}

TEST(ExactArith, RejectsBadSignRadicandPairs) {
  EXPECT_THROW(SignedRadical(0, q(1)), Error);
  EXPECT_THROW(SignedRadical(1, q(0)), Error);
  EXPECT_THROW(SignedRadical(1, q(-1)), Error);
}

TEST(ExactArithProperty, RoundTripSquares) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10000; ++k) {
    Rational x = random_rational(rng);
    SignedRadical r = srad_from_signed_rational(x);
    EXPECT_EQ(r.radicand(), x * x);
    EXPECT_EQ(r.sign(), sgn(x));
    Rational root;
    ASSERT_TRUE(exact_sqrt(r.radicand(), root));
    EXPECT_EQ(Rational(r.sign() * root), x);
    EXPECT_TRUE(is_canonical(r.radicand()));
  }
}

TEST(ExactArithProperty, MulAssociativeCommutative) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    SignedRadical a = random_srad(rng), b = random_srad(rng), c = random_srad(rng);
    SignedRadical ab = srad_mul(a, b), ba = srad_mul(b, a);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(srad_mul(ab, c), srad_mul(a, srad_mul(b, c)));
    for (const SignedRadical* r : {&ab, &ba}) {
      EXPECT_TRUE(is_canonical(r->radicand()));
      EXPECT_GT(sgn(r->radicand().get_den()), 0);
    }
  }
}

TEST(ExactArithProperty, RatioRecoversRationalFactor) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    SignedRadical b = random_srad(rng);
    if (b.is_zero()) continue;
    Rational t = random_rational(rng);
    SignedRadical a = srad_mul(srad_from_signed_rational(t), b);
    Rational r = srad_ratio_as_rational(a, b);
    EXPECT_EQ(r, t);
    EXPECT_TRUE(is_canonical(r));
  }
}
