#include <gtest/gtest.h>

#include <random>

#include "thue/error.hpp"
#include "thue/real.hpp"

using namespace thue;

namespace {

mpq_class exact_of(const Real& r) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), r.get());
  return q;
}

// |mid - q| <= rad, checked in exact rational arithmetic.
bool encloses(const Ball& b, const mpq_class& re, const mpq_class& im = 0) {
  const mpq_class dr = exact_of(b.mid.re) - re;
  const mpq_class di = exact_of(b.mid.im) - im;
  const mpq_class r = exact_of(b.rad);
  return dr * dr + di * di <= r * r;
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(Real, ParseRejectsGarbage) {
  EXPECT_THROW(Real::parse("1.5x", 64), Error);
  EXPECT_THROW(Real::parse("", 64), Error);
  EXPECT_EQ(Real::parse("0.5", 64), Real(0.5, 64));
}

TEST(Real, DirectedRoundingBrackets) {
  const Real one(1L, 64), three(3L, 64);
  const Real lo = div(one, three, MPFR_RNDD);
  const Real hi = div(one, three, MPFR_RNDU);
  EXPECT_LT(lo, hi);
  EXPECT_LT(exact_of(lo), mpq_class(1, 3));
  EXPECT_GT(exact_of(hi), mpq_class(1, 3));
}

TEST(Real, ToStringUsesScientificNotation) {
  EXPECT_EQ(Real(1234.5, 64).to_string(5), "1.2345e3");
  EXPECT_EQ(Real(0L, 64).to_string(), "0");
  EXPECT_EQ(Real::infinity(64).to_string(), "inf");
}

TEST(Real, RoundingToIntegers) {
  EXPECT_EQ(Real(2.5, 64).round_to_integer(), 3);
  EXPECT_EQ(Real(-2.5, 64).round_to_integer(), -3);
  EXPECT_EQ(Real(-2.25, 64).floor_to_integer(), -3);
}

TEST(Ball, ArithmeticEnclosesExactRationalResults) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const mpq_class a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    const Bits prec = trial % 2 ? 53 : 200;
    const Ball A = Ball::exact(a, prec), B = Ball::exact(b, prec), C = Ball::exact(c, prec);
    EXPECT_TRUE(encloses(A + B, a + b));
    EXPECT_TRUE(encloses(A - B, a - b));
    EXPECT_TRUE(encloses(A * B * C, a * b * c));
    if (b != 0) EXPECT_TRUE(encloses((A + C) / B, (a + c) / b));
    EXPECT_TRUE(encloses(pow(A, 5), a * a * a * a * a));
  }
}

TEST(Ball, ComplexProductMatchesGaussianArithmetic) {
  // (1 + 2i)(3 - i) = 5 + 5i, then divided by (1 + i) gives 5.
  Ball z(Complex(Real(1L, 64), Real(2L, 64)), Real(64));
  Ball w(Complex(Real(3L, 64), Real(-1L, 64)), Real(64));
  Ball u(Complex(Real(1L, 64), Real(1L, 64)), Real(64));
  EXPECT_TRUE(encloses(z * w, 5, 5));
  EXPECT_TRUE(encloses(z * w / u, 5, 0));
  EXPECT_TRUE(encloses(conj(z), 1, -2));
  EXPECT_TRUE(encloses(pow(u, -2), 0, mpq_class(-1, 2)));
}

TEST(Ball, DivisionByBallContainingZeroFails) {
  Ball zero = Ball::exact(mpz_class(0), 64);
  Ball one = Ball::exact(mpz_class(1), 64);
  try {
    (void)(one / zero);
    FAIL() << "expected PrecisionExhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PrecisionExhausted);
  }
}

TEST(Ball, AbsoluteValueBoundsBracketTheModulus) {
  Ball z(Complex(Real(3L, 64), Real(4L, 64)), Real(0.25, 64));
  EXPECT_GE(z.abs_upper(), Real(5.25, 64));
  EXPECT_LE(z.abs_lower(), Real(4.75, 64));
  EXPECT_FALSE(z.contains_zero());
  Ball fat(Complex(Real(0.1, 64), Real(64)), Real(1L, 64));
  EXPECT_TRUE(fat.contains_zero());
  EXPECT_TRUE(fat.abs_lower().is_zero());
}
