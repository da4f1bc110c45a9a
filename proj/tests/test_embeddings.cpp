#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "thue/embeddings.hpp"
#include "thue/error.hpp"
#include "thue/heights.hpp"
#include "thue/stender.hpp"

using namespace thue;

namespace {

FieldPtr field(std::initializer_list<long> c) { return NumberField::make(std::vector<mpz_class>(c.begin(), c.end())); }

double re(const Ball& b) { return b.mid.re.to_double(); }
double im(const Ball& b) { return b.mid.im.to_double(); }

}  // namespace

TEST(Embeddings, SignaturesMatchSignChangeCounts) {
  struct Case {
    FieldPtr K;
    std::vector<double> p;
    Signature sig;
  };
  std::vector<Case> cases{{field({1, 0, 0, -2}), {1, 0, 0, -2}, {1, 1}},
                          {field({1, 0, -3, -1}), {1, 0, -3, -1}, {3, 0}},
                          {stender::base_polynomial({2, 1}), {1, -16, 130, 16, 1}, {0, 2}},
                          {field({1, 0, 0, 0, 1}), {1, 0, 0, 0, 1}, {0, 2}}};
  for (const auto& c : cases) {
    const EmbeddingSet E = compute_embeddings(c.K, 128);
    EXPECT_EQ(E.signature, c.sig);
    // every real root of these polynomials lies in [-10, 10]
    EXPECT_EQ(oracle::real_root_count_on_grid(c.p, -10, 10, 200000), c.sig.r1);
  }
}

TEST(Embeddings, CubeRootsOfTwoHaveModulusCubeRootTwo) {
  const EmbeddingSet E = compute_embeddings(field({1, 0, 0, -2}), 256);
  ASSERT_EQ(E.size(), 3);
  EXPECT_TRUE(E.is_real(0));
  EXPECT_NEAR(re(E.values[0]), std::cbrt(2.0), 1e-15);
  for (const Ball& z : E.values) {
    const Ball cube = z * z * z - Ball::exact(mpz_class(2), 256);
    EXPECT_LT(cube.abs_upper(), Real::pow2(-200, 64));
  }
}

TEST(Embeddings, OrderingAndConjugatePairing) {
  const EmbeddingSet E = compute_embeddings(field({1, 2, 0, 3, 0, 1}), 128);  // r1 = 1
  ASSERT_EQ(E.signature.r1 + 2 * E.signature.r2, 5);
  for (int j = 0; j < E.signature.r1; ++j) EXPECT_TRUE(E.is_real(j));
  for (int j = E.signature.r1; j < E.size(); j += 2) {
    EXPECT_EQ(E.pairing[static_cast<std::size_t>(j)], j + 1);
    EXPECT_GT(im(E.values[static_cast<std::size_t>(j)]), 0);
    EXPECT_EQ(E.values[static_cast<std::size_t>(j)].mid.re, E.values[static_cast<std::size_t>(j + 1)].mid.re);
    if (j + 2 < E.size()) EXPECT_LE(re(E.values[static_cast<std::size_t>(j)]), re(E.values[static_cast<std::size_t>(j + 2)]));
  }
}

TEST(Embeddings, ProductReconstructsCoefficientsWithinRadius) {
  for (const FieldPtr& K : {field({3, -1, 4, 1, -5}), stender::base_polynomial({3, -1}), field({1, 0, 0, -2})}) {
    const EmbeddingSet E = compute_embeddings(K, 192);
    std::vector<Ball> prod{Ball::exact(K->leading(), 192)};
    for (const Ball& z : E.values) {
      std::vector<Ball> next(prod.size() + 1, Ball::exact(mpz_class(0), 192));
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k] = next[k] + prod[k];
        next[k + 1] = next[k + 1] - prod[k] * z;
      }
      prod = next;
    }
    for (std::size_t k = 0; k < prod.size(); ++k) {
      const Ball diff = prod[k] - Ball::exact(K->coeffs()[k], 192);
      EXPECT_TRUE(diff.contains_zero()) << k;
      EXPECT_LT(diff.abs_upper(), Real::pow2(-100, 64));
    }
  }
}

TEST(Embeddings, SignatureStableUnderPrecisionIncrease) {
  for (const FieldPtr& K : {field({1, 0, 0, -2}), field({1, 0, -3, -1}), stender::base_polynomial({3, 1}),
                            field({2, 0, 1, -7, 3})}) {
    EXPECT_EQ(compute_embeddings(K, 64).signature, compute_embeddings(K, 256).signature);
  }
}

TEST(Embeddings, InvalidInputs) {
  EXPECT_THROW(isolate_roots(ZPoly{{mpz_class(5)}}, 64), Error);
  EXPECT_THROW(isolate_roots(zpoly_from_leading_first({1, -2, 1}), 64), Error);
  const EmbeddingSet lin = isolate_roots(zpoly_from_leading_first({2, -3}), 64);
  EXPECT_EQ(lin.values[0].mid.re, Real(1.5, 64));
}

TEST(Embeddings, AlmostTotallyImaginary) {
  EXPECT_TRUE(is_almost_totally_imaginary(compute_embeddings(field({1, 0, 0, -2}), 64)));
  EXPECT_FALSE(is_almost_totally_imaginary(compute_embeddings(field({1, 0, -3, -1}), 64)));
  EXPECT_TRUE(is_almost_totally_imaginary(compute_embeddings(stender::base_polynomial({2, 1}), 64)));
}

TEST(Embeddings, HouseBelowExponentialOfHeight) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-4, 4);
  const FieldPtr K = field({1, 0, 1, 0, 0, 3});
  const EmbeddingSet E = compute_embeddings(K, 128);
  int checked = 0;
  while (checked < 100) {
    std::vector<mpq_class> c;
    for (int i = 0; i < 5; ++i) c.emplace_back(coef(rng));
    const AlgElement g(K, c);
    if (g.is_zero()) continue;
    const int deg = minpoly_integer(g).degree();
    const Real h = abs_log_height(g, 128).value;
    EXPECT_LE(house(g, E), exp(h * Real(static_cast<long>(deg), 128), MPFR_RNDU) * Real(1.0 + 1e-30, 128));
    ++checked;
  }
}
