#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "thue/elimination.hpp"
#include "thue/embeddings.hpp"
#include "thue/error.hpp"
#include "thue/provider.hpp"
#include "thue/stender.hpp"

using namespace thue;

namespace {

std::vector<Ball> conjugates_of_twist(const stender::Params& p, long n, Bits bits) {
  const EmbeddingSet E = compute_embeddings(stender::base_polynomial(p), bits);
  std::vector<Ball> out;
  for (const Ball& z : E.values) out.push_back(pow(z, n + 1));
  return out;
}

std::vector<Ball> betas(const std::vector<Ball>& theta, const mpz_class& x, const mpz_class& y, Bits bits) {
  std::vector<Ball> out;
  for (const Ball& t : theta) out.push_back(Ball::exact(x, bits) - t * Ball::exact(y, bits));
  return out;
}

}  // namespace

TEST(FixedForm, ClosedFormForSumOfFourthPowers) {
  // Roots e^{i pi/4} etc.: Im parts 1/sqrt2 in the upper half plane, so
  // y_bound = sqrt2 m^(1/4) and x_bound = 2 y_bound.
  for (long m : {1L, 16L, 100L}) {
    const FixedFormBox box = lemma3_bounds(BinaryForm{{1, 0, 0, 0, 1}}, m);
    const double y = std::sqrt(2.0) * std::pow(static_cast<double>(m), 0.25);
    EXPECT_NEAR(box.y_bound.to_double(), y, 1e-12 * y);
    EXPECT_NEAR(box.x_bound.to_double(), 2 * y, 2e-12 * y);
    EXPECT_GE(box.y_bound, Real(y * (1 - 1e-15), 64));
  }
  const FixedFormBox zero = lemma3_bounds(BinaryForm{{1, 0, 0, 0, 1}}, 0);
  EXPECT_TRUE(zero.y_bound.is_zero());
  try {
    lemma3_bounds(BinaryForm{{1, 0, 0, -2}}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RealRootPresent);
  }
}

TEST(FixedForm, SolverEqualsBruteForceForEveryM) {
  const std::vector<BinaryForm> forms{BinaryForm{{1, 0, 0, 0, 1}}, BinaryForm{{1, 0, 2, 0, 2}},
                                      BinaryForm{stender::base_coefficients({2, 1})}};
  for (const BinaryForm& F : forms)
    for (long m = 0; m <= 100; ++m) {
      const FixedFormBox box = lemma3_bounds(F, m);
      const long brute_box = static_cast<long>(std::ceil(2 * box.y_bound.to_double())) + 2;
      const auto want = oracle::brute_force(F.coeffs, m, brute_box);
      const auto sols = solve_fixed_totally_imaginary(F, m);
      std::vector<oracle::Pair> got;
      for (const auto& [x, y] : sols) {
        got.push_back({x.get_si(), y.get_si()});
        EXPECT_LE(Real(mpz_class(abs(x)), 64), box.x_bound);
        EXPECT_LE(Real(mpz_class(abs(y)), 64), box.y_bound);
      }
      EXPECT_EQ(got, want) << "m=" << m;
    }
}

TEST(Elimination, RecoversXYFromTwoEmbeddings) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> v(-10000, 10000);
  const auto theta = conjugates_of_twist({2, 1}, 2, 256);
  for (int i = 0; i < 50; ++i) {
    const mpz_class x = v(rng), y = v(rng);
    const auto beta = betas(theta, x, y, 256);
    const EliminatedXY r = eliminate_xy({beta[0], beta[2]}, {theta[0], theta[2]});
    EXPECT_TRUE((r.x - Ball::exact(x, 256)).contains_zero());
    EXPECT_TRUE((r.y - Ball::exact(y, 256)).contains_zero());
    EXPECT_LT(r.x.rad, Real(1e-30, 64));
  }
  EXPECT_THROW(eliminate_xy({theta[0], theta[0]}, {theta[1], theta[1]}), Error);
}

TEST(Elimination, SiegelResidualVanishesOnSolutionsOnly) {
  const stender::Params p{2, 1};
  MatveevTypeProvider provider;
  const auto res = stender::solve_family(p, 200, {50, 6, false}, &provider);
  ASSERT_FALSE(res.solutions.empty());
  const Real tiny = Real::pow2(-64, 64), big = Real::pow2(-8, 64);
  for (const auto& s : res.solutions) {
    const auto theta = conjugates_of_twist(p, s.epsilon.exponents[0], 256);
    const auto beta = betas(theta, s.x, s.y, 256);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (i == j || j == k || i == k) continue;
          const std::array<Ball, 3> u{beta[i], beta[j], beta[k]}, v{theta[i], theta[j], theta[k]};
          EXPECT_LT(siegel_residual(u, v), tiny);
          // negative control: beta from a different point
          const std::array<Ball, 3> bad{beta[i], beta[j], beta[k] + Ball::exact(mpz_class(1), 256)};
          EXPECT_GT(siegel_residual(bad, v), big);
        }
  }
}

TEST(Privileged, SelectionMaximisesAndMinimises) {
  const stender::Params p{2, 1};
  const EmbeddingSet E = compute_embeddings(stender::base_polynomial(p), 128);
  const auto theta = conjugates_of_twist(p, 0, 128);
  const auto beta = betas(theta, 1, 1, 128);
  const PrivilegedEmbeddings P = select_privileged(theta, beta, E.pairing);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    EXPECT_GE(theta[static_cast<std::size_t>(P.sigma_a)].abs_upper(), theta[j].abs_lower());
    EXPECT_LE(theta[static_cast<std::size_t>(P.tau_a)].abs_lower(), theta[j].abs_upper());
    EXPECT_GE(beta[static_cast<std::size_t>(P.sigma_b)].abs_upper(), beta[j].abs_lower());
    EXPECT_LE(beta[static_cast<std::size_t>(P.tau_b)].abs_lower(), beta[j].abs_upper());
  }
  // conjugate ties resolve to the lower index
  EXPECT_EQ(P.sigma_a % 2, 0);
  // |x| <= |y| solutions have |tau_b(alpha eps)| <= 2
  EXPECT_LE(theta[static_cast<std::size_t>(P.tau_b)].abs_upper(), Real(2L, 64));
}

TEST(Privileged, ThirdEmbeddingMaximisesSeparation) {
  const auto theta = conjugates_of_twist({3, -1}, 1, 128);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      const int phi = third_embedding(theta, a, b);
      ASSERT_NE(phi, a);
      ASSERT_NE(phi, b);
      for (int k = 0; k < 4; ++k) {
        if (k == a || k == b) continue;
        EXPECT_GE((theta[static_cast<std::size_t>(phi)] - theta[static_cast<std::size_t>(b)]).abs_lower(),
                  (theta[static_cast<std::size_t>(k)] - theta[static_cast<std::size_t>(b)]).abs_lower());
      }
    }
  const std::vector<Ball> two(theta.begin(), theta.begin() + 2);
  EXPECT_EQ(third_embedding(two, 0, 1), -1);
}
