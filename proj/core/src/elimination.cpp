#include "thue/elimination.hpp"

#include <algorithm>

#include "thue/error.hpp"

namespace thue {

namespace {

// Indices whose modulus interval can reach the extreme value.
std::vector<int> extreme_candidates(const std::vector<Ball>& vals, bool want_max) {
  const int n = static_cast<int>(vals.size());
  Real best = want_max ? vals[0].abs_lower() : vals[0].abs_upper();
  for (int j = 1; j < n; ++j)
    best = want_max ? max(best, vals[static_cast<std::size_t>(j)].abs_lower())
                    : min(best, vals[static_cast<std::size_t>(j)].abs_upper());
  std::vector<int> out;
  for (int j = 0; j < n; ++j) {
    const Ball& v = vals[static_cast<std::size_t>(j)];
    if (want_max ? !(v.abs_upper() < best) : !(v.abs_lower() > best)) out.push_back(j);
  }
  return out;
}

bool conjugate_pair_only(const std::vector<int>& cand, const std::vector<int>& pairing) {
  if (cand.size() == 1) return true;
  return cand.size() == 2 && pairing[static_cast<std::size_t>(cand[0])] == cand[1];
}

int pick(const std::vector<Ball>& vals, const std::vector<int>& pairing, bool want_max, const char* what) {
  auto cand = extreme_candidates(vals, want_max);
  if (!conjugate_pair_only(cand, pairing))
    fail(ErrorCode::PrecisionExhausted, std::string("cannot certify a unique ") + what);
  return cand.front();
}

}  // namespace

FixedFormBox lemma3_bounds(const BinaryForm& F, const mpz_class& m, Bits bits) {
  if (F.coeffs.empty() || F.coeffs.front() == 0)
    fail(ErrorCode::RealRootPresent, "a_0 = 0: the form vanishes at (1, 0)");
  if (m < 0) fail(ErrorCode::InvalidInput, "m must be nonnegative");
  const int d = F.degree();
  EmbeddingSet E = isolate_roots(F.dehomogenized(), bits);
  if (E.signature.r1 > 0) fail(ErrorCode::RealRootPresent, "F(X,1) has a real root");

  FixedFormBox box;
  if (m == 0) return box;
  const Real dd(static_cast<long>(d), bits);
  const Real a0(mpz_class(abs(F.coeffs.front())), bits, MPFR_RNDD);
  // log y_bound = (log m - log|a_0| - 2 sum log|Im a_j|) / d
  Real acc = sub(log(Real(m, bits, MPFR_RNDU), MPFR_RNDU), log(a0, MPFR_RNDD), MPFR_RNDU);
  Real house_up(bits);
  for (int j = 0; j < E.size(); ++j) {
    const Ball& v = E.values[static_cast<std::size_t>(j)];
    house_up = max(house_up, with_precision(v.abs_upper(), bits, MPFR_RNDU));
    if (!(v.mid.im.sign() > 0)) continue;
    Real im_low = sub(abs(v.mid.im), with_precision(v.rad, bits), MPFR_RNDD);
    if (!(im_low.sign() > 0)) fail(ErrorCode::PrecisionExhausted, "imaginary part not bounded away from zero");
    acc = sub(acc, mul(Real(2L, bits), log(im_low, MPFR_RNDD), MPFR_RNDD), MPFR_RNDU);
  }
  Real y = exp(div(acc, dd, MPFR_RNDU), MPFR_RNDU);
  Real xr = exp(div(sub(log(Real(m, bits, MPFR_RNDU), MPFR_RNDU), log(a0, MPFR_RNDD), MPFR_RNDU), dd, MPFR_RNDU),
                MPFR_RNDU);
  Real x1 = mul(mul(Real(2L, bits), house_up, MPFR_RNDU), y, MPFR_RNDU);
  Real x2 = mul(Real(2L, bits), xr, MPFR_RNDU);
  box.y_bound = with_precision(y, Ball::kRadiusBits, MPFR_RNDU);
  box.x_bound = with_precision(max(x1, x2), Ball::kRadiusBits, MPFR_RNDU);
  return box;
}

std::vector<std::pair<mpz_class, mpz_class>> solve_fixed_totally_imaginary(const BinaryForm& F, const mpz_class& m,
                                                                           bool include_axes, Bits bits) {
  const FixedFormBox box = lemma3_bounds(F, m, bits);
  std::vector<std::pair<mpz_class, mpz_class>> out;
  if (m < 0) return out;
  const mpz_class ymax = box.y_bound.floor_to_integer();
  const mpz_class xmax = box.x_bound.floor_to_integer();
  for (mpz_class x = -xmax; x <= xmax; ++x)
    for (mpz_class y = -ymax; y <= ymax; ++y) {
      if (x == 0 && y == 0) continue;
      if (!include_axes && (x == 0 || y == 0)) continue;
      if (abs(evaluate(F, x, y)) <= m) out.emplace_back(x, y);
    }
  return out;
}

EliminatedXY eliminate_xy(const std::array<Ball, 2>& beta, const std::array<Ball, 2>& theta) {
  Ball den = theta[1] - theta[0];
  if (den.contains_zero()) fail(ErrorCode::CoincidentEmbeddings, "the two embeddings of theta coincide");
  EliminatedXY out{(beta[0] - beta[1]) / den, (beta[0] * theta[1] - beta[1] * theta[0]) / den};
  return out;
}

Real siegel_residual(const std::array<Ball, 3>& u, const std::array<Ball, 3>& v) {
  Ball s = u[0] * v[1] - u[0] * v[2] + u[1] * v[2] - u[1] * v[0] + u[2] * v[0] - u[2] * v[1];
  return s.abs_upper();
}

PrivilegedEmbeddings select_privileged(const std::vector<Ball>& theta, const std::vector<Ball>& beta,
                                       const std::vector<int>& pairing) {
  if (theta.size() != beta.size() || theta.size() != pairing.size() || theta.empty())
    fail(ErrorCode::InvalidInput, "embedding lists must have equal, nonzero length");
  PrivilegedEmbeddings p;
  p.sigma_a = pick(theta, pairing, true, "maximal |phi(alpha eps)|");
  p.tau_a = pick(theta, pairing, false, "minimal |phi(alpha eps)|");
  p.sigma_b = pick(beta, pairing, true, "maximal |phi(beta)|");
  auto cand = extreme_candidates(beta, false);
  p.tau_b = cand.front();
  p.tau_b_nonunique = cand.size() > 1;
  auto conj = [&](int j) { return pairing[static_cast<std::size_t>(j)]; };
  p.generic_a = p.tau_a != p.sigma_a && p.tau_a != conj(p.sigma_a);
  p.generic_b = p.tau_b != p.sigma_b && p.tau_b != conj(p.sigma_b);
  return p;
}

int third_embedding(const std::vector<Ball>& theta, int a, int b) {
  int best = -1;
  Real best_gap(Ball::kRadiusBits);
  for (int j = 0; j < static_cast<int>(theta.size()); ++j) {
    if (j == a || j == b) continue;
    Real gap = (theta[static_cast<std::size_t>(j)] - theta[static_cast<std::size_t>(b)]).abs_lower();
    if (best < 0 || gap > best_gap) {
      best = j;
      best_gap = gap;
    }
  }
  return best;
}

}  // namespace thue
