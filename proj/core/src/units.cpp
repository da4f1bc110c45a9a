#include "thue/units.hpp"

#include <algorithm>
#include <cstdlib>

#include "thue/error.hpp"

namespace thue {

namespace {

Real log_abs_mid(const Ball& b, Bits prec) {
  Real a = abs(b.mid);
  if (a.sign() <= 0) fail(ErrorCode::ZeroElement, "logarithm of a vanishing embedding");
  return log(with_precision(a, prec));
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Determinant by partial-pivot elimination; input copied.
Real determinant(RealMatrix a, Bits prec) {
  const std::size_t n = a.size();
  Real det(1L, prec);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (abs(a[i][col]) > abs(a[piv][col])) piv = i;
    if (a[piv][col].is_zero()) return Real(prec);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      Real f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

// Inverse of a symmetric positive definite matrix via Cholesky. Throws
// RankDeficient if a pivot falls below `threshold`.
RealMatrix spd_inverse(const RealMatrix& g, const Real& threshold, Bits prec) {
  const std::size_t n = g.size();
  RealMatrix l(n, std::vector<Real>(n, Real(prec)));
  for (std::size_t j = 0; j < n; ++j) {
    Real s = g[j][j];
    for (std::size_t k = 0; k < j; ++k) s -= l[j][k] * l[j][k];
    if (!(s > threshold)) fail(ErrorCode::RankDeficient, "unit log matrix is rank deficient");
    l[j][j] = sqrt(s);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real t = g[i][j];
      for (std::size_t k = 0; k < j; ++k) t -= l[i][k] * l[j][k];
      l[i][j] = t / l[j][j];
    }
  }
  // Columns of inverse: solve L L^T x = e_c.
  RealMatrix inv(n, std::vector<Real>(n, Real(prec)));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Real> y(n, Real(prec));
    for (std::size_t i = 0; i < n; ++i) {
      Real t(i == c ? 1L : 0L, prec);
      for (std::size_t k = 0; k < i; ++k) t -= l[i][k] * y[k];
      y[i] = t / l[i][i];
    }
    for (std::size_t i = n; i-- > 0;) {
      Real t = y[i];
      for (std::size_t k = i + 1; k < n; ++k) t -= l[k][i] * inv[k][c];
      inv[i][c] = t / l[i][i];
    }
  }
  return inv;
}

RealMatrix gram(const RealMatrix& L, Bits prec) {
  const std::size_t r = L.empty() ? 0 : L[0].size();
  RealMatrix g(r, std::vector<Real>(r, Real(prec)));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (const auto& row : L) g[a][b] += row[a] * row[b];
  return g;
}

Real to_radius_up(const Real& v) { return with_precision(v, Ball::kRadiusBits, MPFR_RNDU); }
Real to_radius_down(const Real& v) { return with_precision(v, Ball::kRadiusBits, MPFR_RNDD); }

}  // namespace

long ExponentVector::C() const {
  long c = 1;
  for (long e : exponents) c = std::max(c, std::labs(e));
  return c;
}

UnitBasis make_unit_basis(const FieldPtr& field, std::vector<AlgElement> units, AlgElement torsion,
                          int torsion_order, std::optional<Real> regulator, Bits bits) {
  UnitBasis B;
  B.field = field;
  B.embeddings = compute_embeddings(field, bits);
  const auto sig = B.embeddings.signature;
  const int r = sig.r1 + sig.r2 - 1;
  if (static_cast<int>(units.size()) != r)
    fail(ErrorCode::InvalidInput, "expected " + std::to_string(r) + " fundamental units for signature (" +
                                      std::to_string(sig.r1) + "," + std::to_string(sig.r2) + "), got " +
                                      std::to_string(units.size()));
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!units[i].field()->same_as(*field)) fail(ErrorCode::FieldMismatch, "unit from another field");
    const mpq_class n = norm(units[i]);
    if (n != 1 && n != -1)
      fail(ErrorCode::InvalidInput, "fundamental unit " + std::to_string(i) + " has norm " + n.get_str());
    if (minpoly_integer(units[i]).leading() != 1)
      fail(ErrorCode::InvalidInput, "fundamental unit " + std::to_string(i) + " is not an algebraic integer");
  }
  if (torsion_order < 2) fail(ErrorCode::InvalidInput, "torsion order must be at least 2");
  if (!torsion.field()->same_as(*field)) fail(ErrorCode::FieldMismatch, "torsion generator from another field");
  const AlgElement one = AlgElement::one(field);
  if (!(pow(torsion, torsion_order) == one))
    fail(ErrorCode::InvalidInput, "torsion generator does not satisfy zeta^w = 1");
  for (long p : prime_factors(torsion_order))
    if (pow(torsion, torsion_order / p) == one)
      fail(ErrorCode::InvalidInput, "torsion generator has order smaller than " + std::to_string(torsion_order));

  B.fundamental_units = std::move(units);
  B.torsion_generator = std::move(torsion);
  B.torsion_order = torsion_order;

  const int d = field->degree();
  B.log_matrix.assign(static_cast<std::size_t>(d), std::vector<Real>());
  for (const auto& u : B.fundamental_units) {
    auto logs = log_embeddings(u, B);
    for (int j = 0; j < d; ++j) B.log_matrix[static_cast<std::size_t>(j)].push_back(std::move(logs[static_cast<std::size_t>(j)]));
  }

  if (r > 0) {
    RealMatrix g = gram(B.log_matrix, bits);
    Real scale(1L, bits);
    for (int i = 0; i < r; ++i) scale = max(scale, g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    (void)spd_inverse(g, scale * Real::pow2(-bits / 4, bits), bits);
  }

  // Regulator: one row per place, complex places doubled, last place dropped.
  RealMatrix places;
  for (int j = 0; j < d; ++j) {
    const int pj = B.embeddings.pairing[static_cast<std::size_t>(j)];
    if (pj < j) continue;
    auto row = B.log_matrix[static_cast<std::size_t>(j)];
    if (pj != j)
      for (auto& v : row) v = v * Real(2L, bits);
    places.push_back(std::move(row));
  }
  places.resize(static_cast<std::size_t>(r));
  B.regulator = r == 0 ? Real(1L, bits) : abs(determinant(places, bits));
  if (regulator) {
    B.regulator_given = *regulator;
    Real diff = abs(B.regulator - *regulator);
    B.regulator_consistent = diff <= abs(*regulator) * Real(0.01, bits);
  }
  return B;
}

AlgElement unit_from_exponents(const UnitBasis& B, const ExponentVector& e) {
  if (static_cast<int>(e.exponents.size()) != B.rank())
    fail(ErrorCode::InvalidInput, "exponent vector length does not match the unit rank");
  if (e.torsion_index < 0 || e.torsion_index >= B.torsion_order)
    fail(ErrorCode::InvalidInput, "torsion index out of range");
  AlgElement out = pow(B.torsion_generator, e.torsion_index);
  for (std::size_t i = 0; i < e.exponents.size(); ++i)
    if (e.exponents[i] != 0) out = out * pow(B.fundamental_units[i], e.exponents[i]);
  return out;
}

std::vector<Real> log_embeddings(const AlgElement& a, const UnitBasis& B) {
  std::vector<Real> out;
  for (const auto& v : embed(a, B.embeddings)) out.push_back(log_abs_mid(v, B.bits()));
  return out;
}

Real house_bound_constant(const UnitBasis& B) {
  Real c1(Ball::kRadiusBits);
  for (const auto& u : B.fundamental_units) {
    Real h = house(u, B.embeddings);
    Real lh = log(h, MPFR_RNDU);
    if (lh.sign() > 0) c1 = add(c1, lh, MPFR_RNDU);
  }
  return c1;
}

EmbeddingLemma embedding_lemma(const UnitBasis& B) {
  const int r = B.rank();
  if (r < 1) fail(ErrorCode::RankDeficient, "embedding lemma needs a unit group of positive rank");
  const Bits prec = B.bits();
  const int d = B.degree();
  RealMatrix g = gram(B.log_matrix, prec);
  Real scale(1L, prec);
  for (int i = 0; i < r; ++i) scale = max(scale, g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  RealMatrix ginv = spd_inverse(g, scale * Real::pow2(-prec / 4, prec), prec);

  EmbeddingLemma out;
  out.left_inverse.assign(static_cast<std::size_t>(r), std::vector<Real>(static_cast<std::size_t>(d), Real(prec)));
  Real maxabs(prec);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < d; ++j) {
      Real s(prec);
      for (int k = 0; k < r; ++k)
        s += ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
             B.log_matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      maxabs = max(maxabs, abs(s));
      out.left_inverse[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(s);
    }
  // Writing l = M 1 - s with s >= 0 and sum s = d M, each exponent is
  // c_i = -(P s)_i, so C <= d max|P| M.
  Real k3 = mul(maxabs, Real(static_cast<long>(d), prec), MPFR_RNDU);
  Real margin = sub(Real(1L, prec), Real::pow2(-prec / 2, prec), MPFR_RNDD);
  out.kappa3 = to_radius_up(k3);
  out.kappa4 = to_radius_down(mul(div(Real(1L, prec), k3, MPFR_RNDD), margin, MPFR_RNDD));
  return out;
}

Real embedding_lemma_constant(const UnitBasis& B) { return embedding_lemma(B).kappa4; }

Real rounding_constant(const UnitBasis& B) {
  Real worst(B.bits());
  for (const auto& row : B.log_matrix) {
    Real s(B.bits());
    for (const auto& v : row) s = add(s, abs(v), MPFR_RNDU);
    worst = max(worst, s);
  }
  return to_radius_up(div(worst, Real(2L, B.bits()), MPFR_RNDU));
}

Reduction reduce_by_units(const AlgElement& gamma, const UnitBasis& B, const mpz_class& m) {
  if (gamma.is_zero()) fail(ErrorCode::ZeroElement, "cannot reduce zero");
  if (m < 1) fail(ErrorCode::InvalidInput, "m must be positive");
  if (abs(norm(gamma)) > m) fail(ErrorCode::InvalidInput, "|norm(gamma)| exceeds m");
  const Bits prec = B.bits();
  const int d = B.degree();
  const int r = B.rank();
  const Real logm_d = div(log(Real(m, prec)), Real(static_cast<long>(d), prec));

  Reduction out;
  out.exponents.exponents.assign(static_cast<std::size_t>(r), 0);
  if (r > 0) {
    const auto P = embedding_lemma(B).left_inverse;
    auto logs = log_embeddings(gamma, B);
    for (auto& v : logs) v -= logm_d;
    for (int i = 0; i < r; ++i) {
      Real y(prec);
      for (int j = 0; j < d; ++j) y -= P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * logs[static_cast<std::size_t>(j)];
      // nearest integer, exact halves toward zero
      Real fl(prec);
      mpfr_floor(fl.get(), y.get());
      Real frac = y - fl;
      mpz_class e = fl.floor_to_integer();
      const Real half(0.5, prec);
      if (frac > half || (frac == half && y.sign() < 0)) e += 1;
      out.exponents.exponents[static_cast<std::size_t>(i)] = e.get_si();
    }
  }
  const AlgElement eps = unit_from_exponents(B, out.exponents);
  out.rho = eps * gamma;
  ExponentVector neg = out.exponents;
  for (auto& v : neg.exponents) v = -v;
  out.eta = unit_from_exponents(B, neg);

  Real achieved(prec);
  for (const auto& v : embed(out.rho, B.embeddings)) {
    Real hi = sub(log(v.abs_upper(), MPFR_RNDU), logm_d, MPFR_RNDU);
    Real lo_abs = v.abs_lower();
    if (lo_abs.sign() <= 0) fail(ErrorCode::PrecisionExhausted, "embedding of the reduced element not bounded away from 0");
    Real lo = sub(log(lo_abs, MPFR_RNDD), logm_d, MPFR_RNDD);
    achieved = max(achieved, max(abs(hi), abs(lo)));
  }
  out.achieved = to_radius_up(achieved);
  out.c_round = rounding_constant(B);
  Real dinv = div(Real(1L, prec), Real(static_cast<long>(d), prec), MPFR_RNDU);
  if (m >= 2) {
    out.c2bis = to_radius_up(add(dinv, div(out.c_round, log(Real(2L, prec), MPFR_RNDD), MPFR_RNDU), MPFR_RNDU));
  } else {
    out.c2bis = Real::infinity(Ball::kRadiusBits);
  }
  return out;
}

}  // namespace thue
