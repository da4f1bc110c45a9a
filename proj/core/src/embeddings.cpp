#include "thue/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "thue/error.hpp"

namespace thue {

namespace {

constexpr int kMaxSweeps = 600;
constexpr int kPolishSweeps = 8;

double log_abs(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

// Starting points on circles read off the Newton polygon of log|c_i|.
std::vector<Complex> initial_points(const ZPoly& p, Bits prec) {
  const int n = p.degree();
  std::vector<std::pair<int, double>> pts;
  for (int i = 0; i <= n; ++i)
    if (p.c[static_cast<std::size_t>(i)] != 0) pts.emplace_back(i, log_abs(p.c[static_cast<std::size_t>(i)]));
  std::vector<std::pair<int, double>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      double cross = (b.first - a.first) * (q.second - a.second) - (b.second - a.second) * (q.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  std::vector<Complex> z;
  const double sigma = 0.7;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e].first, j = hull[e + 1].first;
    const int k = j - i;
    const double log_r = (hull[e].second - hull[e + 1].second) / k;
    for (int t = 0; t < k; ++t) {
      const double angle = 2 * std::numbers::pi * t / k + 2 * std::numbers::pi * i / n + sigma;
      Real lr(log_r, prec);
      Real radius = exp(lr);
      z.push_back({radius * Real(std::cos(angle), prec), radius * Real(std::sin(angle), prec)});
    }
  }
  return z;
}

Complex to_prec(const Complex& z, Bits prec) { return {with_precision(z.re, prec), with_precision(z.im, prec)}; }

// One Aberth sweep (Gauss-Seidel order). Returns true once every correction is
// below 2^(8-prec) relative to the root.
bool aberth_sweep(const std::vector<Real>& coef, std::vector<Complex>& z, Bits prec) {
  const int n = static_cast<int>(z.size());
  bool converged = true;
  const Real tol = Real::pow2(8 - prec, prec);
  const Real one(1L, prec);
  for (int k = 0; k < n; ++k) {
    Complex& zk = z[static_cast<std::size_t>(k)];
    Complex pv{coef[static_cast<std::size_t>(n)], Real(prec)};
    Complex dv(prec);
    for (int i = n - 1; i >= 0; --i) {
      dv = dv * zk + pv;
      pv = pv * zk;
      pv.re += coef[static_cast<std::size_t>(i)];
    }
    if (pv.re.is_zero() && pv.im.is_zero()) continue;
    if (dv.re.is_zero() && dv.im.is_zero()) {
      converged = false;
      zk.re += Real::pow2(-prec / 2, prec);
      continue;
    }
    Complex w = pv / dv;
    Complex s(prec);
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      Complex diff = zk - z[static_cast<std::size_t>(j)];
      if (diff.re.is_zero() && diff.im.is_zero()) continue;
      s = s + Complex{one, Real(prec)} / diff;
    }
    Complex denom = Complex{one, Real(prec)} - w * s;
    Complex corr = (denom.re.is_zero() && denom.im.is_zero()) ? w : w / denom;
    zk = zk - corr;
    Real scale = max(abs(zk), one);
    if (abs(corr) > tol * scale) converged = false;
  }
  return converged;
}

struct Certificate {
  bool ok = false;
  Real radius{Ball::kRadiusBits};
};

// Inclusion radii r_k = n |p(z_k)| / |c_n prod_{j != k}(z_k - z_j)|; valid and
// disjoint when every pairwise distance exceeds 8 max r_k.
Certificate certify(const ZPoly& p, const std::vector<Complex>& z, Bits prec) {
  const int n = p.degree();
  Certificate cert;
  Real r(Ball::kRadiusBits);
  std::vector<Ball> zb;
  zb.reserve(z.size());
  for (const auto& v : z) zb.emplace_back(v, Real(Ball::kRadiusBits));
  const Ball lead = Ball::exact(p.leading(), prec);
  for (int k = 0; k < n; ++k) {
    const Ball& x = zb[static_cast<std::size_t>(k)];
    Ball val = Ball::exact(p.leading(), prec);
    for (int i = n - 1; i >= 0; --i) val = val * x + Ball::exact(p.c[static_cast<std::size_t>(i)], prec);
    Ball den = lead;
    for (int j = 0; j < n; ++j)
      if (j != k) den = den * (x - zb[static_cast<std::size_t>(j)]);
    Real low = den.abs_lower();
    if (low.sign() <= 0) return cert;
    Real num(Ball::kRadiusBits);
    mpfr_mul_si(num.get(), val.abs_upper().get(), n, MPFR_RNDU);
    Real rk(Ball::kRadiusBits);
    mpfr_div(rk.get(), num.get(), low.get(), MPFR_RNDU);
    r = max(r, rk);
  }
  Real gap(Ball::kRadiusBits);
  mpfr_mul_ui(gap.get(), r.get(), 8, MPFR_RNDU);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Ball d = zb[static_cast<std::size_t>(i)] - zb[static_cast<std::size_t>(j)];
      if (!(d.abs_lower() > gap)) return cert;
    }
  cert.ok = true;
  cert.radius = r;
  return cert;
}

}  // namespace

EmbeddingSet isolate_roots(const ZPoly& p_in, Bits bits) {
  if (bits < 64) fail(ErrorCode::InvalidInput, "precision must be at least 64 bits");
  ZPoly p = p_in;
  p.trim();
  const int n = p.degree();
  if (n < 1) fail(ErrorCode::InvalidInput, "cannot isolate roots of a constant polynomial");

  EmbeddingSet E;
  E.precision_bits = bits;
  if (n == 1) {
    mpq_class root(-p.c[0], p.c[1]);
    root.canonicalize();
    E.values.push_back(Ball::exact(root, bits));
    E.radius = E.values[0].rad;
    E.signature = {1, 0};
    E.pairing = {0};
    return E;
  }
  if (thue::discriminant(p) == 0) fail(ErrorCode::InvalidInput, "polynomial is not squarefree");

  std::vector<Complex> z = initial_points(p, 64);
  Bits prec = 64;
  for (;;) {
    std::vector<Real> coef;
    for (const auto& c : p.c) coef.emplace_back(c, prec);
    for (auto& v : z) v = to_prec(v, prec);
    const int sweeps = prec == 64 ? kMaxSweeps : kPolishSweeps * 4;
    for (int it = 0; it < sweeps; ++it)
      if (aberth_sweep(coef, z, prec)) break;
    if (prec >= bits) break;
    prec = std::min<Bits>(prec * 2, bits);
  }

  Certificate cert = certify(p, z, bits);
  if (!cert.ok) {
    std::vector<Real> coef;
    for (const auto& c : p.c) coef.emplace_back(c, bits);
    for (int it = 0; it < kPolishSweeps && !cert.ok; ++it) {
      aberth_sweep(coef, z, bits);
      cert = certify(p, z, bits);
    }
  }
  if (!cert.ok)
    fail(ErrorCode::PrecisionExhausted, "root separation not certified at " + std::to_string(bits) + " bits");
  const Real& r = cert.radius;

  // Classification: a disc meeting the real axis holds a real root because the
  // conjugate root cannot sit in any other (well separated) disc.
  std::vector<Complex> reals, uppers;
  for (auto& v : z) {
    if (abs(v.im) <= r) {
      reals.push_back({v.re, Real(bits)});
    } else if (v.im.sign() > 0) {
      uppers.push_back(v);
    }
  }
  const std::size_t lowers = z.size() - reals.size() - uppers.size();
  if (lowers != uppers.size())
    fail(ErrorCode::PrecisionExhausted, "conjugate pairing of non-real roots not certified");
  // Every lower root must sit within 2r of the conjugate of some upper root.
  for (const auto& v : z) {
    if (abs(v.im) <= r || v.im.sign() > 0) continue;
    bool matched = std::any_of(uppers.begin(), uppers.end(), [&](const Complex& u) {
      Ball d = Ball(conj(u), Real(Ball::kRadiusBits)) - Ball(v, Real(Ball::kRadiusBits));
      Real two_r(Ball::kRadiusBits);
      mpfr_mul_ui(two_r.get(), r.get(), 2, MPFR_RNDU);
      return d.abs_upper() <= two_r;
    });
    if (!matched) fail(ErrorCode::PrecisionExhausted, "conjugate pairing of non-real roots not certified");
  }

  auto by_re = [](const Complex& a, const Complex& b) {
    if (a.re < b.re) return true;
    if (b.re < a.re) return false;
    return a.im < b.im;
  };
  std::sort(reals.begin(), reals.end(), by_re);
  std::sort(uppers.begin(), uppers.end(), by_re);

  for (const auto& v : reals) {
    E.pairing.push_back(static_cast<int>(E.values.size()));
    E.values.emplace_back(v, r);
  }
  for (const auto& v : uppers) {
    const int j = static_cast<int>(E.values.size());
    E.pairing.push_back(j + 1);
    E.pairing.push_back(j);
    E.values.emplace_back(v, r);
    E.values.emplace_back(conj(v), r);
  }
  E.radius = with_precision(r, Ball::kRadiusBits, MPFR_RNDU);
  E.signature = {static_cast<int>(reals.size()), static_cast<int>(uppers.size())};
  return E;
}

EmbeddingSet compute_embeddings(const FieldPtr& field, Bits bits) {
  EmbeddingSet E = isolate_roots(field->poly(), bits);
  E.field = field;
  return E;
}

Ball evaluate(const QPoly& p, const Ball& z) {
  const Bits prec = z.precision();
  if (p.c.empty()) return Ball::exact(mpq_class(0), prec);
  Ball acc = Ball::exact(p.c.back(), prec);
  for (std::size_t i = p.c.size() - 1; i-- > 0;) acc = acc * z + Ball::exact(p.c[i], prec);
  return acc;
}

std::vector<Ball> embed(const AlgElement& a, const EmbeddingSet& E) {
  if (E.field && !E.field->same_as(*a.field()))
    fail(ErrorCode::FieldMismatch, "embedding set belongs to a different field");
  if (E.size() != a.field()->degree())
    fail(ErrorCode::FieldMismatch, "embedding set size does not match the field degree");
  QPoly p{a.coords()};
  p.trim();
  std::vector<Ball> out;
  out.reserve(E.values.size());
  for (const auto& v : E.values) out.push_back(evaluate(p, v));
  return out;
}

Real house(const AlgElement& a, const EmbeddingSet& E) {
  Real h(Ball::kRadiusBits);
  for (const auto& b : embed(a, E)) h = max(h, b.abs_upper());
  return h;
}

bool is_almost_totally_imaginary(const EmbeddingSet& E) { return E.signature.r1 <= 1; }

}  // namespace thue
