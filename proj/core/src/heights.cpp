#include "thue/heights.hpp"

#include "thue/error.hpp"

namespace thue {

Real mahler_measure(const ZPoly& p, const EmbeddingSet& E) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "Mahler measure of the zero polynomial");
  if (E.size() != p.degree()) fail(ErrorCode::InvalidInput, "root enclosure count does not match the degree");
  const Bits prec = std::max<Bits>(E.precision_bits, 64);
  Real m(mpz_class(abs(p.leading())), prec, MPFR_RNDU);
  const Real one(1L, prec);
  for (const auto& v : E.values) {
    Real a = v.abs_upper();
    if (a > one) m = mul(m, with_precision(a, prec, MPFR_RNDU), MPFR_RNDU);
  }
  return m;
}

Real mahler_measure(const ZPoly& p, Bits bits) {
  if (p.degree() == 0) return Real(mpz_class(abs(p.leading())), bits, MPFR_RNDU);
  return mahler_measure(p, isolate_roots(p, bits));
}

HeightValue abs_log_height(const AlgElement& a, Bits bits) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "height of zero");
  const ZPoly mp = minpoly_integer(a);
  HeightValue h;
  h.bits = bits;
  Real m = mahler_measure(mp, bits);
  Real lm = log(m, MPFR_RNDU);
  if (lm.sign() < 0) lm = Real(bits);
  Real deg(static_cast<long>(mp.degree()), bits);
  h.value = with_precision(div(lm, deg, MPFR_RNDU), Ball::kRadiusBits, MPFR_RNDU);
  return h;
}

Real log_plus_upper(const Real& x) {
  if (x <= Real(1L, x.precision())) return Real(x.precision());
  return log(x, MPFR_RNDU);
}

}  // namespace thue
