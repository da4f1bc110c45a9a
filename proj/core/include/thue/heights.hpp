#pragma once

#include "thue/algnum.hpp"
#include "thue/embeddings.hpp"
#include "thue/poly.hpp"
#include "thue/real.hpp"

namespace thue {

struct HeightValue {
  Real value{Ball::kRadiusBits};  // upper bound, natural-log units
  Bits bits = 0;                  // precision of the root enclosures used

  double upper() const { return value.to_double(MPFR_RNDU); }
};

// |a_0| prod max(1, |root_i|), rounded upward. E must enclose the roots of p.
Real mahler_measure(const ZPoly& p, const EmbeddingSet& E);
Real mahler_measure(const ZPoly& p, Bits bits);

// (1/deg) log M(minpoly_integer(a)); throws Error(ZeroElement) for a = 0.
HeightValue abs_log_height(const AlgElement& a, Bits bits = 128);

// Upper bound for log max(1, x).
Real log_plus_upper(const Real& x);

}  // namespace thue
