#pragma once

#include <vector>

#include "thue/algnum.hpp"
#include "thue/real.hpp"
#include "thue/units.hpp"

namespace thue {

/// Homogeneous integer form a_0 X^d + a_1 X^{d-1} Y + ... + a_d Y^d.
struct BinaryForm {
  std::vector<mpz_class> coeffs;  // leading first

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  // F(X, 1) as a polynomial, lowest degree first.
  ZPoly dehomogenized() const { return zpoly_from_leading_first(coeffs); }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

// Homogenised minimal polynomial of theta; Error(DegenerateTwist) if theta
// does not generate K.
BinaryForm form_of_element(const AlgElement& theta);

// F_eps for eps = unit_from_exponents(B, e).
BinaryForm twist(const AlgElement& alpha, const ExponentVector& e, const UnitBasis& B);

mpz_class evaluate(const BinaryForm& F, const mpz_class& x, const mpz_class& y);

struct ReciprocalForm {
  BinaryForm form;
  int sign = 1;  // form(y, x) = sign * F(x, y)
};

// Reverses the coefficients and restores a positive leading coefficient.
// Error(ZeroConstantTerm) when F(0, 1) = 0.
ReciprocalForm reciprocal_form(const BinaryForm& F);

// Upper bound for |F(x,y) - a_0 prod_j (x - theta_j y)| given enclosures of the
// conjugates theta_j of the twisting element.
Real norm_form_residual(const BinaryForm& F, const mpz_class& x, const mpz_class& y,
                        const std::vector<Ball>& theta_embeddings);

}  // namespace thue
