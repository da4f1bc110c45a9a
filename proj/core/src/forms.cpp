#include "thue/forms.hpp"

#include "thue/error.hpp"

namespace thue {

BinaryForm form_of_element(const AlgElement& theta) {
  ZPoly mp = minpoly_integer(theta);
  if (mp.degree() < theta.field()->degree())
    fail(ErrorCode::DegenerateTwist, "twisting element has degree " + std::to_string(mp.degree()) +
                                         " < " + std::to_string(theta.field()->degree()));
  return BinaryForm{leading_first(mp)};
}

BinaryForm twist(const AlgElement& alpha, const ExponentVector& e, const UnitBasis& B) {
  return form_of_element(alpha * unit_from_exponents(B, e));
}

mpz_class evaluate(const BinaryForm& F, const mpz_class& x, const mpz_class& y) {
  if (F.coeffs.empty()) return 0;
  mpz_class acc = F.coeffs.front();
  mpz_class ypow = 1;
  for (std::size_t i = 1; i < F.coeffs.size(); ++i) {
    ypow *= y;
    acc = acc * x + F.coeffs[i] * ypow;
  }
  return acc;
}

ReciprocalForm reciprocal_form(const BinaryForm& F) {
  if (F.coeffs.empty() || F.coeffs.back() == 0) fail(ErrorCode::ZeroConstantTerm, "F(0,1) = 0 has no reciprocal");
  ReciprocalForm out;
  out.form.coeffs.assign(F.coeffs.rbegin(), F.coeffs.rend());
  if (out.form.coeffs.front() < 0) {
    out.sign = -1;
    for (auto& c : out.form.coeffs) c = -c;
  }
  return out;
}

Real norm_form_residual(const BinaryForm& F, const mpz_class& x, const mpz_class& y,
                        const std::vector<Ball>& theta) {
  if (static_cast<int>(theta.size()) != F.degree())
    fail(ErrorCode::InvalidInput, "need one conjugate per degree of the form");
  const Bits prec = theta.empty() ? 64 : theta.front().precision();
  Ball prod = Ball::exact(F.coeffs.front(), prec);
  const Ball bx = Ball::exact(x, prec);
  const Ball by = Ball::exact(y, prec);
  for (const auto& t : theta) prod = prod * (bx - t * by);
  Ball diff = Ball::exact(evaluate(F, x, y), prec) - prod;
  return diff.abs_upper();
}

}  // namespace thue
