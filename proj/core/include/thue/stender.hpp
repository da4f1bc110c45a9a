#pragma once

#include <vector>

#include "thue/algnum.hpp"
#include "thue/bounds.hpp"
#include "thue/forms.hpp"
#include "thue/solve.hpp"
#include "thue/units.hpp"

namespace thue::stender {

struct Params {
  long D = 2;
  int c = 1;
};

// Error(InvalidInput) unless D >= 2 and c is +-1.
void validate(const Params& p);

// Coefficients of f = X^4 - 4D^2 X^3 + (8D^4 + 2c) X^2 + 4cD^2 X + 1, leading first.
std::vector<mpz_class> base_coefficients(const Params& p);
FieldPtr base_polynomial(const Params& p);
// Q(theta) with theta^4 = -4(D^4 + c).
FieldPtr theta_field(const Params& p);
// eps = D^2 + D theta + theta^2 / 2 in Q(theta).
AlgElement unit_epsilon(const Params& p);
// {eps} with torsion -1 in the field of the base polynomial, where eps is the generator.
UnitBasis unit_basis(const Params& p, Bits bits = 128);

/// X^4 + a X^3 + b X^2 + c X + 1 = prod_i (X - eps_i^n).
struct FamilyCoeffs {
  long n = 0;
  mpz_class a;
  mpz_class b;
  mpz_class c;

  friend bool operator==(const FamilyCoeffs&, const FamilyCoeffs&) = default;
};

// Both linear recurrences, run backward for n < 0. The b-sequence is seeded
// with b_{-2..2} and b_3 = (a_3^2 + a_6)/2.
FamilyCoeffs coeffs_by_recurrence(const Params& p, long n);
// Elementary symmetric functions of the eps_i^n, certified and rounded.
// Error(PrecisionExhausted) when `bits` cannot separate the integers.
FamilyCoeffs coeffs_direct(const Params& p, long n, Bits bits = 256);

// The closed form 512 D^12 + 1768 D^8 c + 264 D^4 + 2c as published for b_3.
mpz_class printed_b3(const Params& p);
// 512 D^12 + 768 D^8 c + 264 D^4 + 2c, the value the power sums give.
mpz_class corrected_b3(const Params& p);

// F_n = (1, a_{n+1}, b_{n+1}, c_{n+1}, 1); Error(DegenerateIndex) for n = -1.
BinaryForm family_form(const Params& p, long n);

// All (x, y, n) with x y != 0, n != -1, |x|, |y| <= caps.xy, |n| <= caps.A and
// |F_n(x, y)| <= m. Parallel over n.
FamilySolveResult solve_family(const Params& p, const mpz_class& m, const SearchCaps& caps,
                               const LinFormBoundProvider* provider = nullptr);

}  // namespace thue::stender
