#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "thue/algnum.hpp"
#include "thue/provider.hpp"
#include "thue/real.hpp"
#include "thue/units.hpp"

namespace thue {

struct NamedConstant {
  std::string name;
  Real value{128};
  bool lower = false;  // true when the constant is used as a lower bound
  std::string tag;     // which step of the argument produced it
  std::vector<std::string> inputs;
};

struct SolutionBox {
  Real log_xy_bound{128};  // log max{|x|, |y|, e^{h(alpha eps)}} <= this
  Real A_bound{128};       // max |a_i| of the unit exponents
  Real B_bound{128};       // max |b_i| of the beta decomposition
  // Decimal rendering of exp(log_xy_bound), rounded upward.
  std::string xy_bound() const;
};

struct BoundReport {
  mpz_class m;
  int degree = 0;
  int rank = 0;
  Signature signature;
  std::string provider;
  Irreducibility irreducibility = Irreducibility::Asserted;
  Bits bits = 128;
  std::vector<NamedConstant> inputs;     // measured quantities (heights, houses), nonnegative
  std::vector<NamedConstant> constants;  // dependency order; every entry positive
  Real kappa1{128};
  Real kappa_final{128};
  SolutionBox box;
  std::string third_embedding_rule;

  const NamedConstant& get(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
};

// Composes the full constant chain for the family {alpha eps} and the inverse
// family used when |x| > |y|. Errors: InvalidInput (m < 2),
// NotAlmostTotallyImaginary, ProviderMissing (null provider or table gap).
BoundReport compose_bounds(const UnitBasis& B, const AlgElement& alpha, const mpz_class& m,
                           const LinFormBoundProvider* provider, Bits bits = 128);

// Upper bound for the largest t >= 0 with a t <= b log(t + c) + e; zero when
// no such t exists. Requires a, b > 0 and c >= 0.
Real implicit_bound(const Real& a, const Real& b, const Real& c, const Real& e, Bits bits = 128);

/// The quantities A~, A, B~, B and h(rho) of one solution (x, y, eps).
struct ParameterProfile {
  Real A_tilde{128};
  long A = 1;
  Real B_tilde{128};
  long B = 1;
  Real rho_height{128};
};

ParameterProfile parameter_profile(const UnitBasis& B, const AlgElement& alpha, const ExponentVector& eps,
                                   const mpz_class& x, const mpz_class& y, const mpz_class& m);

}  // namespace thue
