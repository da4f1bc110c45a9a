#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <utility>

namespace thue {

using Bits = long;

/// Multiprecision real with a per-value precision. Binary operations produce
/// a result at the larger operand precision; the rounding mode is explicit
/// wherever it matters for certification.
class Real {
 public:
  explicit Real(Bits prec = 64);
  Real(double v, Bits prec);
  Real(long v, Bits prec);
  Real(const mpz_class& v, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const mpq_class& v, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  // Parses a decimal string; throws Error(InvalidInput) on malformed text.
  static Real parse(const std::string& text, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pow2(long exponent, Bits prec);
  static Real pi(Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real infinity(Bits prec);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Bits precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  // Scientific notation with `digits` significant digits, rounded with `rnd`.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;
  // Nearest integer (ties away from zero).
  mpz_class round_to_integer() const;
  mpz_class floor_to_integer() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

 private:
  mpfr_t value_;
};

Real add(const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN);
Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN);
Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN);
Real div(const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN);
Real neg(const Real& a);
Real abs(const Real& a);
Real sqrt(const Real& a, mpfr_rnd_t rnd = MPFR_RNDN);
Real log(const Real& a, mpfr_rnd_t rnd = MPFR_RNDN);
Real exp(const Real& a, mpfr_rnd_t rnd = MPFR_RNDN);
Real pow(const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN);
Real hypot(const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// Same value at a different precision.
Real with_precision(const Real& a, Bits prec, mpfr_rnd_t rnd = MPFR_RNDN);

inline Real operator+(const Real& a, const Real& b) { return add(a, b); }
inline Real operator-(const Real& a, const Real& b) { return sub(a, b); }
inline Real operator*(const Real& a, const Real& b) { return mul(a, b); }
inline Real operator/(const Real& a, const Real& b) { return div(a, b); }
inline Real operator-(const Real& a) { return neg(a); }

std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

struct Complex {
  Real re;
  Real im;

  explicit Complex(Bits prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Bits precision() const { return re.precision(); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex conj(const Complex& a);
Real abs(const Complex& a, mpfr_rnd_t rnd = MPFR_RNDN);

/// Complex disc: every quantity computed from balls is guaranteed to lie in
/// the returned ball, provided the inputs did.
struct Ball {
  Complex mid;
  Real rad;  // nonnegative, kept at low precision, rounded upward

  static constexpr Bits kRadiusBits = 64;

  explicit Ball(Bits prec = 64);
  Ball(Complex m, Real r);
  static Ball exact(const mpq_class& q, Bits prec);
  static Ball exact(const mpz_class& z, Bits prec);

  Bits precision() const { return mid.precision(); }
  Real abs_upper() const;
  Real abs_lower() const;  // clamps at zero
  bool contains_zero() const;
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
// Throws Error(PrecisionExhausted) when the divisor ball contains zero.
Ball operator/(const Ball& a, const Ball& b);
Ball conj(const Ball& a);
Ball pow(const Ball& a, long n);
// Upper bound on the radius growth from one rounding of a value of modulus |z|.
Real rounding_radius(const Complex& z);

}  // namespace thue
