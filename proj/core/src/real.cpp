#include "thue/real.hpp"

#include <algorithm>
#include <memory>

#include "thue/error.hpp"

namespace thue {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DegenerateTwist: return "DegenerateTwist";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::DegenerateIndex: return "DegenerateIndex";
    case ErrorCode::RealRootPresent: return "RealRootPresent";
    case ErrorCode::CoincidentEmbeddings: return "CoincidentEmbeddings";
    case ErrorCode::NotAlmostTotallyImaginary: return "NotAlmostTotallyImaginary";
    case ErrorCode::ProviderMissing: return "ProviderMissing";
  }
  return "Unknown";
}

namespace {

Bits clamp_prec(Bits p) { return std::max<Bits>(p, MPFR_PREC_MIN); }

Bits join(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(Bits prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_zero(value_, 1);
}

Real::Real(double v, Bits prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(long v, Bits prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v, Bits prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_z(value_, v.get_mpz_t(), rnd);
}

Real::Real(const mpq_class& v, Bits prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_q(value_, v.get_mpq_t(), rnd);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(const std::string& text, Bits prec, mpfr_rnd_t rnd) {
  Real r(prec);
  if (text.empty() || mpfr_set_str(r.value_, text.c_str(), 10, rnd) != 0) {
    fail(ErrorCode::InvalidInput, "malformed decimal '" + text + "'");
  }
  return r;
}

Real Real::pow2(long exponent, Bits prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.value_, 1, exponent, MPFR_RNDN);
  return r;
}

Real Real::pi(Bits prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_const_pi(r.value_, rnd);
  return r;
}

Real Real::infinity(Bits prec) {
  Real r(prec);
  mpfr_set_inf(r.value_, 1);
  return r;
}

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, rnd), mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mantissa is 0.DDDD x 10^exp10; print D.DDD e(exp10-1)
  std::string out = sign + mant.substr(0, 1);
  std::string rest = mant.substr(1);
  while (!rest.empty() && rest.back() == '0') rest.pop_back();
  if (!rest.empty()) out += "." + rest;
  long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

mpz_class Real::round_to_integer() const {
  Real t(precision());
  mpfr_round(t.value_, value_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.value_, MPFR_RNDN);
  return z;
}

mpz_class Real::floor_to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

Real& Real::operator+=(const Real& o) { return *this = add(*this, o); }
Real& Real::operator-=(const Real& o) { return *this = sub(*this, o); }
Real& Real::operator*=(const Real& o) { return *this = mul(*this, o); }
Real& Real::operator/=(const Real& o) { return *this = div(*this, o); }

Real add(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join(a, b));
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real div(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join(a, b));
  mpfr_div(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real neg(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.precision());
  mpfr_sqrt(r.get(), a.get(), rnd);
  return r;
}

Real log(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.precision());
  mpfr_log(r.get(), a.get(), rnd);
  return r;
}

Real exp(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.precision());
  mpfr_exp(r.get(), a.get(), rnd);
  return r;
}

Real pow(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join(a, b));
  mpfr_pow(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real hypot(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real max(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) ? b : a; }
Real min(const Real& a, const Real& b) { return mpfr_less_p(b.get(), a.get()) ? b : a; }

Real with_precision(const Real& a, Bits prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set(r.get(), a.get(), rnd);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Complex conj(const Complex& a) { return {a.re, neg(a.im)}; }

Real abs(const Complex& a, mpfr_rnd_t rnd) { return hypot(a.re, a.im, rnd); }

// ---------------------------------------------------------------------------
// Ball arithmetic

namespace {

Real up(const Real& v) { return with_precision(v, Ball::kRadiusBits, MPFR_RNDU); }

Real add_up(const Real& a, const Real& b) {
  Real r(Ball::kRadiusBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul_up(const Real& a, const Real& b) {
  Real r(Ball::kRadiusBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

// |re| + |im|, rounded upward: an upper bound on |z|.
Real l1_up(const Complex& z) {
  Real r(Ball::kRadiusBits);
  mpfr_t ar, ai;
  mpfr_init2(ar, z.re.precision());
  mpfr_init2(ai, z.im.precision());
  mpfr_abs(ar, z.re.get(), MPFR_RNDU);
  mpfr_abs(ai, z.im.get(), MPFR_RNDU);
  mpfr_add(r.get(), ar, ai, MPFR_RNDU);
  mpfr_clear(ar);
  mpfr_clear(ai);
  return r;
}

Real ulp_factor(Bits prec, long extra) { return Real::pow2(extra - prec, Ball::kRadiusBits); }

}  // namespace

Real rounding_radius(const Complex& z) { return mul_up(l1_up(z), ulp_factor(z.precision(), 1)); }

Ball::Ball(Bits prec) : mid(prec), rad(kRadiusBits) {}

Ball::Ball(Complex m, Real r) : mid(std::move(m)), rad(up(r)) {}

Ball Ball::exact(const mpq_class& q, Bits prec) {
  Ball b(prec);
  int inexact = mpfr_set_q(b.mid.re.get(), q.get_mpq_t(), MPFR_RNDN);
  if (inexact != 0) b.rad = mul_up(up(abs(b.mid.re)), ulp_factor(prec, 0));
  return b;
}

Ball Ball::exact(const mpz_class& z, Bits prec) {
  Ball b(prec);
  int inexact = mpfr_set_z(b.mid.re.get(), z.get_mpz_t(), MPFR_RNDN);
  if (inexact != 0) b.rad = mul_up(up(abs(b.mid.re)), ulp_factor(prec, 0));
  return b;
}

Real Ball::abs_upper() const { return add_up(abs(mid, MPFR_RNDU), rad); }

Real Ball::abs_lower() const {
  Real a = abs(mid, MPFR_RNDD);
  Real r = sub(a, rad, MPFR_RNDD);
  if (r.sign() < 0) return Real(mid.precision());
  return r;
}

bool Ball::contains_zero() const { return abs(mid, MPFR_RNDD) <= rad; }

Ball operator+(const Ball& a, const Ball& b) {
  Complex m = a.mid + b.mid;
  Real r = add_up(add_up(a.rad, b.rad), rounding_radius(m));
  return {std::move(m), std::move(r)};
}

Ball operator-(const Ball& a, const Ball& b) {
  Complex m = a.mid - b.mid;
  Real r = add_up(add_up(a.rad, b.rad), rounding_radius(m));
  return {std::move(m), std::move(r)};
}

Ball operator*(const Ball& a, const Ball& b) {
  Complex m = a.mid * b.mid;
  Real na = l1_up(a.mid);
  Real nb = l1_up(b.mid);
  Real r = add_up(mul_up(na, b.rad), mul_up(nb, a.rad));
  r = add_up(r, mul_up(a.rad, b.rad));
  r = add_up(r, mul_up(mul_up(na, nb), ulp_factor(m.precision(), 3)));
  return {std::move(m), std::move(r)};
}

namespace {

Ball inverse(const Ball& b) {
  Real lower = abs(b.mid, MPFR_RNDD);
  Real gap = sub(lower, b.rad, MPFR_RNDD);
  if (gap.sign() <= 0) fail(ErrorCode::PrecisionExhausted, "division by a ball containing zero");
  Bits p = b.precision();
  Real n = b.mid.re * b.mid.re + b.mid.im * b.mid.im;
  Complex m{b.mid.re / n, neg(b.mid.im) / n};
  // |1/(b+d) - 1/b| <= r / (|b| (|b| - r))
  Real denom(Ball::kRadiusBits);
  mpfr_mul(denom.get(), lower.get(), gap.get(), MPFR_RNDD);
  Real prop(Ball::kRadiusBits);
  mpfr_div(prop.get(), b.rad.get(), denom.get(), MPFR_RNDU);
  Real r = add_up(prop, mul_up(l1_up(m), ulp_factor(p, 4)));
  return {std::move(m), std::move(r)};
}

}  // namespace

Ball operator/(const Ball& a, const Ball& b) { return a * inverse(b); }

Ball conj(const Ball& a) { return {conj(a.mid), a.rad}; }

Ball pow(const Ball& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  Ball result = Ball::exact(mpz_class(1), a.precision());
  Ball base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace thue
