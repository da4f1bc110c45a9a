#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thue/poly.hpp"

namespace thue {

enum class Irreducibility { Verified, Asserted };

std::string to_string(Irreducibility status);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// K = Q(alpha) for a primitive integer polynomial a_0 X^d + ... + a_d with
/// a_0 > 0, which need not be monic. Immutable once built.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Validates the polynomial and searches for an irreducibility witness among
  // the first 25 primes not dividing a_0 * disc. A `Verified` request with no
  // witness is downgraded to `Asserted`. Throws Error(InvalidInput) on a
  // malformed polynomial and Error(Reducible) on a detected factorisation.
  static FieldPtr make(std::vector<mpz_class> coeffs_leading_first,
                       Irreducibility requested = Irreducibility::Verified);

  int degree() const { return degree_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const ZPoly& poly() const { return poly_; }
  const mpz_class& leading() const { return coeffs_.front(); }
  const mpz_class& discriminant() const { return discriminant_; }
  Irreducibility irreducibility() const { return irreducibility_; }
  std::optional<std::uint32_t> witness_prime() const { return witness_; }

  // Power-basis coordinates of alpha^k for d <= k <= 2d-2.
  const std::vector<mpq_class>& reduction_row(int k) const;

  bool same_as(const NumberField& other) const;

 private:
  struct Token {};

 public:
  NumberField(Token, std::vector<mpz_class> coeffs);

 private:
  std::vector<mpz_class> coeffs_;
  ZPoly poly_;
  int degree_ = 0;
  mpz_class discriminant_;
  Irreducibility irreducibility_ = Irreducibility::Asserted;
  std::optional<std::uint32_t> witness_;
  std::vector<std::vector<mpq_class>> reduction_;
};

/// Element of K as exact rational coordinates on 1, alpha, ..., alpha^(d-1).
class AlgElement {
 public:
  AlgElement() = default;
  AlgElement(FieldPtr field, std::vector<mpq_class> coords);

  static AlgElement zero(const FieldPtr& field);
  static AlgElement one(const FieldPtr& field);
  static AlgElement rational(const FieldPtr& field, const mpq_class& q);
  static AlgElement generator(const FieldPtr& field);
  // Element given as a polynomial in alpha of any degree (lowest first).
  static AlgElement from_polynomial(const FieldPtr& field, const QPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<mpq_class>& coords() const { return coords_; }
  int degree() const { return static_cast<int>(coords_.size()); }
  bool is_zero() const;
  bool is_rational() const;

  AlgElement operator-() const;
  friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend bool operator==(const AlgElement& a, const AlgElement& b);

 private:
  FieldPtr field_;
  std::vector<mpq_class> coords_;
};

AlgElement add(const AlgElement& a, const AlgElement& b);
AlgElement mul(const AlgElement& a, const AlgElement& b);
// Throws Error(DivisionByZero) for a = 0.
AlgElement inverse(const AlgElement& a);
// Negative exponents go through inverse().
AlgElement pow(const AlgElement& a, long n);

// Matrix of x -> a*x on the power basis (column j is a*alpha^j).
std::vector<std::vector<mpq_class>> multiplication_matrix(const AlgElement& a);
// Monic characteristic polynomial of multiplication by a.
QPoly charpoly(const AlgElement& a);
// Squarefree part of charpoly, primitive over Z with positive leading coefficient.
ZPoly minpoly_integer(const AlgElement& a);
mpq_class norm(const AlgElement& a);
mpq_class trace(const AlgElement& a);
bool is_primitive_element(const AlgElement& a);

}  // namespace thue
