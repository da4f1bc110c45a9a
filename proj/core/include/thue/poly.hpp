#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace thue {

// Coefficient vectors in this header are stored lowest degree first:
// c[i] is the coefficient of X^i. The zero polynomial has an empty vector.
// Domain types (NumberField, BinaryForm) expose leading-first lists instead.

struct QPoly {
  std::vector<mpq_class> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const mpq_class& leading() const { return c.back(); }
  void trim();

  friend bool operator==(const QPoly&, const QPoly&) = default;
};

struct ZPoly {
  std::vector<mpz_class> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const mpz_class& leading() const { return c.back(); }
  void trim();

  friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

ZPoly zpoly_from_leading_first(const std::vector<mpz_class>& coeffs);
std::vector<mpz_class> leading_first(const ZPoly& p);
QPoly to_qpoly(const ZPoly& p);

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& s);
// Euclidean division; b must be nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);
QPoly derivative(const QPoly& a);
// Monic gcd (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
mpq_class evaluate(const QPoly& p, const mpq_class& x);
// Extended gcd: returns g = s*a + t*b with g monic.
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

mpz_class content(const ZPoly& p);
// Clears denominators, divides by the content, makes the leading coefficient positive.
ZPoly primitive_part(const QPoly& p);
ZPoly primitive_part(const ZPoly& p);
// Squarefree part via gcd with the derivative.
QPoly squarefree_part(const QPoly& p);

// Resultant via the Sylvester determinant (fraction-free elimination).
mpz_class resultant(const ZPoly& a, const ZPoly& b);
mpz_class discriminant(const ZPoly& p);

// Exact rational roots by the divisor test; nullopt when the leading or
// constant coefficient is too large to factor by trial division.
std::optional<std::vector<mpq_class>> rational_roots(const ZPoly& p);

// True iff p mod `prime` keeps its degree and is irreducible over F_prime.
bool irreducible_mod_prime(const ZPoly& p, std::uint32_t prime);

std::vector<std::uint32_t> small_primes(std::size_t count);

}  // namespace thue
