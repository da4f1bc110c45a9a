#include "thue/poly.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace thue {

void QPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly zpoly_from_leading_first(const std::vector<mpz_class>& coeffs) {
  ZPoly p;
  p.c.assign(coeffs.rbegin(), coeffs.rend());
  p.trim();
  return p;
}

std::vector<mpz_class> leading_first(const ZPoly& p) { return {p.c.rbegin(), p.c.rend()}; }

QPoly to_qpoly(const ZPoly& p) {
  QPoly q;
  q.c.reserve(p.c.size());
  for (const auto& v : p.c) q.c.emplace_back(v);
  return q;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& s) {
  QPoly r = a;
  for (auto& v : r.c) v *= s;
  r.trim();
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  assert(!b.is_zero());
  remainder = a;
  quotient.c.clear();
  if (a.degree() < b.degree()) return;
  quotient.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpq_class(0));
  const mpq_class& lead = b.leading();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    int shift = remainder.degree() - b.degree();
    mpq_class f = remainder.leading() / lead;
    quotient.c[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) remainder.c[j + static_cast<std::size_t>(shift)] -= f * b.c[j];
    remainder.c.pop_back();
    remainder.trim();
  }
  quotient.trim();
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * static_cast<long>(i));
  r.trim();
  return r;
}

namespace {

QPoly monic(QPoly p) {
  if (p.is_zero()) return p;
  mpq_class inv = 1 / p.leading();
  return scale(p, inv);
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0{{mpq_class(1)}}, s1;
  QPoly t0, t1{{mpq_class(1)}};
  while (!r1.is_zero()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  mpq_class inv = 1 / r0.leading();
  s = scale(s0, inv);
  t = scale(t0, inv);
  return scale(r0, inv);
}

mpq_class evaluate(const QPoly& p, const mpq_class& x) {
  mpq_class v = 0;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) v = v * x + *it;
  return v;
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& v : p.c) g = gcd(g, v);
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  ZPoly r = p;
  r.trim();
  if (r.is_zero()) return r;
  mpz_class g = content(r);
  if (r.leading() < 0) g = -g;
  for (auto& v : r.c) v /= g;
  return r;
}

ZPoly primitive_part(const QPoly& p) {
  ZPoly r;
  if (p.is_zero()) return r;
  mpz_class den = 1;
  for (const auto& v : p.c) den = lcm(den, v.get_den());
  for (const auto& v : p.c) {
    mpq_class scaled = v * den;
    r.c.push_back(scaled.get_num());
  }
  return primitive_part(r);
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p;
  QPoly g = gcd(p, derivative(p));
  if (g.degree() <= 0) return p;
  QPoly q, r;
  divmod(p, g, q, r);
  return q;
}

mpz_class resultant(const ZPoly& a, const ZPoly& b) {
  int m = a.degree();
  int n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(size),
                                        std::vector<mpz_class>(static_cast<std::size_t>(size), 0));
  // Sylvester rows, leading coefficient first.
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s[row][row + k] = a.c[static_cast<std::size_t>(m - k)];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s[n + row][row + k] = b.c[static_cast<std::size_t>(n - k)];

  // Bareiss fraction-free elimination.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (s[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(s[k], s[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        s[i][j] = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        mpz_divexact(s[i][j].get_mpz_t(), s[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  mpz_class det = s[size - 1][size - 1];
  return sign > 0 ? det : mpz_class(-det);
}

mpz_class discriminant(const ZPoly& p) {
  int n = p.degree();
  if (n < 1) return 0;
  ZPoly dp;
  for (std::size_t i = 1; i < p.c.size(); ++i) dp.c.push_back(p.c[i] * static_cast<long>(i));
  mpz_class res = resultant(p, dp);
  mpz_class disc = res / p.leading();
  if (((n * (n - 1)) / 2) % 2 == 1) disc = -disc;
  return disc;
}

namespace {

std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  if (v > mpz_class("1000000000000")) return std::nullopt;
  unsigned long long n = v.get_ui();
  std::vector<mpz_class> out;
  for (unsigned long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.emplace_back(static_cast<unsigned long>(d));
      if (d != n / d) out.emplace_back(static_cast<unsigned long>(n / d));
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<mpq_class>> rational_roots(const ZPoly& p) {
  std::vector<mpq_class> roots;
  ZPoly q = p;
  q.trim();
  if (q.degree() < 1) return roots;
  std::size_t low = 0;
  while (q.c[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(low));
    if (q.degree() < 1) return roots;
  }
  auto nums = positive_divisors(q.c.front());
  auto dens = positive_divisors(q.leading());
  if (!nums || !dens) return std::nullopt;
  QPoly qq = to_qpoly(q);
  for (const auto& a : *nums) {
    for (const auto& b : *dens) {
      if (gcd(a, b) != 1) continue;
      for (int s : {1, -1}) {
        mpq_class x(a * s, b);
        x.canonicalize();
        if (evaluate(qq, x) == 0) roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// F_p[X]

namespace {

using Fp = std::vector<std::uint64_t>;

struct ModP {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  void trim(Fp& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  Fp mod(Fp a, const Fp& b) const {
    trim(a);
    std::uint64_t lead_inv = inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mul(a.back(), lead_inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mul(f, b[j])) % p;
      trim(a);
    }
    return a;
  }
  Fp mulmod(const Fp& a, const Fp& b, const Fp& m) const {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul(a[i], b[j])) % p;
    return mod(std::move(r), m);
  }
  Fp powmod(Fp base, std::uint64_t e, const Fp& m) const {
    Fp result{1};
    base = mod(std::move(base), m);
    while (e > 0) {
      if (e & 1) result = mulmod(result, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return result;
  }
  Fp gcd(Fp a, Fp b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Fp r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }
};

}  // namespace

bool irreducible_mod_prime(const ZPoly& poly, std::uint32_t prime) {
  ModP F{prime};
  int n = poly.degree();
  if (n < 1) return false;
  Fp f(poly.c.size());
  for (std::size_t i = 0; i < poly.c.size(); ++i) {
    mpz_class r = poly.c[i] % prime;
    if (r < 0) r += prime;
    f[i] = r.get_ui();
  }
  if (f.back() == 0) return false;
  if (n == 1) return true;
  Fp df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(F.mul(f[i], i % prime));
  F.trim(df);
  if (df.empty() || F.gcd(f, df).size() != 1) return false;
  Fp x{0, 1};
  Fp h = x;
  for (int k = 1; k <= n / 2; ++k) {
    h = F.powmod(h, prime, f);
    Fp diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + prime - 1) % prime;
    F.trim(diff);
    if (diff.empty()) return false;
    if (F.gcd(f, diff).size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> small_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; out.size() < count; ++n) {
    bool prime = true;
    for (std::uint32_t d : out) {
      if (d * d > n) break;
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace thue
