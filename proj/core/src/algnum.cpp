#include "thue/algnum.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "thue/error.hpp"

namespace thue {

namespace {

constexpr std::size_t kWitnessPrimes = 25;

void require_same_field(const AlgElement& a, const AlgElement& b) {
  if (!a.field() || !b.field()) fail(ErrorCode::FieldMismatch, "element without a field");
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    fail(ErrorCode::FieldMismatch, "elements belong to different fields");
}

}  // namespace

std::string to_string(Irreducibility status) {
  return status == Irreducibility::Verified ? "verified" : "asserted";
}

NumberField::NumberField(Token, std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  poly_ = zpoly_from_leading_first(coeffs_);
  degree_ = poly_.degree();
  const int d = degree_;
  const mpq_class a0(coeffs_.front());
  // alpha^d = -(a_1 alpha^(d-1) + ... + a_d) / a_0
  std::vector<mpq_class> row(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = -mpq_class(poly_.c[static_cast<std::size_t>(i)]) / a0;
  reduction_.push_back(row);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    const auto& prev = reduction_.back();
    std::vector<mpq_class> next(static_cast<std::size_t>(d), mpq_class(0));
    // alpha * prev: shift up, fold the top coordinate through alpha^d
    for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
    const mpq_class& top = prev[static_cast<std::size_t>(d - 1)];
    if (top != 0)
      for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] += top * reduction_.front()[static_cast<std::size_t>(i)];
    reduction_.push_back(std::move(next));
  }
}

FieldPtr NumberField::make(std::vector<mpz_class> coeffs, Irreducibility requested) {
  while (!coeffs.empty() && coeffs.front() == 0) coeffs.erase(coeffs.begin());
  if (coeffs.size() < 4) fail(ErrorCode::InvalidInput, "defining polynomial must have degree >= 3");
  if (coeffs.front() <= 0) fail(ErrorCode::InvalidInput, "leading coefficient a_0 must be positive");
  if (coeffs.back() == 0) fail(ErrorCode::Reducible, "a_d = 0: X divides the defining polynomial");
  mpz_class g = 0;
  for (const auto& c : coeffs) g = gcd(g, c);
  if (g != 1) fail(ErrorCode::InvalidInput, "defining polynomial is not primitive (content " + g.get_str() + ")");

  auto field = std::make_shared<NumberField>(Token{}, std::move(coeffs));
  field->discriminant_ = thue::discriminant(field->poly_);
  if (field->discriminant_ == 0) fail(ErrorCode::Reducible, "defining polynomial has a repeated factor");

  if (auto roots = rational_roots(field->poly_); roots && !roots->empty())
    fail(ErrorCode::Reducible, "defining polynomial has the rational root " + roots->front().get_str());

  std::size_t tried = 0;
  for (std::uint32_t p : small_primes(400)) {
    if (tried == kWitnessPrimes) break;
    if (field->coeffs_.front() % p == 0 || field->discriminant_ % p == 0) continue;
    ++tried;
    if (irreducible_mod_prime(field->poly_, p)) {
      field->witness_ = p;
      break;
    }
  }
  field->irreducibility_ =
      (requested == Irreducibility::Verified && field->witness_) ? Irreducibility::Verified : Irreducibility::Asserted;
  return field;
}

const std::vector<mpq_class>& NumberField::reduction_row(int k) const {
  return reduction_.at(static_cast<std::size_t>(k - degree_));
}

bool NumberField::same_as(const NumberField& other) const { return coeffs_ == other.coeffs_; }

// ---------------------------------------------------------------------------

AlgElement::AlgElement(FieldPtr field, std::vector<mpq_class> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) fail(ErrorCode::InvalidInput, "element without a field");
  if (static_cast<int>(coords_.size()) != field_->degree())
    fail(ErrorCode::InvalidInput, "coordinate vector length " + std::to_string(coords_.size()) +
                                      " does not match the field degree " + std::to_string(field_->degree()));
  for (auto& c : coords_) c.canonicalize();
}

AlgElement AlgElement::zero(const FieldPtr& field) {
  return {field, std::vector<mpq_class>(static_cast<std::size_t>(field->degree()), mpq_class(0))};
}

AlgElement AlgElement::one(const FieldPtr& field) { return rational(field, 1); }

AlgElement AlgElement::rational(const FieldPtr& field, const mpq_class& q) {
  AlgElement e = zero(field);
  e.coords_[0] = q;
  return e;
}

AlgElement AlgElement::generator(const FieldPtr& field) {
  AlgElement e = zero(field);
  e.coords_[1] = 1;
  return e;
}

AlgElement AlgElement::from_polynomial(const FieldPtr& field, const QPoly& p) {
  const int d = field->degree();
  std::vector<mpq_class> out(static_cast<std::size_t>(d), mpq_class(0));
  std::vector<mpq_class> power(static_cast<std::size_t>(d), mpq_class(0));  // alpha^k coordinates
  power[0] = 1;
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    if (k > 0) {
      // multiply power by alpha
      mpq_class top = power[static_cast<std::size_t>(d - 1)];
      for (int i = d - 1; i >= 1; --i) power[static_cast<std::size_t>(i)] = power[static_cast<std::size_t>(i - 1)];
      power[0] = 0;
      if (top != 0)
        for (int i = 0; i < d; ++i) power[static_cast<std::size_t>(i)] += top * field->reduction_row(d)[static_cast<std::size_t>(i)];
    }
    if (p.c[k] == 0) continue;
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += p.c[k] * power[static_cast<std::size_t>(i)];
  }
  return {field, std::move(out)};
}

bool AlgElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool AlgElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

AlgElement AlgElement::operator-() const {
  AlgElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  require_same_field(a, b);
  AlgElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
  require_same_field(a, b);
  AlgElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  require_same_field(a, b);
  const NumberField& K = *a.field_;
  const int d = K.degree();
  std::vector<mpq_class> prod(static_cast<std::size_t>(2 * d - 1), mpq_class(0));
  for (int i = 0; i < d; ++i) {
    if (a.coords_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j)
      prod[static_cast<std::size_t>(i + j)] += a.coords_[static_cast<std::size_t>(i)] * b.coords_[static_cast<std::size_t>(j)];
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + d);
  for (int k = d; k <= 2 * d - 2; ++k) {
    const mpq_class& c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const auto& row = K.reduction_row(k);
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += c * row[static_cast<std::size_t>(i)];
  }
  return {a.field_, std::move(out)};
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  require_same_field(a, b);
  return a.coords_ == b.coords_;
}

AlgElement add(const AlgElement& a, const AlgElement& b) { return a + b; }
AlgElement mul(const AlgElement& a, const AlgElement& b) { return a * b; }

std::vector<std::vector<mpq_class>> multiplication_matrix(const AlgElement& a) {
  const int d = a.field()->degree();
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(d), std::vector<mpq_class>(static_cast<std::size_t>(d)));
  AlgElement col = a;
  const AlgElement alpha = AlgElement::generator(a.field());
  for (int j = 0; j < d; ++j) {
    if (j > 0) col = col * alpha;
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coords()[static_cast<std::size_t>(i)];
  }
  return m;
}

AlgElement inverse(const AlgElement& a) {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const int d = a.field()->degree();
  auto m = multiplication_matrix(a);
  // Solve M x = e_0 by Gauss-Jordan over Q.
  std::vector<mpq_class> rhs(static_cast<std::size_t>(d), mpq_class(0));
  rhs[0] = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    while (pivot < d && m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == d) fail(ErrorCode::DivisionByZero, "singular multiplication matrix (reducible field?)");
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
    std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
    const mpq_class inv = 1 / m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int j = col; j < d; ++j) m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv;
    rhs[static_cast<std::size_t>(col)] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == col) continue;
      const mpq_class f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j < d; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(col)];
    }
  }
  return {a.field(), std::move(rhs)};
}

AlgElement pow(const AlgElement& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  AlgElement result = AlgElement::one(a.field());
  AlgElement base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

QPoly charpoly(const AlgElement& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{d-k+1} I, c_{d-k} = -tr(A M_k) / k.
  const int d = a.field()->degree();
  const auto A = multiplication_matrix(a);
  using Matrix = std::vector<std::vector<mpq_class>>;
  const auto sz = static_cast<std::size_t>(d);
  Matrix M(sz, std::vector<mpq_class>(sz, mpq_class(0)));
  QPoly p;
  p.c.assign(sz + 1, mpq_class(0));
  p.c[sz] = 1;
  for (int k = 1; k <= d; ++k) {
    Matrix next(sz, std::vector<mpq_class>(sz, mpq_class(0)));
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t l = 0; l < sz; ++l) {
        if (A[i][l] == 0) continue;
        for (std::size_t j = 0; j < sz; ++j) next[i][j] += A[i][l] * M[l][j];
      }
    for (std::size_t i = 0; i < sz; ++i) next[i][i] += p.c[sz - static_cast<std::size_t>(k) + 1];
    M = std::move(next);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t l = 0; l < sz; ++l) tr += A[i][l] * M[l][i];
    p.c[sz - static_cast<std::size_t>(k)] = -tr / k;
  }
  p.trim();
  return p;
}

ZPoly minpoly_integer(const AlgElement& a) { return primitive_part(squarefree_part(charpoly(a))); }

mpq_class norm(const AlgElement& a) {
  QPoly p = charpoly(a);
  mpq_class c0 = p.c.empty() ? mpq_class(0) : p.c.front();
  if (p.degree() < a.field()->degree()) c0 = 0;  // charpoly X^d trimmed nothing; guard only
  return (a.field()->degree() % 2 == 0) ? c0 : mpq_class(-c0);
}

mpq_class trace(const AlgElement& a) {
  QPoly p = charpoly(a);
  const auto d = static_cast<std::size_t>(a.field()->degree());
  return -p.c[d - 1];
}

bool is_primitive_element(const AlgElement& a) { return minpoly_integer(a).degree() == a.field()->degree(); }

}  // namespace thue
