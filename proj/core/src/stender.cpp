#include "thue/stender.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <thread>

#include "thue/elimination.hpp"
#include "thue/embeddings.hpp"
#include "thue/error.hpp"

namespace thue::stender {

namespace {

mpz_class zpow(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
  if (base < 0 && (e & 1)) r = -r;
  return r;
}

// Terms u_k of a sequence satisfying sum_i rec[i] u_{k+i} = 0 with
// rec.front() = rec.back() = +-1, given consecutive initials starting at `first`.
class Sequence {
 public:
  Sequence(std::vector<mpz_class> rec, long first, std::vector<mpz_class> init)
      : rec_(std::move(rec)), first_(first), last_(first + static_cast<long>(init.size()) - 1) {
    for (std::size_t i = 0; i < init.size(); ++i) terms_[first + static_cast<long>(i)] = init[i];
  }

  const mpz_class& at(long n) {
    const long order = static_cast<long>(rec_.size()) - 1;
    while (n > last_) {
      const long k = last_ + 1 - order;  // solve for u_{k+order}
      mpz_class s = 0;
      for (long i = 0; i < order; ++i) s += rec_[static_cast<std::size_t>(i)] * terms_[k + i];
      terms_[last_ + 1] = -s / rec_.back();
      ++last_;
    }
    while (n < first_) {
      const long k = first_ - 1;  // solve for u_k
      mpz_class s = 0;
      for (long i = 1; i <= order; ++i) s += rec_[static_cast<std::size_t>(i)] * terms_[k + i];
      terms_[k] = -s / rec_.front();
      --first_;
    }
    return terms_.at(n);
  }

 private:
  std::vector<mpz_class> rec_;
  long first_;
  long last_;
  std::map<long, mpz_class> terms_;
};

Sequence a_sequence(const Params& p) {
  const mpz_class D2 = zpow(p.D, 2), D4 = zpow(p.D, 4);
  const long c = p.c;
  // a_{n+4} - 4D^2 a_{n+3} + (8D^4 + 2c) a_{n+2} + 4cD^2 a_{n+1} + a_n = 0
  std::vector<mpz_class> rec{1, 4 * c * D2, 8 * D4 + 2 * c, -4 * D2, 1};
  return Sequence(rec, -1, {4 * c * D2, -4, -4 * D2, 4 * c});
}

Ball certified_integer_check(const Ball& v, mpz_class& out) {
  out = v.mid.re.round_to_integer();
  Ball diff = v - Ball::exact(out, v.precision());
  Real half(0.5, Ball::kRadiusBits);
  if (!(diff.abs_upper() < half)) fail(ErrorCode::PrecisionExhausted, "symmetric function not certified to an integer");
  return diff;
}

}  // namespace

void validate(const Params& p) {
  if (p.D < 2) fail(ErrorCode::InvalidInput, "D must be at least 2");
  if (p.c != 1 && p.c != -1) fail(ErrorCode::InvalidInput, "c must be 1 or -1");
  if (p.D > 1000000) fail(ErrorCode::InvalidInput, "D is unreasonably large");
}

std::vector<mpz_class> base_coefficients(const Params& p) {
  validate(p);
  const mpz_class D2 = zpow(p.D, 2), D4 = zpow(p.D, 4);
  return {1, -4 * D2, 8 * D4 + 2 * p.c, 4 * p.c * D2, 1};
}

FieldPtr base_polynomial(const Params& p) { return NumberField::make(base_coefficients(p)); }

FieldPtr theta_field(const Params& p) {
  validate(p);
  return NumberField::make({1, 0, 0, 0, 4 * (zpow(p.D, 4) + p.c)});
}

AlgElement unit_epsilon(const Params& p) {
  FieldPtr K = theta_field(p);
  return AlgElement(K, {mpq_class(zpow(p.D, 2)), mpq_class(p.D), mpq_class(1, 2), mpq_class(0)});
}

UnitBasis unit_basis(const Params& p, Bits bits) {
  FieldPtr K = base_polynomial(p);
  return make_unit_basis(K, {AlgElement::generator(K)}, AlgElement::rational(K, -1), 2, std::nullopt, bits);
}

FamilyCoeffs coeffs_by_recurrence(const Params& p, long n) {
  validate(p);
  Sequence a = a_sequence(p);
  const mpz_class D4 = zpow(p.D, 4), D8 = zpow(p.D, 8);
  const long c = p.c;
  const mpz_class b1 = 8 * D4 + 2 * c;
  const mpz_class b2 = 64 * D8 + 64 * c * D4 + 6;
  const mpz_class b3 = (a.at(3) * a.at(3) + a.at(6)) / 2;
  // b_{n+6} - (8D^4+2c) b_{n+5} - (16cD^4+1) b_{n+4} - (16D^4-4c) b_{n+3}
  //   - (16cD^4+1) b_{n+2} - (8D^4+2c) b_{n+1} + b_n = 0
  const mpz_class k1 = 8 * D4 + 2 * c, k2 = 16 * c * D4 + 1, k3 = 16 * D4 - 4 * c;
  Sequence b(std::vector<mpz_class>{1, -k1, -k2, -k3, -k2, -k1, 1}, -2, {b2, b1, 6, b1, b2, b3});
  FamilyCoeffs out;
  out.n = n;
  out.a = a.at(n);
  out.b = b.at(n);
  // c_n = a_{-n}: the coefficient of X in prod (X - eps_i^n) with prod eps_i = 1.
  out.c = a.at(-n);
  return out;
}

FamilyCoeffs coeffs_direct(const Params& p, long n, Bits bits) {
  validate(p);
  ZPoly f = zpoly_from_leading_first(base_coefficients(p));
  EmbeddingSet E = isolate_roots(f, bits);
  std::vector<Ball> z;
  for (const auto& v : E.values) z.push_back(pow(v, n));
  // e_1, e_2, e_3 of four values
  Ball e1 = z[0] + z[1] + z[2] + z[3];
  Ball e2 = z[0] * z[1] + z[0] * z[2] + z[0] * z[3] + z[1] * z[2] + z[1] * z[3] + z[2] * z[3];
  Ball e3 = z[0] * z[1] * z[2] + z[0] * z[1] * z[3] + z[0] * z[2] * z[3] + z[1] * z[2] * z[3];
  FamilyCoeffs out;
  out.n = n;
  mpz_class s1, s2, s3;
  certified_integer_check(e1, s1);
  certified_integer_check(e2, s2);
  certified_integer_check(e3, s3);
  out.a = -s1;
  out.b = s2;
  out.c = -s3;
  return out;
}

mpz_class printed_b3(const Params& p) {
  validate(p);
  return 512 * zpow(p.D, 12) + 1768 * zpow(p.D, 8) * p.c + 264 * zpow(p.D, 4) + 2 * p.c;
}

mpz_class corrected_b3(const Params& p) {
  validate(p);
  return 512 * zpow(p.D, 12) + 768 * zpow(p.D, 8) * p.c + 264 * zpow(p.D, 4) + 2 * p.c;
}

BinaryForm family_form(const Params& p, long n) {
  if (n == -1) fail(ErrorCode::DegenerateIndex, "F_{-1} = (X - Y)^4 is excluded from the family");
  FamilyCoeffs k = coeffs_by_recurrence(p, n + 1);
  return BinaryForm{{1, k.a, k.b, k.c, 1}};
}

FamilySolveResult solve_family(const Params& p, const mpz_class& m, const SearchCaps& caps,
                               const LinFormBoundProvider* provider) {
  validate(p);
  if (caps.xy < 0 || caps.A < 0) fail(ErrorCode::InvalidInput, "caps must be nonnegative");
  FamilySolveResult res;
  if (provider && m >= 2) {
    UnitBasis B = unit_basis(p);
    res.report = compose_bounds(B, AlgElement::generator(B.field), m, provider, B.bits());
  }
  if (m < 0) return res;

  std::vector<long> ns;
  for (long n = -caps.A; n <= caps.A; ++n)
    if (n != -1) ns.push_back(n);
  if (caps.A >= 1) res.skipped.push_back(ExponentVector{0, {-1}});

  std::vector<std::vector<SolutionTriple>> slices(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ns.size(); i = next++) {
      const long n = ns[i];
      const BinaryForm F = family_form(p, n);
      mpz_class ymax = caps.xy, xmax = caps.xy;
      try {
        const FixedFormBox box = lemma3_bounds(F, m);
        ymax = std::min(ymax, mpz_class(box.y_bound.floor_to_integer()));
        xmax = std::min(xmax, mpz_class(box.x_bound.floor_to_integer()));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RealRootPresent) throw;
      }
      for (mpz_class y = -ymax; y <= ymax; ++y) {
        if (y == 0) continue;
        for (mpz_class x = -xmax; x <= xmax; ++x) {
          if (x == 0) continue;
          mpz_class v = evaluate(F, x, y);
          if (abs(v) <= m) slices[i].push_back({x, y, ExponentVector{0, {n}}, v});
        }
      }
    }
  };
  const std::size_t nthreads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::future<void>> pool;
  for (std::size_t t = 0; t < std::min(nthreads, ns.size()); ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  for (auto& s : slices) res.solutions.insert(res.solutions.end(), s.begin(), s.end());
  sort_canonical(res.solutions);

  if (res.report) {
    const bool xy_ok = log(Real(std::max(caps.xy, 1L), 128), MPFR_RNDD) >= res.report->box.log_xy_bound;
    const bool a_ok = Real(caps.A, 128) >= res.report->box.A_bound;
    if (xy_ok && a_ok) res.completeness = Completeness::Certified;
  }
  return res;
}

}  // namespace thue::stender
