#include "thue/solve.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "thue/elimination.hpp"
#include "thue/error.hpp"

namespace thue {

namespace {

struct SliceResult {
  std::vector<SolutionTriple> solutions;
  bool degenerate = false;
};

mpz_class cap_of(long cap, const std::optional<FixedFormBox>& box, bool use_x) {
  mpz_class c = cap;
  if (box) {
    mpz_class b = (use_x ? box->x_bound : box->y_bound).floor_to_integer();
    if (b < c) c = b;
  }
  return c;
}

// Pairs (x, y) with 0 < |x| <= |y| (strict when `strict`) and |F(x,y)| <= m.
template <typename Emit>
void enumerate_lower_triangle(const BinaryForm& F, const mpz_class& m, const mpz_class& ymax, const mpz_class& xmax,
                              bool strict, Emit&& emit) {
  for (mpz_class ay = 1; ay <= ymax; ++ay)
    for (int sy : {-1, 1}) {
      const mpz_class y = sy * ay;
      mpz_class lim = strict ? mpz_class(ay - 1) : ay;
      if (lim > xmax) lim = xmax;
      for (mpz_class ax = 1; ax <= lim; ++ax)
        for (int sx : {-1, 1}) {
          const mpz_class x = sx * ax;
          mpz_class v = evaluate(F, x, y);
          if (abs(v) <= m) emit(x, y, v);
        }
    }
}

SliceResult solve_slice(const UnitBasis& B, const AlgElement& alpha, const ExponentVector& e, const mpz_class& m,
                        long cap_xy) {
  SliceResult out;
  BinaryForm F;
  try {
    F = twist(alpha, e, B);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::DegenerateTwist) throw;
    out.degenerate = true;
    return out;
  }
  const ReciprocalForm G = reciprocal_form(F);

  std::optional<FixedFormBox> boxF, boxG;
  if (B.embeddings.signature.r1 == 0) {
    boxF = lemma3_bounds(F, m, B.bits());
    boxG = lemma3_bounds(G.form, m, B.bits());
  }
  // |x| <= |y| on F itself.
  enumerate_lower_triangle(F, m, cap_of(cap_xy, boxF, false), cap_of(cap_xy, boxF, true), false,
                           [&](const mpz_class& x, const mpz_class& y, const mpz_class& v) {
                             out.solutions.push_back({x, y, e, v});
                           });
  // |x| > |y| through G(y, x) = sign F(x, y): G's second argument is x.
  enumerate_lower_triangle(G.form, m, cap_of(cap_xy, boxG, false), cap_of(cap_xy, boxG, true), true,
                           [&](const mpz_class& u, const mpz_class& v, const mpz_class& val) {
                             out.solutions.push_back({v, u, e, G.sign * val});
                           });
  return out;
}

}  // namespace

bool canonical_less(const SolutionTriple& a, const SolutionTriple& b) {
  if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

void sort_canonical(std::vector<SolutionTriple>& v) { std::sort(v.begin(), v.end(), canonical_less); }

std::string to_string(Completeness c) { return c == Completeness::Certified ? "certified" : "capped"; }

std::vector<ExponentVector> exponent_box(const UnitBasis& B, const SearchCaps& caps) {
  if (caps.A < 0) fail(ErrorCode::InvalidInput, "exponent cap must be nonnegative");
  const int r = B.rank();
  std::vector<ExponentVector> out;
  const int tmax = caps.all_torsion ? B.torsion_order : 1;
  std::vector<long> cur(static_cast<std::size_t>(r), -caps.A);
  for (;;) {
    for (int t = 0; t < tmax; ++t) out.push_back({t, cur});
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == caps.A) {
      cur[static_cast<std::size_t>(i)] = -caps.A;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

FamilySolveResult solve_family_general(const UnitBasis& B, const AlgElement& alpha, const mpz_class& m,
                                       const SearchCaps& caps, const LinFormBoundProvider* provider) {
  if (caps.xy < 0) fail(ErrorCode::InvalidInput, "xy cap must be nonnegative");
  if (!is_almost_totally_imaginary(B.embeddings))
    fail(ErrorCode::NotAlmostTotallyImaginary, "the field has more than one real embedding");
  FamilySolveResult res;
  if (m >= 2) res.report = compose_bounds(B, alpha, m, provider, B.bits());

  std::vector<ExponentVector> exps = exponent_box(B, caps);
  if (res.report) {
    // Exponents beyond the certified A bound cannot carry solutions.
    const mpz_class amax = res.report->box.A_bound.floor_to_integer();
    std::erase_if(exps, [&](const ExponentVector& e) { return mpz_class(e.C()) > amax && e.C() > 1; });
  }
  if (m < 0) return res;

  // Workers pull exponent slices from a shared counter; each slice owns its result.
  std::vector<SliceResult> slices(exps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < exps.size(); i = next++) slices[i] = solve_slice(B, alpha, exps[i], m, caps.xy);
  };
  const std::size_t nthreads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::future<void>> pool;
  for (std::size_t t = 0; t < std::min(nthreads, exps.size()); ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (slices[i].degenerate) res.skipped.push_back(exps[i]);
    res.solutions.insert(res.solutions.end(), slices[i].solutions.begin(), slices[i].solutions.end());
  }
  sort_canonical(res.solutions);

  if (res.report) {
    const Real logcap = log(Real(std::max(caps.xy, 1L), 128), MPFR_RNDD);
    const bool xy_ok = logcap >= res.report->box.log_xy_bound;
    const bool a_ok = Real(caps.A, 128) >= res.report->box.A_bound;
    if (xy_ok && a_ok && caps.all_torsion) res.completeness = Completeness::Certified;
  }
  return res;
}

}  // namespace thue
