// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every expected value comes from an oracle in oracles.hpp or from an
// independent embedding computation, never from the routine under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "thue/bounds.hpp"
#include "thue/elimination.hpp"
#include "thue/embeddings.hpp"
#include "thue/error.hpp"
#include "thue/forms.hpp"
#include "thue/heights.hpp"
#include "thue/provider.hpp"
#include "thue/solve.hpp"
#include "thue/stender.hpp"
#include "thue/units.hpp"
#include "thue_cli/cli.hpp"

using namespace thue;
using stender::Params;

namespace {

const std::vector<Params> kParams{{2, 1}, {2, -1}, {3, 1}, {3, -1}};

// Collects the first few failure messages of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

std::string show(const Params& p) { return "D=" + std::to_string(p.D) + ",c=" + std::to_string(p.c); }

mpz_class minus_c_pow(const Params& p, long n) { return (p.c == 1 && n % 2 != 0) ? -1 : 1; }

UnitBasis cyclotomic7() {
  const FieldPtr K = NumberField::make({1, 1, 1, 1, 1, 1, 1});
  return make_unit_basis(K, {AlgElement(K, {1, 1, 0, 0, 0, 0}), AlgElement(K, {1, 1, 1, 0, 0, 0})},
                         AlgElement(K, {0, -1, 0, 0, 0, 0}), 14);
}

// Conjugates of eps^(n+1) in the field generated by eps.
std::vector<Ball> twist_conjugates(const Params& p, long n, Bits bits) {
  const EmbeddingSet E = compute_embeddings(stender::base_polynomial(p), bits);
  std::vector<Ball> out;
  for (const Ball& z : E.values) out.push_back(pow(z, n + 1));
  return out;
}

std::vector<Ball> beta_of(const std::vector<Ball>& theta, const mpz_class& x, const mpz_class& y, Bits bits) {
  std::vector<Ball> out;
  for (const Ball& t : theta) out.push_back(Ball::exact(x, bits) - t * Ball::exact(y, bits));
  return out;
}

// (n, x, y) triples of the exact double loop over F_n = prod (X - eps_i^(n+1) Y).
std::vector<std::tuple<long, long, long>> double_loop(const Params& p, long m, long xy, long nmax) {
  std::vector<std::tuple<long, long, long>> out;
  const auto f = stender::base_coefficients(p);
  for (long n = -nmax; n <= nmax; ++n) {
    if (n == -1) continue;
    const auto q = oracle::quartic_of_powers(f, n + 1);
    for (const auto& pr : oracle::brute_force({1, q.a, q.b, q.c, 1}, m, xy)) out.emplace_back(n, pr.x, pr.y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<long, long, long>> triples(const std::vector<SolutionTriple>& v) {
  std::vector<std::tuple<long, long, long>> out;
  for (const auto& s : v) out.emplace_back(s.epsilon.exponents[0], s.x.get_si(), s.y.get_si());
  std::sort(out.begin(), out.end());
  return out;
}

HeightValue height_adaptive(const AlgElement& a) {
  for (Bits bits = 128;; bits *= 2) {
    try {
      return abs_log_height(a, bits);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || bits >= 16384) throw;
    }
  }
}

// 1. Recurrences against certified elementary symmetric functions.
void recurrence_fidelity(Check& ck) {
  for (const Params& p : kParams)
    for (long n = -15; n <= 15; ++n)
      ck.expect(stender::coeffs_by_recurrence(p, n) == stender::coeffs_direct(p, n, 256),
                show(p) + " n=" + std::to_string(n));
}

// 2. Symmetries, palindromy, and the printed b_3 decided by exact power sums.
void symmetry_suite(Check& ck) {
  for (const Params& p : kParams) {
    for (long n = -15; n <= 15; ++n) {
      const auto k = stender::coeffs_by_recurrence(p, n);
      ck.expect(k.c == minus_c_pow(p, n) * k.a, show(p) + " c_n, n=" + std::to_string(n));
      ck.expect(stender::coeffs_by_recurrence(p, -n).b == k.b, show(p) + " b_-n, n=" + std::to_string(n));
    }
    const auto f = stender::base_coefficients(p);
    for (long k = 0; k <= 4; ++k)
      ck.expect(f[static_cast<std::size_t>(4 - k)] == minus_c_pow(p, k) * f[static_cast<std::size_t>(k)],
                show(p) + " palindromic k=" + std::to_string(k));
    const mpz_class truth = oracle::quartic_of_powers(f, 3).b;
    const mpz_class printed = stender::printed_b3(p);
    ck.expect(stender::coeffs_by_recurrence(p, 3).b == truth, show(p) + " b_3 recurrence");
    std::cout << "  b_3 " << show(p) << ": printed " << printed.get_str() << ", power-sum oracle " << truth.get_str()
              << ", corrected " << stender::corrected_b3(p).get_str() << " -> printed "
              << (printed == truth ? "confirmed" : "refuted") << "\n";
  }
}

// 3. eps is a root of f and a unit of norm 1 in Q(theta).
void unit_verification(Check& ck) {
  for (const Params& p : kParams) {
    const AlgElement eps = stender::unit_epsilon(p);
    AlgElement acc = AlgElement::zero(eps.field());
    for (const auto& c : stender::base_coefficients(p)) acc = acc * eps + AlgElement::rational(eps.field(), c);
    ck.expect(acc.is_zero(), show(p) + " f(eps) != 0");
    ck.expect(norm(eps) == 1, show(p) + " norm(eps) != 1");
  }
}

// 4. Closed-form family equals the general twist of eps.
void twist_consistency(Check& ck) {
  const Params p{2, 1};
  const AlgElement eps = stender::unit_epsilon(p);
  const UnitBasis B = make_unit_basis(eps.field(), {eps}, AlgElement::rational(eps.field(), -1), 2);
  for (long n = -5; n <= 5; ++n) {
    if (n == -1) {
      bool both = true;
      try {
        stender::family_form(p, n);
        both = false;
      } catch (const Error&) {
      }
      try {
        twist(eps, {0, {n}}, B);
        both = false;
      } catch (const Error&) {
      }
      ck.expect(both, "n=-1 should be degenerate on both sides");
      continue;
    }
    ck.expect(stender::family_form(p, n) == twist(eps, {0, {n}}, B), "n=" + std::to_string(n));
  }
}

// 5. Fixed-form solver against brute force, m <= 100.
void fixed_form_completeness(Check& ck) {
  const std::vector<BinaryForm> forms{BinaryForm{{1, 0, 0, 0, 1}}, BinaryForm{{1, 0, 2, 0, 2}},
                                      BinaryForm{stender::base_coefficients({2, 1})}};
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (long m = 0; m <= 100; ++m) {
      const FixedFormBox box = lemma3_bounds(forms[i], m);
      const long brute = static_cast<long>(std::ceil(2 * box.y_bound.to_double(MPFR_RNDU))) + 2;
      const auto want = oracle::brute_force(forms[i].coeffs, m, brute);
      std::vector<oracle::Pair> got;
      for (const auto& [x, y] : solve_fixed_totally_imaginary(forms[i], m)) {
        got.push_back({x.get_si(), y.get_si()});
        ck.expect(Real(mpz_class(abs(x)), 64) <= box.x_bound && Real(mpz_class(abs(y)), 64) <= box.y_bound,
                  "outside certified box");
      }
      ck.expect(got == want, "form " + std::to_string(i) + " m=" + std::to_string(m));
    }
}

// 6. Family solvers against the double loop and the CLI oracle.
std::vector<SolutionTriple> g_m200;
void family_oracle(Check& ck) {
  const Params p{2, 1};
  const SearchCaps caps{50, 6, false};
  MatveevTypeProvider provider;
  const io::FieldInput input = cli::stender_field_input(p);
  const UnitBasis B = io::unit_basis_of(input, 128);
  for (long m : {5L, 10L, 50L, 200L}) {
    const auto fam = stender::solve_family(p, m, caps, &provider);
    const auto gen = solve_family_general(B, input.alpha_or_generator(), m, caps, &provider);
    const auto orc = cli::oracle_search(input, m, caps, 256);
    const auto loop = double_loop(p, m, caps.xy, caps.A);
    ck.expect(triples(fam.solutions) == loop, "stender solver vs double loop, m=" + std::to_string(m));
    ck.expect(gen.solutions == orc, "general solver vs oracle, m=" + std::to_string(m));
    ck.expect(triples(orc) == loop, "oracle vs double loop, m=" + std::to_string(m));
    if (m == 200) {
      g_m200 = fam.solutions;
      std::cout << "  m=200: " << fam.solutions.size() << " solutions\n";
    }
  }
}

// 7. a_0 prod sigma_j(beta) equals F_n(x, y).
void norm_form_identity(Check& ck) {
  const Params p{2, 1};
  const Bits bits = 256;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> v(-10000, 10000), nn(-6, 6);
  for (int i = 0; i < 100;) {
    const long n = nn(rng);
    if (n == -1) continue;
    const mpz_class x = v(rng), y = v(rng);
    const BinaryForm F = stender::family_form(p, n);
    const auto beta = beta_of(twist_conjugates(p, n, bits), x, y, bits);
    Ball prod = Ball::exact(F.coeffs.front(), bits);
    for (const Ball& b : beta) prod = prod * b;
    const mpz_class exact = evaluate(F, x, y);
    const Real tol = Real::pow2(-64, 64) * max(Real(1L, 64), abs(Real(exact, 128)));
    ck.expect((prod - Ball::exact(exact, bits)).abs_upper() < tol, "n=" + std::to_string(n));
    ++i;
  }
}

// 8. Siegel identity on solutions; a shifted beta must violate it.
void siegel_residuals(Check& ck) {
  const Params p{2, 1};
  ck.expect(!g_m200.empty(), "no solutions to test");
  const Real small = Real::pow2(-64, 64), large = Real::pow2(-8, 64);
  for (const auto& s : g_m200) {
    const auto theta = twist_conjugates(p, s.epsilon.exponents[0], 256);
    const auto beta = beta_of(theta, s.x, s.y, 256);
    const auto shifted = beta_of(theta, s.x + 1, s.y, 256);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          if (i == j || j == k || i == k) continue;
          const std::array<Ball, 3> v{theta[i], theta[j], theta[k]};
          ck.expect(siegel_residual({beta[i], beta[j], beta[k]}, v) < small, "residual on a solution");
          ck.expect(siegel_residual({beta[i], beta[j], shifted[k]}, v) > large, "negative control");
        }
  }
}

// 9. Two-sided embedding bounds for units of exponent size C <= 20.
void embedding_bounds(Check& ck) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> ex(-20, 20);
  const Bits bits = 512;
  int done = 0;
  for (const UnitBasis& B : {stender::unit_basis({2, 1}), cyclotomic7()}) {
    const Real c1 = house_bound_constant(B), k4 = embedding_lemma_constant(B);
    const EmbeddingSet E = compute_embeddings(B.field, bits);
    std::vector<std::vector<Ball>> su;
    for (const auto& u : B.fundamental_units) su.push_back(embed(u, E));
    for (int t = 0; t < 25; ++t) {
      std::vector<long> c;
      for (int i = 0; i < B.rank(); ++i) c.push_back(ex(rng));
      const long C = ExponentVector{0, c}.C();
      if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) c[0] = 1;
      const Real up = c1 * Real(C, 64), kc = k4 * Real(C, 64);
      Real mx = Real::infinity(64), mn = Real::infinity(64);
      mx = -mx;
      for (std::size_t j = 0; j < E.values.size(); ++j) {
        Ball z = Ball::exact(mpz_class(1), bits);
        for (std::size_t i = 0; i < c.size(); ++i) z = z * pow(su[i][j], c[i]);
        const Real lo = log(z.abs_lower(), MPFR_RNDD), hi = log(z.abs_upper(), MPFR_RNDU);
        ck.expect(hi <= up && lo >= -up, "|phi(gamma)| outside e^(+-c1 C)");
        mx = max(mx, hi);
        mn = min(mn, lo);
      }
      // kappa4 is a lower bound: refuted only if even the upper enclosure of
      // max log|phi| falls short (and symmetrically for the minimum).
      ck.expect(mx >= kc && mn <= -kc, "kappa4 C bound refuted");
      ++done;
    }
  }
  ck.expect(done == 50, "expected 50 samples");
}

// 10. Unit reduction meets m^c2bis and is idempotent.
void reduction(Check& ck) {
  const UnitBasis B = stender::unit_basis({2, 1});
  const mpz_class m = 1000;
  const EmbeddingSet E = compute_embeddings(B.field, 256);
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> coef(-3, 3), ex(-4, 4);
  for (int done = 0; done < 20;) {
    std::vector<mpq_class> c;
    for (int i = 0; i < B.degree(); ++i) c.emplace_back(coef(rng));
    const AlgElement gamma = AlgElement(B.field, c) * unit_from_exponents(B, {0, {ex(rng)}});
    if (gamma.is_zero() || abs(norm(gamma)) > m) continue;
    const Reduction R = reduce_by_units(gamma, B, m);
    const Real bound = exp(R.c2bis * log(Real(m, 128), MPFR_RNDU), MPFR_RNDU);
    ck.expect(R.rho * R.eta == gamma, "rho eta != gamma");
    ck.expect(house(R.rho, E) <= bound, "house above m^c2bis");
    const Reduction again = reduce_by_units(R.rho, B, m);
    ck.expect(std::all_of(again.exponents.exponents.begin(), again.exponents.exponents.end(),
                          [](long v) { return v == 0; }),
              "re-reduction moved");
    ++done;
  }
}

// 11. Bound pipeline sanity and containment of oracle solutions.
void bound_report(Check& ck) {
  const Params p{2, 1};
  const UnitBasis B = stender::unit_basis(p);
  const AlgElement alpha = AlgElement::generator(B.field);
  MatveevTypeProvider provider;
  Real prev_log(0L, 64), prev_A(0L, 64);
  for (long m : {2L, 10L, 100L}) {
    const BoundReport a = compose_bounds(B, alpha, m, &provider);
    const BoundReport b = compose_bounds(B, alpha, m, &provider);
    ck.expect(a.to_json().dump() == b.to_json().dump(), "report not byte-identical, m=" + std::to_string(m));
    for (const auto& c : a.constants) ck.expect(c.value.is_finite() && c.value.sign() > 0, c.name + " not positive");
    ck.expect(a.box.log_xy_bound >= prev_log && a.box.A_bound >= prev_A, "box not monotone at m=" + std::to_string(m));
    prev_log = a.box.log_xy_bound;
    prev_A = a.box.A_bound;
    const auto sols = cli::oracle_search(cli::stender_field_input(p), m, {50, 6, false}, 256);
    for (const auto& s : sols) {
      const Real lx = log(Real(mpz_class(std::max(abs(s.x), abs(s.y))), 128), MPFR_RNDU);
      ck.expect(lx <= a.box.log_xy_bound, "solution outside log box");
      ck.expect(Real(std::labs(s.epsilon.exponents[0]), 64) <= a.box.A_bound, "exponent outside box");
    }
    if (m == 100) std::cout << "  m=100 box: log max|x|,|y| <= " << a.box.log_xy_bound.to_string(6) << "\n";
  }
}

// 12. h(g^-1) = h(g) and h(g^n) = |n| h(g) for units.
void height_identities(Check& ck) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> ex(-2, 2), nn(-10, 10);
  const UnitBasis S = stender::unit_basis({2, 1}), Z = cyclotomic7();
  const double tol = std::ldexp(1.0, -20);
  for (int done = 0; done < 20;) {
    const UnitBasis& B = done % 2 ? Z : S;
    std::vector<long> c;
    for (int i = 0; i < B.rank(); ++i) c.push_back(ex(rng));
    const long n = nn(rng);
    if (n == 0 || std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) continue;
    const AlgElement g = unit_from_exponents(B, {0, c});
    const double h = height_adaptive(g).value.to_double();
    ck.expect(std::fabs(height_adaptive(inverse(g)).value.to_double() - h) < tol, "h(g^-1) != h(g)");
    ck.expect(std::fabs(height_adaptive(pow(g, n)).value.to_double() - static_cast<double>(std::labs(n)) * h) < tol,
              "h(g^n) != |n| h(g), n=" + std::to_string(n));
    ++done;
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no runtime requirement
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Stender recurrence fidelity", 5, recurrence_fidelity},
      {2, "printed-symmetry suite and b_3", 0, symmetry_suite},
      {3, "unit verification", 1, unit_verification},
      {4, "twist consistency", 0, twist_consistency},
      {5, "fixed-form completeness", 10, fixed_form_completeness},
      {6, "family-solver oracle equivalence", 60, family_oracle},
      {7, "norm-form identity", 0, norm_form_identity},
      {8, "Siegel residual", 0, siegel_residuals},
      {9, "embedding-lemma constants", 0, embedding_bounds},
      {10, "unit reduction", 0, reduction},
      {11, "bound report sanity", 0, bound_report},
      {12, "height identities", 0, height_identities},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) ck.failures.push_back("runtime limit exceeded");
    std::ostringstream line;
    line << (ck.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << ck.count
         << " checks, " << std::fixed;
    line.precision(2);
    line << secs << " s";
    if (c.limit_s > 0) line << " / limit " << c.limit_s << " s";
    line << ")";
    std::cout << line.str() << "\n";
    for (const auto& f : ck.failures) std::cout << "  " << f << "\n";
    if (!ck.ok()) ++failed;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 12" : std::string("all 12 criteria passed")) << "\n";
  return failed ? 1 : 0;
}
