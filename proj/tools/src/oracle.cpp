#include <numeric>

#include "thue/embeddings.hpp"
#include "thue/error.hpp"
#include "thue_cli/cli.hpp"

namespace thue::cli {

namespace {

mpz_class lcm_of_denominators(const AlgElement& a) {
  mpz_class l = 1;
  for (const auto& q : a.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

// a_0^(d-1) alpha^k is integral for k < d, so N alpha is integral for this N.
// Units and roots of unity are integral already.
mpz_class integral_scale(const AlgElement& alpha) {
  const FieldPtr& K = alpha.field();
  mpz_class lead_pow;
  mpz_pow_ui(lead_pow.get_mpz_t(), K->leading().get_mpz_t(), static_cast<unsigned long>(K->degree() - 1));
  return lcm_of_denominators(alpha) * lead_pow;
}

mpz_class certified_round(const Ball& v) {
  const mpz_class z = v.mid.re.round_to_integer();
  const Ball diff = v - Ball::exact(z, v.precision());
  if (!(diff.abs_upper() < Real(0.5, Ball::kRadiusBits)))
    fail(ErrorCode::PrecisionExhausted, "oracle coefficient not certified to an integer");
  return z;
}

// Integer form proportional to prod_i (X - z_i Y), where the N z_i are the
// conjugates of an algebraic integer; nullopt if two conjugates coincide.
std::optional<BinaryForm> form_from_conjugates(const std::vector<Ball>& z, const mpz_class& N, Bits bits) {
  const std::size_t d = z.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Ball diff = z[i] - z[j];
      if (!diff.contains_zero()) continue;
      if (diff.abs_upper() < Real::pow2(-static_cast<long>(bits) / 2, Ball::kRadiusBits)) return std::nullopt;
      fail(ErrorCode::PrecisionExhausted, "oracle cannot separate two conjugates");
    }
  // q(Y) = prod (Y - N z_i), leading coefficient first.
  const Ball Nb = Ball::exact(N, bits);
  std::vector<Ball> q{Ball::exact(mpz_class(1), bits)};
  for (const Ball& zi : z) {
    const Ball root = Nb * zi;
    std::vector<Ball> next(q.size() + 1, Ball::exact(mpz_class(0), bits));
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k] = next[k] + q[k];
      next[k + 1] = next[k + 1] - q[k] * root;
    }
    q = std::move(next);
  }
  // q(N X) = N^d prod (X - z_i): coefficient k picks up N^(d-k).
  BinaryForm F;
  mpz_class content = 0;
  for (std::size_t k = 0; k <= d; ++k) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), N.get_mpz_t(), static_cast<unsigned long>(d - k));
    F.coeffs.push_back(certified_round(q[k]) * scale);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), F.coeffs.back().get_mpz_t());
  }
  for (auto& c : F.coeffs) c /= content;
  if (F.coeffs.front() < 0)
    for (auto& c : F.coeffs) c = -c;
  return F;
}

}  // namespace

io::FieldInput stender_field_input(const stender::Params& p) {
  io::FieldInput input;
  input.field = stender::base_polynomial(p);
  input.alpha = AlgElement::generator(input.field);
  input.fundamental_units = {AlgElement::generator(input.field)};
  return input;
}

std::vector<SolutionTriple> oracle_search(const io::FieldInput& input, const mpz_class& m, const SearchCaps& caps,
                                          Bits bits, std::vector<ExponentVector>* skipped) {
  if (caps.xy < 0 || caps.A < 0) fail(ErrorCode::InvalidInput, "caps must be nonnegative");
  const AlgElement alpha = input.alpha_or_generator();
  const EmbeddingSet E = compute_embeddings(input.field, bits);
  const std::vector<Ball> sa = embed(alpha, E);
  std::vector<std::vector<Ball>> su;
  for (const auto& u : input.fundamental_units) su.push_back(embed(u, E));
  const AlgElement zeta = input.torsion_generator ? *input.torsion_generator : AlgElement::rational(input.field, -1);
  const std::vector<Ball> sz = embed(zeta, E);
  const int w = input.torsion_generator ? input.torsion_order : 2;
  const mpz_class N = integral_scale(alpha);
  const std::size_t r = su.size();
  const std::size_t d = sa.size();

  std::vector<SolutionTriple> out;
  std::vector<long> e(r, -caps.A);
  for (bool more = true; more;) {
    for (int t = 0; t < (caps.all_torsion ? w : 1); ++t) {
      std::vector<Ball> z(d, Ball(bits));
      for (std::size_t j = 0; j < d; ++j) {
        z[j] = sa[j] * pow(sz[j], t);
        for (std::size_t i = 0; i < r; ++i) z[j] = z[j] * pow(su[i][j], e[i]);
      }
      const ExponentVector ev{t, e};
      const std::optional<BinaryForm> F = form_from_conjugates(z, N, bits);
      if (!F) {
        if (skipped) skipped->push_back(ev);
        continue;
      }
      for (mpz_class x = -caps.xy; x <= caps.xy; ++x)
        for (mpz_class y = -caps.xy; y <= caps.xy; ++y) {
          if (x == 0 || y == 0) continue;
          const mpz_class v = evaluate(*F, x, y);
          if (abs(v) <= m) out.push_back({x, y, ev, v});
        }
    }
    // odometer over [-A, A]^r, last coordinate fastest
    more = false;
    for (std::size_t i = r; i-- > 0;) {
      if (e[i] < caps.A) {
        ++e[i];
        more = true;
        break;
      }
      e[i] = -caps.A;
    }
  }
  std::sort(out.begin(), out.end(), [](const SolutionTriple& a, const SolutionTriple& b) {
    if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return out;
}

}  // namespace thue::cli
