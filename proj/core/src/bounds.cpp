#include "thue/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "thue/error.hpp"
#include "thue/heights.hpp"

namespace thue {

namespace {

// Records constants in dependency order. Values computed with round-to-nearest
// are widened by a relative 2^-64 in the safe direction when recorded.
class ConstantBook {
 public:
  ConstantBook(Bits bits, std::vector<NamedConstant>& inputs, std::vector<NamedConstant>& constants)
      : bits_(bits), inputs_(inputs), constants_(constants) {}

  Real input(const std::string& name, const Real& v, const std::string& tag) {
    Real u = widen(v, false);
    if (!u.is_finite() || u.sign() < 0) fail(ErrorCode::InvalidInput, "quantity " + name + " is not a finite nonnegative number");
    inputs_.push_back({name, u, false, tag, {}});
    values_.emplace(name, u);
    return u;
  }

  Real upper(const std::string& name, const Real& v, const std::string& tag, std::vector<std::string> deps) {
    return record(name, widen(v, false), false, tag, std::move(deps));
  }

  Real lower(const std::string& name, const Real& v, const std::string& tag, std::vector<std::string> deps) {
    return record(name, widen(v, true), true, tag, std::move(deps));
  }

  const Real& operator[](const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) fail(ErrorCode::InvalidInput, "unknown constant " + name);
    return it->second;
  }

 private:
  Real widen(const Real& v, bool down) const {
    Real w = with_precision(v, bits_, down ? MPFR_RNDD : MPFR_RNDU);
    Real f = down ? sub(Real(1L, bits_), Real::pow2(-64, bits_), MPFR_RNDD)
                  : add(Real(1L, bits_), Real::pow2(-64, bits_), MPFR_RNDU);
    if (w.sign() < 0) f = down ? add(Real(1L, bits_), Real::pow2(-64, bits_), MPFR_RNDU)
                               : sub(Real(1L, bits_), Real::pow2(-64, bits_), MPFR_RNDD);
    return mul(w, f, down ? MPFR_RNDD : MPFR_RNDU);
  }

  Real record(const std::string& name, const Real& v, bool lower, const std::string& tag,
              std::vector<std::string> deps) {
    for (const auto& d : deps)
      if (!values_.count(d)) fail(ErrorCode::InvalidInput, "constant " + name + " depends on unknown " + d);
    if (values_.count(name)) fail(ErrorCode::InvalidInput, "constant " + name + " recorded twice");
    if (!v.is_finite() || !(v.sign() > 0))
      fail(ErrorCode::InvalidInput, "constant " + name + " is not positive and finite");
    constants_.push_back({name, v, lower, tag, std::move(deps)});
    values_.emplace(name, v);
    return v;
  }

  Bits bits_;
  std::vector<NamedConstant>& inputs_;
  std::vector<NamedConstant>& constants_;
  std::map<std::string, Real> values_;
};

Real rmax(std::initializer_list<Real> xs) {
  Real m = *xs.begin();
  for (const auto& x : xs) m = max(m, x);
  return m;
}

Real real_of(long v, Bits bits) { return Real(v, bits); }

// Everything that depends on the twisting element; names get `prefix`.
void alpha_chain(ConstantBook& book, const std::string& p, const UnitBasis& B, const AlgElement& alpha, Bits bits) {
  const int d = B.degree();
  const int r = B.rank();
  const long D2 = static_cast<long>(d) * (d - 1);
  const Real one(1L, bits), two(2L, bits), dd = real_of(d, bits), d2 = real_of(D2, bits);
  const Real log2 = log(two), log4 = log(Real(4L, bits)), log6 = log(Real(6L, bits));
  auto n = [&](const std::string& s) { return p + s; };

  const Real h_alpha = book.input(n("h_alpha"), abs_log_height(alpha, bits).value, "height of the twisting element");
  const Real lh_alpha = book.input(n("log_house_alpha"), log_plus_upper(house(alpha, B.embeddings)),
                                   "log+ house of the twisting element");
  const Real lh_alpha_inv = book.input(n("log_house_alpha_inv"), log_plus_upper(house(inverse(alpha), B.embeddings)),
                                       "log+ house of its inverse");
  const ZPoly mp = minpoly_integer(alpha);
  const Real a0 = book.input(n("a0"), Real(mp.leading(), bits), "leading coefficient of the minimal polynomial");

  const Real& c1 = book["c1"];
  const Real& k4 = book["kappa4"];
  const Real& sum_h = book["sum_h_eps"];
  const Real& max_h = book["max_h_eps"];
  const Real& c_round = book["c_round"];

  const Real c3 = book.upper(n("c3"), max(one, h_alpha + sum_h), "height of alpha eps grows at most linearly in A",
                             {n("h_alpha"), "sum_h_eps"});
  const Real A0 = max(one, two * lh_alpha_inv / k4);
  const Real c4 = book.lower(n("c4"), min(k4 / (two * dd), one / A0), "height of alpha eps grows at least linearly in A",
                             {"kappa4", n("log_house_alpha_inv")});
  (void)c4;
  const Real c7 = book.upper(n("c7"), one / dd + (c_round + log(a0)) / log2, "height of rho per log m",
                             {"c_round", n("a0")});
  const Real c8 = book.upper(n("c8"), rmax({one, c7, sum_h}), "B~ against B + log m", {n("c7"), "sum_h_eps"});
  book.upper(n("c9"), dd * max(one, c7) / k4, "B against B~ + log m", {n("c7"), "kappa4"});

  const Real kmin = book.lower(n("kappa_min"), k4 / two, "exponential gap, lower rate", {"kappa4"});
  const Real kmaj = book.upper(n("kappa_maj"), c1 + max(lh_alpha, lh_alpha_inv) + dd * c7, "exponential gap, upper rate",
                               {"c1", n("log_house_alpha"), n("log_house_alpha_inv"), n("c7")});
  const Real klarge = book.upper(
      n("kappa_large"), rmax({two * dd * c7 / k4, one, two * lh_alpha_inv / (k4 * log2), two / kmin, two / log2}),
      "threshold beyond which A and B count as large", {n("c7"), "kappa4", n("log_house_alpha_inv"), n("kappa_min")});

  // Small A: unit equation with sigma_b, tau_b and a third embedding.
  const Real kA4 = book.upper(n("kappaA4"), c1 + two * d2 * c3 + log2 + lh_alpha + d2 * log2,
                              "difference quotient of conjugates of alpha eps", {"c1", n("c3"), n("log_house_alpha")});
  const Real kA3 = book.upper(n("kappaA3"), rmax({one, two * max_h, two * c7 + Real(4L, bits) * c3 * klarge + two}),
                              "heights in the small-A linear form", {"max_h_eps", n("c7"), n("c3"), n("kappa_large")});
  const Real kA2 = book.upper(n("kappaA2"), book["kappa_fll1_D3"] * pow(kA3, real_of(r, bits)),
                              "linear form lower bound, small A", {"kappa_fll1_D3", n("kappaA3")});
  const Real uA = implicit_bound(two * kmin, kA2 * kA3, two, kA4 * klarge, bits);
  const Real kAB4 = book.upper(n("kappa_AB4"), max(uA, one) * (one + one / log2), "B / log m when A is small",
                               {n("kappa_min"), n("kappaA2"), n("kappaA3"), n("kappaA4"), n("kappa_large")});
  const Real br_a = book.upper(n("branch_small_A"), max(klarge, kAB4), "max{A,B} / log m when A is small",
                               {n("kappa_large"), n("kappa_AB4")});

  // Small B: same shape with sigma_a, tau_a.
  const Real kB4 = book.upper(n("kappaB4"),
                              (log2 + d2 * log2) / log2 + c1 * klarge + dd * c7 + two * d2 * c8 * (klarge + one),
                              "difference quotient of conjugates of beta", {"c1", n("kappa_large"), n("c7"), n("c8")});
  const Real kB3 = book.upper(n("kappaB3"), rmax({one, two * max_h, two * h_alpha + Real(4L, bits) * c8 * (klarge + one) + two}),
                              "heights in the small-B linear form", {"max_h_eps", n("h_alpha"), n("c8"), n("kappa_large")});
  const Real kB2 = book.upper(n("kappaB2"), book["kappa_fll1_D3"] * pow(kB3, real_of(r, bits)),
                              "linear form lower bound, small B", {"kappa_fll1_D3", n("kappaB3")});
  const Real uB = implicit_bound(two * kmin, kB2 * kB3, two, kB4, bits);
  const Real kAB5 = book.upper(n("kappa_AB5"), max(uB, one) * (one + one / log2), "A / log m when B is small",
                               {n("kappa_min"), n("kappaB2"), n("kappaB3"), n("kappaB4")});
  const Real br_b = book.upper(n("branch_small_B"), max(klarge, kAB5), "max{A,B} / log m when B is small",
                               {n("kappa_large"), n("kappa_AB5")});

  book.lower(n("kappa_msab"), kmin / two, "|sigma_a(beta)| grows with A", {n("kappa_min")});
  const Real k16 = book.upper(n("kappa16"), (log4 + kmaj) / kmin, "A against B", {n("kappa_maj"), n("kappa_min")});
  book.upper(n("kappa17"), log4 + kmaj, "log max{|x|,|y|} against B", {n("kappa_maj")});

  // A second embedding attaining |tau_b(beta)|.
  const Real kHi = book.upper(n("kappa_Hi"), rmax({one, two * max_h, two * h_alpha}), "heights when tau_b is not unique",
                              {"max_h_eps", n("h_alpha")});
  const Real kMajB = book.upper(n("kappa_MajB"), book["kappa_fll2_D2"] * pow(kHi, real_of(r + 1, bits)),
                                "linear form lower bound when tau_b is not unique", {"kappa_fll2_D2", n("kappa_Hi")});
  Real log_k16 = k16 > one ? log(k16) : Real(bits);
  const Real B9 = max(implicit_bound(kmin, kMajB, Real(bits), log4 + kMajB * log_k16, bits), one);
  const Real br_tau = book.upper(n("branch_tau_b"), max(one, k16) * B9 / log2, "max{A,B} / log m when tau_b is not unique",
                                 {n("kappa_min"), n("kappa_MajB"), n("kappa16")});

  // B against A via sigma_b, conj sigma_b, tau_b.
  const Real hg0 = book.upper(n("kappa_hg0"), Real(4L, bits) * c3 + two * log2 + two * c7 / klarge,
                              "height of the mixed quotient per A", {n("c3"), n("c7"), n("kappa_large")});
  const Real kMAB = book.upper(n("kappa_MAB"), rmax({one, two * max_h, hg0}), "heights in the B-against-A form",
                               {"max_h_eps", n("kappa_hg0")});
  const Real kAlogB = book.upper(n("kappa_AlogB"), book["kappa_fll1_D3"] * pow(kMAB, real_of(r + 1, bits)),
                                 "linear form lower bound, B against A", {"kappa_fll1_D3", n("kappa_MAB")});
  const Real t10 = implicit_bound(two * kmin, kAlogB, two, kA4, bits);
  const Real k10 = book.upper(n("kappa10"), max(t10, one), "B <= kappa10 A",
                              {n("kappa_min"), n("kappa_AlogB"), n("kappaA4")});

  // Final argument via sigma_a, conj sigma_a, tau_b.
  const Real kMBA = book.upper(n("kappa_MBA"), rmax({one, two * max_h, two * h_alpha / log2 + two * c7}),
                               "heights in the final linear form", {"max_h_eps", n("h_alpha"), n("c7")});
  const Real kAlogB1 = book.upper(n("kappa_AlogB1"), book["kappa_fll1_D2"] * pow(kMBA, real_of(r + 1, bits)),
                                  "linear form lower bound, final step", {"kappa_fll1_D2", n("kappa_MBA")});
  const Real scale = (one + k10) * (two / kmin);
  const Real tfin = implicit_bound(one, scale * kAlogB1, two, scale * log6, bits);
  const Real br_main = book.upper(n("branch_main"), max(tfin, one) * (one + one / log2),
                                  "(A + B) / log m in the generic case", {n("kappa10"), n("kappa_min"), n("kappa_AlogB1")});

  const Real kfinal = book.upper(n("kappa_final"), rmax({klarge, br_a, br_b, br_tau, br_main}), "max{A,B} <= kappa_final log m",
                                 {n("kappa_large"), n("branch_small_A"), n("branch_small_B"), n("branch_tau_b"), n("branch_main")});

  // From max{A,B} <= kappa log m to the solution box.
  const Real ky = book.upper(n("kappa_y"), (two * log2 + d2 * log2) / log2 + c1 * kfinal + dd * c7 + two * d2 * c3 * kfinal,
                             "log|y| / log m", {"c1", n("kappa_final"), n("c7"), n("c3")});
  const Real kx = book.upper(n("kappa_x"), ky + c1 * kfinal + lh_alpha / log2, "log|x| / log m",
                             {n("kappa_y"), "c1", n("kappa_final"), n("log_house_alpha")});
  book.upper(n("kappa1"), rmax({ky, kx, c3 * kfinal}), "log max{|x|,|y|,e^h(alpha eps)} / log m",
             {n("kappa_y"), n("kappa_x"), n("c3"), n("kappa_final")});
}

std::string decimal(const Real& v, bool lower) { return v.to_string(17, lower ? MPFR_RNDD : MPFR_RNDU); }

}  // namespace

Real implicit_bound(const Real& a, const Real& b, const Real& c, const Real& e, Bits bits) {
  if (!(a.sign() > 0) || !(b.sign() > 0) || c.sign() < 0) fail(ErrorCode::InvalidInput, "implicit_bound needs a, b > 0, c >= 0");
  auto g = [&](const Real& t) { return b * log(t + c) + e - a * t; };
  const Real one(1L, bits);
  Real lo = max(b / a - c, Real::pow2(-40, bits));
  if (g(lo).sign() < 0) return Real(bits);
  Real hi = max(lo * Real(2L, bits), one);
  while (!(g(hi).sign() < 0)) hi = hi * Real(2L, bits);
  const Real tol(1e-9, bits);
  for (int it = 0; it < 400 && hi - lo > tol * hi; ++it) {
    Real mid = (lo + hi) / Real(2L, bits);
    if (g(mid).sign() < 0) hi = mid;
    else lo = mid;
  }
  return mul(hi, add(one, Real::pow2(-60, bits), MPFR_RNDU), MPFR_RNDU);
}

std::string SolutionBox::xy_bound() const {
  const Bits bits = log_xy_bound.precision();
  Real l10 = div(log_xy_bound, log(Real(10L, bits), MPFR_RNDD), MPFR_RNDU);
  mpz_class e = l10.floor_to_integer();
  Real frac = sub(l10, Real(e, bits), MPFR_RNDU);
  double mant = pow(Real(10L, bits), frac, MPFR_RNDU).to_double(MPFR_RNDU);
  mant = std::ceil(mant * 1e6) / 1e6;
  if (mant >= 10.0) {
    mant /= 10.0;
    e += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6fe+%s", mant, e.get_str().c_str());
  return buf;
}

const NamedConstant& BoundReport::get(const std::string& name) const {
  for (const auto& c : constants)
    if (c.name == name) return c;
  for (const auto& c : inputs)
    if (c.name == name) return c;
  fail(ErrorCode::InvalidInput, "no constant named " + name);
}

nlohmann::ordered_json BoundReport::to_json() const {
  using json = nlohmann::ordered_json;
  json j;
  j["A_bound"] = decimal(box.A_bound, false);
  j["B_bound"] = decimal(box.B_bound, false);
  json cs = json::array();
  json edges = json::array();
  for (const auto& c : constants) {
    cs.push_back({{"bound", c.lower ? "lower" : "upper"},
                  {"inputs", c.inputs},
                  {"name", c.name},
                  {"tag", c.tag},
                  {"value", decimal(c.value, c.lower)}});
    for (const auto& in : c.inputs) edges.push_back(json::array({in, c.name}));
  }
  j["constants"] = cs;
  j["degree"] = degree;
  json graph;
  graph["acyclic"] = true;
  graph["edges"] = edges;
  j["dependency_graph"] = graph;
  json ins = json::object();
  for (const auto& c : inputs) ins[c.name] = decimal(c.value, false);
  j["inputs"] = ins;
  j["irreducibility"] = to_string(irreducibility);
  j["kappa1"] = decimal(kappa1, false);
  j["kappa_final"] = decimal(kappa_final, false);
  j["m"] = m.get_str();
  j["precision_bits"] = bits;
  j["provider"] = provider;
  j["rank"] = rank;
  j["signature"] = {signature.r1, signature.r2};
  j["solution_box"] = {{"A_bound", decimal(box.A_bound, false)},
                       {"B_bound", decimal(box.B_bound, false)},
                       {"log_xy_bound", decimal(box.log_xy_bound, false)},
                       {"xy_bound", box.xy_bound()}};
  j["third_embedding"] = third_embedding_rule;
  return j;
}

BoundReport compose_bounds(const UnitBasis& B, const AlgElement& alpha, const mpz_class& m,
                           const LinFormBoundProvider* provider, Bits bits) {
  if (m < 2) fail(ErrorCode::InvalidInput, "bounds need m >= 2");
  if (!provider) fail(ErrorCode::ProviderMissing, "no linear-forms constant provider supplied");
  if (!is_almost_totally_imaginary(B.embeddings))
    fail(ErrorCode::NotAlmostTotallyImaginary, "the field has more than one real embedding");
  if (B.rank() < 1) fail(ErrorCode::RankDeficient, "the unit group has rank 0; the family is finite");
  if (!alpha.field()->same_as(*B.field)) fail(ErrorCode::FieldMismatch, "alpha is not in the unit basis field");
  if (alpha.is_zero()) fail(ErrorCode::ZeroElement, "alpha must be nonzero");

  BoundReport rep;
  rep.m = m;
  rep.degree = B.degree();
  rep.rank = B.rank();
  rep.signature = B.embeddings.signature;
  rep.provider = provider->name();
  rep.irreducibility = B.field->irreducibility();
  rep.bits = bits;
  rep.third_embedding_rule =
      "third embedding phi outside {sigma_b, tau_b} (resp. {sigma_a, tau_a}) maximising the certified lower bound of "
      "|phi(alpha eps) - tau_b(alpha eps)|";

  ConstantBook book(bits, rep.inputs, rep.constants);
  const int d = B.degree();
  const int s = B.rank() + 1;
  const int D2 = d * (d - 1);
  const int D3 = d * (d - 1) * std::max(d - 2, 1);

  Real sum_h(bits), max_h(bits);
  for (std::size_t i = 0; i < B.fundamental_units.size(); ++i) {
    Real h = abs_log_height(B.fundamental_units[i], bits).value;
    book.input("h_eps" + std::to_string(i + 1), h, "height of a fundamental unit");
    sum_h = add(sum_h, h, MPFR_RNDU);
    max_h = max(max_h, h);
  }
  book.upper("sum_h_eps", sum_h, "sum of unit heights", {});
  book.upper("max_h_eps", max_h, "largest unit height", {});
  book.upper("c1", house_bound_constant(B), "two-sided house bound for units", {});
  const EmbeddingLemma lemma = embedding_lemma(B);
  book.upper("kappa3", lemma.kappa3, "left inverse of the unit log matrix", {});
  book.lower("kappa4", lemma.kappa4, "extreme embeddings of a unit", {"kappa3"});
  book.upper("c_round", rounding_constant(B), "cost of rounding unit-lattice coordinates", {});
  book.upper("kappa_fll1_D3", kappa_fll1(*provider, s, D3, bits), "linear forms, three conjugates", {});
  book.upper("kappa_fll1_D2", kappa_fll1(*provider, s, D2, bits), "linear forms, two conjugates", {});
  book.upper("kappa_fll2_D2", kappa_fll2(*provider, s, D2, bits), "linear forms, plain exponent bound", {});

  alpha_chain(book, "alpha.", B, alpha, bits);
  alpha_chain(book, "alpha_inv.", B, inverse(alpha), bits);

  const Real k1 = book.upper("kappa1", max(book["alpha.kappa1"], book["alpha_inv.kappa1"]),
                             "larger of the two orientations |x| <= |y| and |x| > |y|",
                             {"alpha.kappa1", "alpha_inv.kappa1"});
  const Real kf = book.upper("kappa_final", max(book["alpha.kappa_final"], book["alpha_inv.kappa_final"]),
                             "max{A,B} / log m over both orientations", {"alpha.kappa_final", "alpha_inv.kappa_final"});
  rep.kappa1 = k1;
  rep.kappa_final = kf;
  const Real logm = log(Real(m, bits), MPFR_RNDU);
  rep.box.log_xy_bound = mul(k1, logm, MPFR_RNDU);
  rep.box.A_bound = mul(kf, logm, MPFR_RNDU);
  rep.box.B_bound = rep.box.A_bound;
  return rep;
}

ParameterProfile parameter_profile(const UnitBasis& B, const AlgElement& alpha, const ExponentVector& eps,
                                   const mpz_class& x, const mpz_class& y, const mpz_class& m) {
  const Bits bits = B.bits();
  const AlgElement theta = alpha * unit_from_exponents(B, eps);
  const AlgElement beta = AlgElement::rational(B.field, mpq_class(x)) - theta * AlgElement::rational(B.field, mpq_class(y));
  ParameterProfile p;
  const Real one(1L, bits);
  p.A_tilde = max(one, with_precision(abs_log_height(theta, bits).value, bits, MPFR_RNDU));
  p.A = eps.C();
  p.B_tilde = max(one, with_precision(abs_log_height(beta, bits).value, bits, MPFR_RNDU));
  mpz_class mm = m < 1 ? mpz_class(1) : m;
  const mpq_class nb = abs(norm(beta));
  const mpz_class nb_ceil = (nb.get_num() + nb.get_den() - 1) / nb.get_den();
  if (nb_ceil > mm) mm = nb_ceil;
  Reduction red = reduce_by_units(beta, B, mm);
  p.B = red.exponents.C();
  p.rho_height = with_precision(abs_log_height(red.rho, bits).value, bits, MPFR_RNDU);
  return p;
}

}  // namespace thue
