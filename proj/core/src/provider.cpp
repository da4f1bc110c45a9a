#include "thue/provider.hpp"

#include <fstream>
#include <json.hpp>
#include <optional>

#include "thue/error.hpp"

namespace thue {

namespace {

Real pow_up(const Real& base, long e, Bits bits) { return pow(base, Real(e, bits), MPFR_RNDU); }

}  // namespace

Real MatveevTypeProvider::kappa(int s, int D) const {
  if (s < 1 || D < 1) fail(ErrorCode::InvalidInput, "provider arguments must be positive");
  const Bits b = bits_;
  Real v = Real::pow2(6L * s + 20, b);
  v = mul(v, pow(Real(static_cast<long>(s), b), Real(4.5, b), MPFR_RNDU), MPFR_RNDU);
  v = mul(v, pow_up(Real(static_cast<long>(D), b), s + 2L, b), MPFR_RNDU);
  Real l = add(Real(1L, b), log(Real(static_cast<long>(D), b), MPFR_RNDU), MPFR_RNDU);
  return mul(v, l, MPFR_RNDU);
}

TableProvider::TableProvider(std::vector<Entry> entries, std::string label)
    : entries_(std::move(entries)), label_(std::move(label)) {
  for (const auto& e : entries_)
    if (e.s < 1 || e.D < 1 || !(e.kappa.sign() > 0) || !e.kappa.is_finite())
      fail(ErrorCode::InvalidInput, "provider table entries need s, D >= 1 and a positive finite kappa");
}

TableProvider TableProvider::from_json_file(const std::string& path, Bits bits) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open provider table " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInput, "provider table " + path + ": " + e.what());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array())
    fail(ErrorCode::InvalidInput, "provider table /entries must be an array");
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
    const auto& e = doc["entries"][i];
    const std::string where = "/entries/" + std::to_string(i);
    if (!e.is_object() || !e.contains("s") || !e.contains("D") || !e.contains("kappa"))
      fail(ErrorCode::InvalidInput, "provider table " + where + " needs s, D and kappa");
    if (!e["s"].is_number_integer() || !e["D"].is_number_integer())
      fail(ErrorCode::InvalidInput, "provider table " + where + ": s and D must be integers");
    std::string k = e["kappa"].is_string() ? e["kappa"].get<std::string>() : e["kappa"].dump();
    entries.push_back({e["s"].get<int>(), e["D"].get<int>(), Real::parse(k, bits, MPFR_RNDU)});
  }
  return TableProvider(std::move(entries), "table:" + path);
}

Real TableProvider::kappa(int s, int D) const {
  std::optional<Real> best;
  for (const auto& e : entries_)
    if (e.s >= s && e.D >= D && (!best || e.kappa < *best)) best = e.kappa;
  if (!best)
    fail(ErrorCode::ProviderMissing,
         "no table entry covers s=" + std::to_string(s) + ", D=" + std::to_string(D));
  return *best;
}

Real kappa_fll1(const LinFormBoundProvider& provider, int s, int D, Bits bits) {
  const Real two_pi = mul(Real(2L, bits), Real::pi(bits, MPFR_RNDU), MPFR_RNDU);
  Real base = add(Real(static_cast<long>(D), bits), two_pi, MPFR_RNDU);
  Real v = mul(two_pi, pow_up(base, s, bits), MPFR_RNDU);
  v = mul(v, with_precision(provider.kappa(s + 1, D), bits, MPFR_RNDU), MPFR_RNDU);
  Real l = div(log(Real(4L * s * D, bits), MPFR_RNDU), log(Real(2L, bits), MPFR_RNDD), MPFR_RNDU);
  v = mul(v, add(Real(1L, bits), l, MPFR_RNDU), MPFR_RNDU);
  return add(v, Real(1L, bits), MPFR_RNDU);
}

Real kappa_fll2(const LinFormBoundProvider& provider, int s, int D, Bits bits) {
  return kappa_fll1(provider, s, D, bits);
}

}  // namespace thue
