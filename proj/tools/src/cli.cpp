#include "thue_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "thue/bounds.hpp"
#include "thue/elimination.hpp"
#include "thue/embeddings.hpp"
#include "thue/error.hpp"
#include "thue/heights.hpp"
#include "thue/provider.hpp"

namespace thue::cli {

namespace {

using nlohmann::json;

std::string upper(const Real& v) { return v.to_string(17, MPFR_RNDU); }

mpz_class parse_m(const std::string& text) {
  mpz_class m = io::parse_integer(json(text), "/m");
  if (m < 0) fail(ErrorCode::InvalidInput, "m must be nonnegative");
  return m;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidInput, "malformed integer '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

json params_json(const stender::Params& p) { return {{"D", p.D}, {"c", p.c}}; }

io::FieldInput field_of(const RunConfig& cfg) {
  if (cfg.stender) return stender_field_input(*cfg.stender);
  if (cfg.input_path.empty()) fail(ErrorCode::InvalidInput, "a input file or --D/--c is required");
  return io::load_field_input(cfg.input_path);
}

UnitBasis basis_of(const RunConfig& cfg, const io::FieldInput& input, Bits bits) {
  if (cfg.stender) return stender::unit_basis(*cfg.stender, bits);
  return io::unit_basis_of(input, bits);
}

std::unique_ptr<LinFormBoundProvider> provider_of(const RunConfig& cfg, Bits bits) {
  if (cfg.provider == "default") return std::make_unique<MatveevTypeProvider>(bits);
  if (cfg.provider == "file") {
    if (cfg.provider_file.empty()) fail(ErrorCode::InvalidInput, "--provider file needs --provider-file");
    return std::make_unique<TableProvider>(TableProvider::from_json_file(cfg.provider_file, bits));
  }
  fail(ErrorCode::InvalidInput, "unknown provider '" + cfg.provider + "'");
}

json box_json(const BoundReport& rep) {
  return {{"A_bound", upper(rep.box.A_bound)},
          {"B_bound", upper(rep.box.B_bound)},
          {"log_xy_bound", upper(rep.box.log_xy_bound)},
          {"xy_bound", rep.box.xy_bound()}};
}

json cmd_field_check(const RunConfig& cfg, Bits bits) {
  const io::FieldInput input = field_of(cfg);
  const FieldPtr& K = input.field;
  const EmbeddingSet E = compute_embeddings(K, bits);
  json out;
  json cs = json::array();
  for (const auto& c : K->coeffs()) cs.push_back(c.get_str());
  out["min_poly"] = cs;
  out["degree"] = K->degree();
  out["discriminant"] = K->discriminant().get_str();
  out["irreducibility"] = to_string(K->irreducibility());
  out["witness_prime"] = K->witness_prime() ? json(*K->witness_prime()) : json(nullptr);
  out["signature"] = {E.signature.r1, E.signature.r2};
  out["almost_totally_imaginary"] = is_almost_totally_imaginary(E);
  out["alpha_primitive"] = is_primitive_element(input.alpha_or_generator());
  if (input.has_units()) {
    const UnitBasis B = basis_of(cfg, input, bits);
    json u;
    u["rank"] = B.rank();
    u["torsion_order"] = B.torsion_order;
    u["regulator"] = B.regulator.to_string(17);
    u["regulator_given"] = B.regulator_given ? json(B.regulator_given->to_string(17)) : json(nullptr);
    u["regulator_consistent"] = B.regulator_consistent;
    out["units"] = u;
  }
  return out;
}

json cmd_embeddings(const RunConfig& cfg, Bits bits) {
  const io::FieldInput input = field_of(cfg);
  const EmbeddingSet E = compute_embeddings(input.field, bits);
  const int digits = std::max(17, static_cast<int>(static_cast<double>(bits) * 0.30103) - 2);
  json roots = json::array();
  for (const auto& v : E.values)
    roots.push_back({{"re", v.mid.re.to_string(digits)}, {"im", v.mid.im.to_string(digits)}, {"radius", upper(v.rad)}});
  return {{"signature", {E.signature.r1, E.signature.r2}}, {"roots", roots}, {"precision_bits", bits}};
}

json cmd_height(const RunConfig& cfg, Bits bits) {
  const io::FieldInput input = field_of(cfg);
  if (cfg.element.empty()) fail(ErrorCode::InvalidInput, "--element is required");
  const AlgElement a = io::parse_element_list(input.field, cfg.element);
  const HeightValue h = abs_log_height(a, bits);
  const ZPoly mp = minpoly_integer(a);
  json coeffs = json::array();
  for (const auto& c : leading_first(mp)) coeffs.push_back(c.get_str());
  return {{"h", upper(h.value)}, {"M", upper(mahler_measure(mp, bits))}, {"minpoly", coeffs}};
}

json cmd_twist(const RunConfig& cfg, Bits bits) {
  const io::FieldInput input = field_of(cfg);
  const UnitBasis B = basis_of(cfg, input, bits);
  const ExponentVector e{cfg.torsion, parse_longs(cfg.exponents)};
  if (static_cast<int>(e.exponents.size()) != B.rank())
    fail(ErrorCode::InvalidInput, "--exponents needs " + std::to_string(B.rank()) + " entries");
  if (e.torsion_index < 0 || e.torsion_index >= B.torsion_order)
    fail(ErrorCode::InvalidInput, "--torsion must lie in [0, " + std::to_string(B.torsion_order) + ")");
  const BinaryForm F = twist(input.alpha_or_generator(), e, B);
  return {{"coeffs", io::to_json(F)}, {"epsilon", io::to_json(e)}};
}

json cmd_stender_coeffs(const RunConfig& cfg) {
  const stender::Params p = *cfg.stender;
  const stender::FamilyCoeffs k = stender::coeffs_by_recurrence(p, cfg.n);
  json out{{"params", params_json(p)}, {"n", cfg.n}, {"a", k.a.get_str()}, {"b", k.b.get_str()}, {"c", k.c.get_str()}};
  out["form"] = cfg.n == -1 ? json(nullptr) : io::to_json(stender::family_form(p, cfg.n));
  return out;
}

json cmd_stender_verify(const RunConfig& cfg, Bits bits) {
  const stender::Params p = *cfg.stender;
  if (cfg.nmax < 0) fail(ErrorCode::InvalidInput, "--nmax must be nonnegative");
  // Enough bits for the symmetric functions of eps_i^nmax, whose size is about house^(4 nmax).
  const Bits need = std::max<Bits>(bits, static_cast<Bits>(64 + 16 * (cfg.nmax + 1) * (1 + std::log2(p.D))));
  json mismatches = json::array();
  bool sym_c = true, sym_b = true;
  for (long n = -cfg.nmax; n <= cfg.nmax; ++n) {
    const auto r = stender::coeffs_by_recurrence(p, n);
    const auto d = stender::coeffs_direct(p, n, need);
    if (!(r == d)) mismatches.push_back(n);
    const auto neg = stender::coeffs_by_recurrence(p, -n);
    mpz_class sign = (n % 2 != 0 && p.c == 1) ? -1 : 1;  // (-c)^n
    if (r.c != sign * r.a) sym_c = false;
    if (neg.b != r.b) sym_b = false;
  }
  // X^4 f(-c/X) = f(X): coefficient of X^(4-k) picks up (-c)^k, so f_k = (-c)^k f_{4-k}.
  const auto f = stender::base_coefficients(p);
  bool palindromic = true;
  for (int k = 0; k <= 4; ++k) {
    const mpz_class s = (k % 2 != 0 && p.c == 1) ? -1 : 1;
    if (f[static_cast<std::size_t>(4 - k)] != s * f[static_cast<std::size_t>(k)]) palindromic = false;
  }
  const mpz_class printed = stender::printed_b3(p);
  const mpz_class direct_b3 = stender::coeffs_direct(p, 3, need).b;
  json b3{{"printed", printed.get_str()},
          {"recurrence", stender::coeffs_by_recurrence(p, 3).b.get_str()},
          {"direct", direct_b3.get_str()},
          {"printed_status", printed == direct_b3 ? "confirmed" : "refuted"}};
  const bool ok = mismatches.empty() && sym_c && sym_b && palindromic;
  return {{"params", params_json(p)},   {"nmax", cfg.nmax},
          {"mismatches", mismatches},   {"symmetry_c", sym_c},
          {"symmetry_b", sym_b},        {"palindromic", palindromic},
          {"b3", b3},                   {"ok", ok},
          {"precision_bits", need}};
}

json solutions_doc(const FamilySolveResult& res) {
  json out{{"solutions", io::to_json(res.solutions)},
           {"count", res.solutions.size()},
           {"completeness", to_string(res.completeness)}};
  json sk = json::array();
  for (const auto& e : res.skipped) sk.push_back(io::to_json(e));
  out["skipped"] = sk;
  out["solution_box"] = res.report ? box_json(*res.report) : json(nullptr);
  return out;
}

json cmd_stender_solve(const RunConfig& cfg, Bits bits) {
  const stender::Params p = *cfg.stender;
  const mpz_class m = parse_m(cfg.m);
  auto provider = provider_of(cfg, bits);
  const FamilySolveResult res = stender::solve_family(p, m, cfg.caps, provider.get());
  json out = solutions_doc(res);
  out["params"] = params_json(p);
  out["m"] = m.get_str();
  out["caps"] = {{"xy", cfg.caps.xy}, {"n", cfg.caps.A}};
  return out;
}

json cmd_solve_fixed(const RunConfig& cfg, Bits bits) {
  if (cfg.input_path.empty()) fail(ErrorCode::InvalidInput, "a form file is required");
  const BinaryForm F = io::parse_form(io::read_json_file(cfg.input_path));
  const mpz_class m = parse_m(cfg.m);
  const FixedFormBox box = lemma3_bounds(F, m, bits);
  json sols = json::array();
  for (const auto& [x, y] : solve_fixed_totally_imaginary(F, m, false, bits))
    sols.push_back({{"x", x.get_str()}, {"y", y.get_str()}, {"value", evaluate(F, x, y).get_str()}});
  return {{"form", io::to_json(F)},
          {"m", m.get_str()},
          {"box", {{"x_bound", upper(box.x_bound)}, {"y_bound", upper(box.y_bound)}}},
          {"count", sols.size()},
          {"solutions", sols}};
}

json cmd_solve_family(const RunConfig& cfg, Bits bits) {
  const io::FieldInput input = field_of(cfg);
  const UnitBasis B = basis_of(cfg, input, bits);
  const mpz_class m = parse_m(cfg.m);
  auto provider = provider_of(cfg, bits);
  const FamilySolveResult res = solve_family_general(B, input.alpha_or_generator(), m, cfg.caps, provider.get());
  json out = solutions_doc(res);
  out["m"] = m.get_str();
  out["caps"] = {{"xy", cfg.caps.xy}, {"A", cfg.caps.A}, {"all_torsion", cfg.caps.all_torsion}};
  return out;
}

json cmd_bounds(const RunConfig& cfg, Bits bits) {
  const io::FieldInput input = field_of(cfg);
  const UnitBasis B = basis_of(cfg, input, bits);
  const mpz_class m = parse_m(cfg.m);
  auto provider = provider_of(cfg, bits);
  const BoundReport rep = compose_bounds(B, input.alpha_or_generator(), m, provider.get(), bits);
  return json::parse(rep.to_json().dump());
}

json cmd_oracle(const RunConfig& cfg, Bits bits) {
  const io::FieldInput input = field_of(cfg);
  const mpz_class m = parse_m(cfg.m);
  std::vector<ExponentVector> skipped;
  const auto sols = oracle_search(input, m, cfg.caps, std::max<Bits>(bits, 256), &skipped);
  json sk = json::array();
  for (const auto& e : skipped) sk.push_back(io::to_json(e));
  return {{"solutions", io::to_json(sols)}, {"count", sols.size()}, {"skipped", sk}, {"m", m.get_str()}};
}

}  // namespace

json execute(const RunConfig& cfg, Bits bits) {
  const bool family = cfg.command == Command::StenderCoeffs || cfg.command == Command::StenderVerify ||
                      cfg.command == Command::StenderSolve;
  if (family && !cfg.stender) fail(ErrorCode::InvalidInput, "stender commands need --D and --c");
  if (cfg.stender) stender::validate(*cfg.stender);
  switch (cfg.command) {
    case Command::FieldCheck: return cmd_field_check(cfg, bits);
    case Command::Embeddings: return cmd_embeddings(cfg, bits);
    case Command::Height: return cmd_height(cfg, bits);
    case Command::Twist: return cmd_twist(cfg, bits);
    case Command::StenderCoeffs: return cmd_stender_coeffs(cfg);
    case Command::StenderVerify: return cmd_stender_verify(cfg, bits);
    case Command::StenderSolve: return cmd_stender_solve(cfg, bits);
    case Command::SolveFixed: return cmd_solve_fixed(cfg, bits);
    case Command::SolveFamily: return cmd_solve_family(cfg, bits);
    case Command::Bounds: return cmd_bounds(cfg, bits);
    case Command::Oracle: return cmd_oracle(cfg, bits);
  }
  fail(ErrorCode::InvalidInput, "unknown command");
}

RunResult run(const RunConfig& config) {
  RunResult res;
  auto error_doc = [](const std::string& code, const std::string& message) {
    return json{{"error", {{"code", code}, {"message", message}}}};
  };
  if (config.precision_bits < 64) {
    res.exit_code = kValidation;
    res.document = error_doc("InvalidInput", "precision must be at least 64 bits");
    return res;
  }
  for (Bits bits = config.precision_bits;; bits *= 2) {
    res.bits_used = bits;
    try {
      res.document = execute(config, bits);
      res.exit_code = kOk;
      return res;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PrecisionExhausted && bits * 2 <= kMaxBits) continue;
      res.exit_code = e.code() == ErrorCode::PrecisionExhausted ? kPrecision : kValidation;
      res.document = error_doc(std::string(error_code_name(e.code())), e.what());
      return res;
    } catch (const std::exception& e) {
      res.exit_code = kInternal;
      res.document = error_doc("Internal", e.what());
      return res;
    }
  }
}

namespace {

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("exponents")) {
    std::string s = "[";
    for (std::size_t i = 0; i < v["exponents"].size(); ++i) s += (i ? "," : "") + v["exponents"][i].dump();
    return s + "]" + (v.value("torsion", 0) ? " t=" + v["torsion"].dump() : "");
  }
  return v.dump();
}

}  // namespace

std::string render_pretty(const json& doc) {
  std::ostringstream os;
  for (const auto& [key, v] : doc.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      std::vector<std::string> cols;
      for (const auto& [k, _] : v.front().items()) cols.push_back(k);
      os << key << " (" << v.size() << ")\n";
      std::vector<std::vector<std::string>> rows;
      std::vector<std::size_t> width(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
      for (const auto& row : v) {
        rows.emplace_back();
        for (std::size_t c = 0; c < cols.size(); ++c) {
          rows.back().push_back(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
          width[c] = std::max(width[c], rows.back().back().size());
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        os << " ";
        for (std::size_t c = 0; c < cells.size(); ++c)
          os << " " << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        os << "\n";
      };
      line(cols);
      for (const auto& r : rows) line(r);
    } else {
      os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump(2)) << "\n";
    }
  }
  return os.str();
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Thue inequalities over almost totally imaginary fields", "thue"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("THUE_PRECISION_BITS")) {
    try {
      cfg.precision_bits = std::stoul(env);
    } catch (const std::exception&) {
      err << "THUE_PRECISION_BITS is not a number: " << env << "\n";
      return kValidation;
    }
  }
  app.add_option("--precision-bits", cfg.precision_bits, "Working precision (default 128 or $THUE_PRECISION_BITS)");
  app.add_flag("--pretty", cfg.pretty, "Human-readable output instead of compact JSON");
  app.add_option("-o,--output", cfg.output, "Write the document to this file");

  long D = 0;
  int c = 0;
  auto add_family = [&](CLI::App* sub, bool required) {
    auto* od = sub->add_option("--D", D, "Stender parameter D >= 2");
    auto* oc = sub->add_option("--c", c, "Stender parameter c in {1, -1}");
    if (required) {
      od->required();
      oc->required();
    }
  };
  auto add_caps = [&](CLI::App* sub, const std::string& exp_flag) {
    sub->add_option("--m", cfg.m, "Right-hand side bound m")->required();
    sub->add_option("--cap-xy", cfg.caps.xy, "Search cap on |x| and |y|");
    sub->add_option(exp_flag, cfg.caps.A, "Search cap on unit exponents");
  };

  auto* fc = app.add_subcommand("field-check", "Validate a field file and print its invariants");
  fc->add_option("input", cfg.input_path, "Field file JSON")->required();
  fc->callback([&] { cfg.command = Command::FieldCheck; });

  auto* emb = app.add_subcommand("embeddings", "Certified complex embeddings");
  emb->add_option("input", cfg.input_path, "Field file JSON")->required();
  emb->add_option("--bits", cfg.precision_bits, "Working precision");
  emb->callback([&] { cfg.command = Command::Embeddings; });

  auto* ht = app.add_subcommand("height", "Absolute logarithmic height of an element");
  ht->add_option("input", cfg.input_path, "Field file JSON")->required();
  ht->add_option("--element", cfg.element, "Coordinates c0,c1,... on the power basis")->required();
  ht->callback([&] { cfg.command = Command::Height; });

  auto* tw = app.add_subcommand("twist", "Binary form of alpha times a unit");
  tw->add_option("input", cfg.input_path, "Field file JSON with units");
  add_family(tw, false);
  tw->add_option("--exponents", cfg.exponents, "Unit exponents n1,...,nr")->required();
  tw->add_option("--torsion", cfg.torsion, "Torsion power");
  tw->callback([&] { cfg.command = Command::Twist; });

  auto* st = app.add_subcommand("stender", "The quartic Stender family");
  st->require_subcommand(1);
  auto* sc = st->add_subcommand("coeffs", "a_n, b_n, c_n from the recurrences");
  add_family(sc, true);
  sc->add_option("--n", cfg.n, "Index n")->required();
  sc->callback([&] { cfg.command = Command::StenderCoeffs; });
  auto* sv = st->add_subcommand("verify", "Recurrences against the direct oracle, symmetries and b_3");
  add_family(sv, true);
  sv->add_option("--nmax", cfg.nmax, "Check every |n| <= nmax");
  sv->callback([&] { cfg.command = Command::StenderVerify; });
  auto* ss = st->add_subcommand("solve", "Solutions of |F_n(x, y)| <= m");
  add_family(ss, true);
  add_caps(ss, "--cap-n");
  ss->callback([&] { cfg.command = Command::StenderSolve; });

  auto* sf = app.add_subcommand("solve-fixed", "All solutions for one form without real roots");
  sf->add_option("form", cfg.input_path, "Form JSON {\"coeffs\": [...]}")->required();
  sf->add_option("--m", cfg.m, "Right-hand side bound m")->required();
  sf->callback([&] { cfg.command = Command::SolveFixed; });

  auto* sfam = app.add_subcommand("solve-family", "Capped enumeration over the twisted family");
  sfam->add_option("input", cfg.input_path, "Field file JSON with units");
  add_family(sfam, false);
  add_caps(sfam, "--cap-A");
  sfam->add_flag("--all-torsion", cfg.caps.all_torsion, "Also twist by every root of unity");
  sfam->add_option("--provider", cfg.provider, "default|file");
  sfam->add_option("--provider-file", cfg.provider_file, "Table of linear-forms constants");
  sfam->callback([&] { cfg.command = Command::SolveFamily; });

  auto* bd = app.add_subcommand("bounds", "The effective constant chain and solution box");
  bd->add_option("input", cfg.input_path, "Field file JSON with units");
  add_family(bd, false);
  bd->add_option("--m", cfg.m, "Right-hand side bound m >= 2")->required();
  bd->add_option("--provider", cfg.provider, "default|file");
  bd->add_option("--provider-file", cfg.provider_file, "Table of linear-forms constants");
  bd->callback([&] { cfg.command = Command::Bounds; });

  auto* orc = app.add_subcommand("oracle", "Independent brute-force search");
  orc->add_option("input", cfg.input_path, "Field file JSON with units");
  add_family(orc, false);
  add_caps(orc, "--cap-A,--cap-n");
  orc->add_flag("--all-torsion", cfg.caps.all_torsion, "Also twist by every root of unity");
  orc->callback([&] { cfg.command = Command::Oracle; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << json{{"error", {{"code", "InvalidInput"}, {"message", e.what()}}}}.dump() << "\n";
    return kValidation;
  }
  if (D != 0 || c != 0) cfg.stender = stender::Params{D, c};

  const RunResult res = run(cfg);
  const std::string text = cfg.pretty && res.exit_code == kOk ? render_pretty(res.document) : res.document.dump(cfg.pretty ? 2 : -1) + "\n";
  if (res.exit_code != kOk) err << res.document["error"]["message"].get<std::string>() << "\n";
  if (!cfg.output.empty() && res.exit_code == kOk) {
    std::ofstream f(cfg.output);
    if (!f) {
      err << "cannot write " << cfg.output << "\n";
      return kValidation;
    }
    f << text;
  } else {
    out << text;
  }
  return res.exit_code;
}

}  // namespace thue::cli
