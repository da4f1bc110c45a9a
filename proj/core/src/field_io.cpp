#include "thue/field_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "thue/error.hpp"

namespace thue::io {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& pointer, const std::string& what) {
  fail(ErrorCode::InvalidInput, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

std::string child(const std::string& pointer, const std::string& key) {
  std::string k;
  for (char ch : key) k += ch == '~' ? "~0" : ch == '/' ? "~1" : std::string(1, ch);
  return pointer + "/" + k;
}

std::string child(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }

const json& require(const json& doc, const std::string& key, const std::string& pointer) {
  if (!doc.contains(key)) bad(child(pointer, key), "missing required member");
  return doc.at(key);
}

}  // namespace

mpq_class parse_rational(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? mpq_class(mpz_class(std::to_string(v.get<std::uint64_t>())))
                                  : mpq_class(mpz_class(std::to_string(v.get<std::int64_t>())));
  }
  if (!v.is_string()) bad(pointer, v.is_number_float() ? "expected an exact integer; write large or fractional values as strings like \"p/q\""
                                    : "expected an integer or a rational string \"p/q\"");
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*)");
  const std::string s = v.get<std::string>();
  std::smatch mt;
  if (!std::regex_match(s, mt, pattern)) bad(pointer, "malformed rational '" + s + "'");
  mpz_class num(mt[1].str());
  mpz_class den = mt[2].matched ? mpz_class(mt[2].str()) : mpz_class(1);
  if (den == 0) bad(pointer, "zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpz_class parse_integer(const json& v, const std::string& pointer) {
  mpq_class q = parse_rational(v, pointer);
  if (q.get_den() != 1) bad(pointer, "expected an integer");
  return q.get_num();
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidInput, "'" + path.string() + "' is not valid JSON: " + e.what());
  } catch (const json::out_of_range&) {
    fail(ErrorCode::InvalidInput, "'" + path.string() + "' has a number too large for JSON; write big integers as strings");
  }
}

AlgElement parse_element(const FieldPtr& field, const json& v, const std::string& pointer) {
  if (!v.is_array()) bad(pointer, "expected an array of rationals");
  const auto d = static_cast<std::size_t>(field->degree());
  if (v.size() > d) bad(pointer, "more coordinates than the field degree");
  std::vector<mpq_class> coords(d, mpq_class(0));
  for (std::size_t i = 0; i < v.size(); ++i) coords[i] = parse_rational(v[i], child(pointer, i));
  return AlgElement(field, std::move(coords));
}

AlgElement parse_element_list(const FieldPtr& field, const std::string& text) {
  json arr = json::array();
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) arr.push_back(item);
  return parse_element(field, arr, "");
}

FieldInput parse_field_input(const json& doc) {
  if (!doc.is_object()) bad("", "expected a JSON object");
  const json& mp = require(doc, "min_poly", "");
  if (!mp.is_array()) bad("/min_poly", "expected an array of integers, leading coefficient first");
  std::vector<mpz_class> coeffs;
  for (std::size_t i = 0; i < mp.size(); ++i) coeffs.push_back(parse_integer(mp[i], child("/min_poly", i)));

  Irreducibility requested = Irreducibility::Verified;
  if (doc.contains("irreducibility")) {
    const json& ir = doc["irreducibility"];
    if (ir == "verified") {
      requested = Irreducibility::Verified;
    } else if (ir == "asserted") {
      requested = Irreducibility::Asserted;
    } else {
      bad("/irreducibility", "expected \"verified\" or \"asserted\"");
    }
  }

  FieldInput input;
  try {
    input.field = NumberField::make(coeffs, requested);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput) {
      std::string what = e.what();
      const std::string prefix = std::string(error_code_name(e.code())) + ": ";
      if (what.starts_with(prefix)) what.erase(0, prefix.size());
      bad("/min_poly", what);
    }
    throw;
  }
  if (doc.contains("alpha")) input.alpha = parse_element(input.field, doc["alpha"], "/alpha");
  if (doc.contains("fundamental_units")) {
    const json& us = doc["fundamental_units"];
    if (!us.is_array()) bad("/fundamental_units", "expected an array of elements");
    for (std::size_t i = 0; i < us.size(); ++i)
      input.fundamental_units.push_back(parse_element(input.field, us[i], child("/fundamental_units", i)));
  }
  if (doc.contains("torsion_generator"))
    input.torsion_generator = parse_element(input.field, doc["torsion_generator"], "/torsion_generator");
  if (doc.contains("torsion_order")) {
    const json& w = doc["torsion_order"];
    if (!w.is_number_integer() || w.get<long>() < 1 || w.get<long>() > 1000)
      bad("/torsion_order", "expected a positive integer");
    input.torsion_order = w.get<int>();
  }
  if (input.torsion_generator.has_value() != doc.contains("torsion_order"))
    bad(input.torsion_generator ? "/torsion_order" : "/torsion_generator",
        "torsion_generator and torsion_order must be given together");
  if (doc.contains("regulator")) {
    const json& r = doc["regulator"];
    if (!r.is_string()) bad("/regulator", "expected a decimal string");
    try {
      input.regulator = Real::parse(r.get<std::string>(), 128);
    } catch (const Error&) {
      bad("/regulator", "malformed decimal '" + r.get<std::string>() + "'");
    }
  }
  return input;
}

FieldInput load_field_input(const std::filesystem::path& path) { return parse_field_input(read_json_file(path)); }

UnitBasis unit_basis_of(const FieldInput& input, Bits bits) {
  if (!input.has_units()) bad("/fundamental_units", "the command needs fundamental units");
  AlgElement zeta = input.torsion_generator ? *input.torsion_generator : AlgElement::rational(input.field, -1);
  return make_unit_basis(input.field, input.fundamental_units, zeta, input.torsion_generator ? input.torsion_order : 2,
                         input.regulator, bits);
}

BinaryForm parse_form(const json& doc) {
  if (!doc.is_object()) bad("", "expected a JSON object");
  const json& cs = require(doc, "coeffs", "");
  if (!cs.is_array() || cs.size() < 2) bad("/coeffs", "expected at least two integer coefficients");
  BinaryForm F;
  for (std::size_t i = 0; i < cs.size(); ++i) F.coeffs.push_back(parse_integer(cs[i], child("/coeffs", i)));
  if (F.coeffs.front() == 0) bad("/coeffs/0", "leading coefficient must be nonzero");
  return F;
}

json to_json(const ExponentVector& e) {
  return {{"exponents", e.exponents}, {"torsion", e.torsion_index}};
}

json to_json(const SolutionTriple& s) {
  return {{"epsilon", to_json(s.epsilon)}, {"value", s.value.get_str()}, {"x", s.x.get_str()}, {"y", s.y.get_str()}};
}

json to_json(const std::vector<SolutionTriple>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

json to_json(const BinaryForm& F) {
  json cs = json::array();
  for (const auto& c : F.coeffs) cs.push_back(c.get_str());
  return cs;
}

}  // namespace thue::io
