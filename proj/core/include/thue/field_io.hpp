#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thue/algnum.hpp"
#include "thue/forms.hpp"
#include "thue/solve.hpp"
#include "thue/units.hpp"

namespace thue::io {

// Accepts a JSON integer or a string "p", "p/q" (reduced on read). Malformed
// input and zero denominators raise Error(InvalidInput) naming `pointer`.
mpq_class parse_rational(const nlohmann::json& v, const std::string& pointer);
mpz_class parse_integer(const nlohmann::json& v, const std::string& pointer);
std::string to_string(const mpq_class& q);

/// Contents of a field-input document after validation.
struct FieldInput {
  FieldPtr field;
  std::optional<AlgElement> alpha;
  std::vector<AlgElement> fundamental_units;
  std::optional<AlgElement> torsion_generator;
  int torsion_order = 2;
  std::optional<Real> regulator;

  bool has_units() const { return !fundamental_units.empty(); }
  AlgElement alpha_or_generator() const { return alpha ? *alpha : AlgElement::generator(field); }
};

FieldInput parse_field_input(const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);
FieldInput load_field_input(const std::filesystem::path& path);

// Element coordinates on 1, alpha, ..., alpha^(d-1); shorter lists are zero-padded.
AlgElement parse_element(const FieldPtr& field, const nlohmann::json& v, const std::string& pointer);
// Comma separated rationals, as typed on a command line.
AlgElement parse_element_list(const FieldPtr& field, const std::string& text);

// Torsion defaults to -1 of order 2. Error(InvalidInput) without units.
UnitBasis unit_basis_of(const FieldInput& input, Bits bits);

// {"coeffs": [a_0, ..., a_d]} with integer entries.
BinaryForm parse_form(const nlohmann::json& doc);

nlohmann::json to_json(const ExponentVector& e);
nlohmann::json to_json(const SolutionTriple& s);
nlohmann::json to_json(const std::vector<SolutionTriple>& v);
nlohmann::json to_json(const BinaryForm& F);

}  // namespace thue::io
