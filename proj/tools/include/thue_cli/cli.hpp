#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thue/solve.hpp"
#include "thue/field_io.hpp"
#include "thue/stender.hpp"

namespace thue::cli {

enum class Command {
  FieldCheck,
  Embeddings,
  Height,
  Twist,
  StenderCoeffs,
  StenderVerify,
  StenderSolve,
  SolveFixed,
  SolveFamily,
  Bounds,
  Oracle,
};

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kPrecision = 3 };

inline constexpr Bits kDefaultBits = 128;
inline constexpr Bits kMaxBits = 4096;

struct RunConfig {
  Command command = Command::FieldCheck;
  std::string input_path;  // field file, or form input for solve-fixed
  std::optional<stender::Params> stender;  // replaces input_path for family commands
  Bits precision_bits = kDefaultBits;
  std::string output;  // empty: stdout
  bool pretty = false;
  SearchCaps caps;
  std::string m = "1";
  long n = 0;
  long nmax = 15;
  std::string element;
  std::string exponents;
  int torsion = 0;
  std::string provider = "default";
  std::string provider_file;
};

struct RunResult {
  int exit_code = kOk;
  nlohmann::json document;
  Bits bits_used = kDefaultBits;
};

// Runs one command, doubling the working precision on PrecisionExhausted up
// to kMaxBits. Library errors map to exit 2, exhausted precision to exit 3.
RunResult run(const RunConfig& config);

// Command output at a fixed precision; throws the library errors unchanged.
nlohmann::json execute(const RunConfig& config, Bits bits);

// Brute force over the full box |x|, |y| <= caps.xy and every exponent vector
// with entries in [-caps.A, caps.A]. Forms come from rounded embedding
// products, so nothing is shared with the solvers except evaluate().
// Degenerate exponents (alpha * eps of lower degree) are appended to `skipped`.
std::vector<SolutionTriple> oracle_search(const io::FieldInput& input, const mpz_class& m, const SearchCaps& caps,
                                          Bits bits, std::vector<ExponentVector>* skipped = nullptr);

// Field file of the Stender base field: alpha = eps = generator, one unit.
io::FieldInput stender_field_input(const stender::Params& p);

// Human-readable rendering used by --pretty.
std::string render_pretty(const nlohmann::json& doc);

// Whole command line (argv without the program name). Returns the exit code.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thue::cli
