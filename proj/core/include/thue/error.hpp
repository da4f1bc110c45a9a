#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thue {

enum class ErrorCode {
  InvalidInput,
  FieldMismatch,
  DivisionByZero,
  ZeroElement,
  Reducible,
  PrecisionExhausted,
  RankDeficient,
  DegenerateTwist,
  ZeroConstantTerm,
  DegenerateIndex,
  RealRootPresent,
  CoincidentEmbeddings,
  NotAlmostTotallyImaginary,
  ProviderMissing,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every library failure is reported through this type; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace thue
