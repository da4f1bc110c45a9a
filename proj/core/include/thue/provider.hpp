#pragma once

#include <memory>
#include <string>
#include <vector>

#include "thue/real.hpp"

namespace thue {

/// Lower-bound constant for linear forms in s logarithms of algebraic numbers
/// lying in a field of degree <= D. Implementations must be positive and
/// nondecreasing in both arguments.
class LinFormBoundProvider {
 public:
  virtual ~LinFormBoundProvider() = default;
  virtual Real kappa(int s, int D) const = 0;
  virtual std::string name() const = 0;
};

// 2^(6s+20) s^4.5 D^(s+2) (1 + log D), rounded upward.
class MatveevTypeProvider final : public LinFormBoundProvider {
 public:
  explicit MatveevTypeProvider(Bits bits = 128) : bits_(bits) {}
  Real kappa(int s, int D) const override;
  std::string name() const override { return "matveev-type"; }

 private:
  Bits bits_;
};

/// Constants read from a table; kappa(s, D) is the smallest entry with
/// s' >= s and D' >= D. Error(ProviderMissing) when none applies.
class TableProvider final : public LinFormBoundProvider {
 public:
  struct Entry {
    int s;
    int D;
    Real kappa;
  };

  TableProvider(std::vector<Entry> entries, std::string label);
  // Reads {"entries": [{"s": .., "D": .., "kappa": "decimal"}]}.
  static TableProvider from_json_file(const std::string& path, Bits bits = 128);

  Real kappa(int s, int D) const override;
  std::string name() const override { return label_; }

 private:
  std::vector<Entry> entries_;
  std::string label_;
};

// Constant for |g_1^c_1 ... g_s^c_s - 1| when the largest height is H_s:
// 2 pi (D + 2 pi)^s kappa(s+1, D) (1 + log(4 s D)/log 2) + 1, rounded upward.
Real kappa_fll1(const LinFormBoundProvider& provider, int s, int D, Bits bits = 128);
// Same shape for the plain max|c_j| version.
Real kappa_fll2(const LinFormBoundProvider& provider, int s, int D, Bits bits = 128);

}  // namespace thue
