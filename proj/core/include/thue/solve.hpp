#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thue/bounds.hpp"
#include "thue/forms.hpp"
#include "thue/units.hpp"

namespace thue {

struct SearchCaps {
  long xy = 50;              // |x|, |y| <= xy
  long A = 6;                // |a_i| <= A for every unit exponent
  bool all_torsion = false;  // also twist by every torsion power
};

struct SolutionTriple {
  mpz_class x;
  mpz_class y;
  ExponentVector epsilon;
  mpz_class value;  // F_eps(x, y)

  friend bool operator==(const SolutionTriple& a, const SolutionTriple& b) {
    return a.x == b.x && a.y == b.y && a.epsilon == b.epsilon && a.value == b.value;
  }
};

// Canonical order: exponent vector, then x, then y.
bool canonical_less(const SolutionTriple& a, const SolutionTriple& b);
void sort_canonical(std::vector<SolutionTriple>& v);

enum class Completeness { Certified, Capped };
std::string to_string(Completeness c);

struct FamilySolveResult {
  std::vector<SolutionTriple> solutions;
  Completeness completeness = Completeness::Capped;
  std::vector<ExponentVector> skipped;  // exponents whose twist is degenerate
  std::optional<BoundReport> report;
};

// All exponent vectors with every |a_i| <= caps.A (torsion index 0 unless
// caps.all_torsion), in canonical order.
std::vector<ExponentVector> exponent_box(const UnitBasis& B, const SearchCaps& caps);

// Enumerates |F_eps(x,y)| <= m, x y != 0, inside the caps and the bound
// report. Pairs with |x| > |y| are found through the reciprocal form and
// mapped back. Completeness is certified only when the caps cover the report.
FamilySolveResult solve_family_general(const UnitBasis& B, const AlgElement& alpha, const mpz_class& m,
                                       const SearchCaps& caps, const LinFormBoundProvider* provider);

}  // namespace thue
