#pragma once

#include <optional>
#include <vector>

#include "thue/algnum.hpp"
#include "thue/embeddings.hpp"
#include "thue/real.hpp"

namespace thue {

using RealMatrix = std::vector<std::vector<Real>>;

/// Fundamental units and torsion of K, validated on construction.
/// The units are supplied by the caller; this type only checks them.
struct UnitBasis {
  FieldPtr field;
  std::vector<AlgElement> fundamental_units;
  AlgElement torsion_generator;
  int torsion_order = 2;
  EmbeddingSet embeddings;
  RealMatrix log_matrix;  // d x r, entry (j, i) = log|sigma_j(eps_i)|
  Real regulator{Ball::kRadiusBits};
  std::optional<Real> regulator_given;
  bool regulator_consistent = true;  // |computed - given| <= 1% of given

  int rank() const { return static_cast<int>(fundamental_units.size()); }
  int degree() const { return field->degree(); }
  Bits bits() const { return embeddings.precision_bits; }
};

// Throws Error(InvalidInput) when a unit has norm other than +-1, the rank
// does not match the signature or the torsion data is wrong, and
// Error(RankDeficient) when the log matrix has rank < r.
UnitBasis make_unit_basis(const FieldPtr& field, std::vector<AlgElement> units, AlgElement torsion_generator,
                          int torsion_order, std::optional<Real> regulator = std::nullopt, Bits bits = 128);

struct ExponentVector {
  int torsion_index = 0;
  std::vector<long> exponents;

  // max{1, |c_1|, ..., |c_r|}
  long C() const;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

AlgElement unit_from_exponents(const UnitBasis& B, const ExponentVector& e);

// log|sigma_j(a)| for each embedding, at the basis precision.
std::vector<Real> log_embeddings(const AlgElement& a, const UnitBasis& B);

// c1 = sum_i log house(eps_i), rounded upward.
Real house_bound_constant(const UnitBasis& B);

struct EmbeddingLemma {
  RealMatrix left_inverse;  // r x d, rows sum to zero, left_inverse * log_matrix = I
  Real kappa3{Ball::kRadiusBits};
  Real kappa4{Ball::kRadiusBits};
};

// kappa4 with max_phi log|phi(g)| >= kappa4 C and min_phi log|phi(g)| <= -kappa4 C
// for every unit g of exponent size C. Rounded downward.
EmbeddingLemma embedding_lemma(const UnitBasis& B);
Real embedding_lemma_constant(const UnitBasis& B);

struct Reduction {
  ExponentVector exponents;  // the unit eps applied to gamma
  AlgElement rho;            // eps * gamma
  AlgElement eta;            // eps^{-1}, so gamma = rho * eta
  Real achieved{Ball::kRadiusBits};  // max_j |log(m^{-1/d} |sigma_j(rho)|)|, upward
  Real c_round{Ball::kRadiusBits};   // (1/2) max_j sum_i |log|sigma_j(eps_i)||
  Real c2bis{Ball::kRadiusBits};     // max_j |sigma_j(rho)| <= m^{c2bis} when m >= 2
};

// Balances the embeddings of gamma against m^{1/d} using the unit lattice.
// Requires gamma != 0 (Error(ZeroElement)) and |norm(gamma)| <= m.
Reduction reduce_by_units(const AlgElement& gamma, const UnitBasis& B, const mpz_class& m);

// (1/2) max_j sum_i |log|sigma_j(eps_i)||: the worst-case cost of rounding one
// lattice coordinate by at most 1/2.
Real rounding_constant(const UnitBasis& B);

}  // namespace thue
