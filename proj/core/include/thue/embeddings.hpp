#pragma once

#include <vector>

#include "thue/algnum.hpp"
#include "thue/poly.hpp"
#include "thue/real.hpp"

namespace thue {

struct Signature {
  int r1 = 0;  // real embeddings
  int r2 = 0;  // conjugate pairs

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Certified enclosures of all complex roots of a squarefree integer polynomial.
/// Every ball has the same radius and the balls are pairwise disjoint with a
/// gap of more than 8 radii, so each holds exactly one root.
///
/// Ordering: real roots ascending, then conjugate pairs by ascending real part
/// with the positive-imaginary member first.
struct EmbeddingSet {
  FieldPtr field;  // null when isolated from a bare polynomial
  std::vector<Ball> values;
  Real radius{Ball::kRadiusBits};
  Bits precision_bits = 0;
  Signature signature;
  // pairing[j] is the index of the conjugate of values[j] (itself when real).
  std::vector<int> pairing;

  int size() const { return static_cast<int>(values.size()); }
  bool is_real(int j) const { return pairing[static_cast<std::size_t>(j)] == j; }
};

// Throws Error(InvalidInput) for a constant or non-squarefree polynomial and
// Error(PrecisionExhausted) when separation cannot be certified at `bits`.
EmbeddingSet isolate_roots(const ZPoly& p, Bits bits);
EmbeddingSet compute_embeddings(const FieldPtr& field, Bits bits);

// sigma_j(a) for every embedding, with propagated radii.
std::vector<Ball> embed(const AlgElement& a, const EmbeddingSet& E);
// Evaluate a rational polynomial (lowest degree first) at a ball.
Ball evaluate(const QPoly& p, const Ball& z);

// max_j |sigma_j(a)|, rounded upward.
Real house(const AlgElement& a, const EmbeddingSet& E);
bool is_almost_totally_imaginary(const EmbeddingSet& E);

}  // namespace thue
