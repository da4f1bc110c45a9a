#pragma once

#include <array>
#include <utility>
#include <vector>

#include "thue/embeddings.hpp"
#include "thue/forms.hpp"
#include "thue/real.hpp"

namespace thue {

struct FixedFormBox {
  Real y_bound{Ball::kRadiusBits};  // upper bounds, rounded upward
  Real x_bound{Ball::kRadiusBits};
};

// Box containing every solution of |F(x,y)| <= m when F(X,1) has no real
// root: |y| <= |a_0|^(-1/d) prod_{Im a_j > 0} |Im a_j|^(-2/d) m^(1/d) and
// |x| <= max(2 max|a_j| y_bound, 2 (m/|a_0|)^(1/d)).
// Error(RealRootPresent) if F(X,1) has a real root or a_0 = 0.
FixedFormBox lemma3_bounds(const BinaryForm& F, const mpz_class& m, Bits bits = 128);

// Every (x, y) in the box with |F(x,y)| <= m and x y != 0 (or, with
// include_axes, every nonzero pair), sorted by (x, y).
std::vector<std::pair<mpz_class, mpz_class>> solve_fixed_totally_imaginary(const BinaryForm& F, const mpz_class& m,
                                                                           bool include_axes = false,
                                                                           Bits bits = 128);

struct EliminatedXY {
  Ball y;
  Ball x;
};

// Recovers (x, y) from beta = x - theta y at two embeddings.
// Error(CoincidentEmbeddings) if the two theta values are not separated.
EliminatedXY eliminate_xy(const std::array<Ball, 2>& beta, const std::array<Ball, 2>& theta);

// Upper bound for |u1 v2 - u1 v3 + u2 v3 - u2 v1 + u3 v1 - u3 v2|.
Real siegel_residual(const std::array<Ball, 3>& u, const std::array<Ball, 3>& v);

struct PrivilegedEmbeddings {
  int sigma_a = 0;  // max |phi(alpha eps)|
  int tau_a = 0;    // min |phi(alpha eps)|
  int sigma_b = 0;  // max |phi(beta)|
  int tau_b = 0;    // min |phi(beta)|
  bool tau_b_nonunique = false;  // another embedding attains |tau_b(beta)| within radius
  bool generic_a = false;        // tau_a not in {sigma_a, conj sigma_a}
  bool generic_b = false;        // tau_b not in {sigma_b, conj sigma_b}
};

// Ties between conjugate embeddings resolve to the lower index; any other tie
// for sigma_a, tau_a, sigma_b raises Error(PrecisionExhausted).
PrivilegedEmbeddings select_privileged(const std::vector<Ball>& theta, const std::vector<Ball>& beta,
                                       const std::vector<int>& pairing);

// Index of the embedding phi outside {a, b} maximising the certified lower
// bound of |theta_phi - theta_b|; -1 if the degree leaves no choice.
int third_embedding(const std::vector<Ball>& theta, int a, int b);

}  // namespace thue
