#pragma once

// Finite graded-commutative differential algebras and the tensor-product
// construction A (x) g of a commutative dga with a Lie algebra.

#include "repgerm/wdgla.hpp"

#include <map>
#include <string>
#include <vector>

namespace repgerm {

/// Finite-dimensional graded-commutative algebra with differential; product
/// structure constants are stored for all ordered pairs.
struct GradedAlgebra {
  std::vector<WBasisElement> basis;
  std::map<std::pair<int, int>, SparseVec> product;
  Mat<Rational> d;

  int dim() const { return static_cast<int>(basis.size()); }
  const SparseVec& product_coeffs(int i, int j) const;
  std::vector<Rational> multiply(const std::vector<Rational>& x,
                                 const std::vector<Rational>& y) const;

  /// Graded commutativity, associativity, Leibniz, d^2 = 0, grading
  /// additivity; empty report means pass.
  AxiomReport check() const;
};

/// Generator of a free graded-commutative dga. `d_word` lists generator
/// indices whose product is the differential (empty = closed); the product
/// must have degree + 1 and the same weight.
struct DGAGenerator {
  std::string name;
  int degree = 1;
  int weight = 0;
  std::vector<int> d_word;
};

/// Free graded-commutative algebra on the generators (exterior on odd
/// degrees, polynomial on even), truncated above max_degree.
GradedAlgebra free_dga(const std::vector<DGAGenerator>& gens, int max_degree);

/// Functions on an n-point set: n orthogonal idempotents in degree 0.
GradedAlgebra functions_algebra(int npoints);

/// Graded tensor product with Koszul signs.
GradedAlgebra algebra_tensor(const GradedAlgebra& a, const GradedAlgebra& b);

/// Non-unital subalgebra of positive-degree elements (the augmentation ideal
/// of a connected algebra).
GradedAlgebra positive_part(const GradedAlgebra& a);

/// A (x) g with bracket (a^b) (x) [u,v] and differential da (x) u.
/// Verifies A's axioms; the result passes check_dgla_axioms by construction.
WDGLA tensor_dgla(const GradedAlgebra& a, const AbstractLie& g);

/// Index of basis element (a_i, u_k) in tensor_dgla's basis order.
inline int tensor_index(const GradedAlgebra& a, const AbstractLie& g, int i, int k) {
  (void)a;
  return i * g.dim + k;
}

}  // namespace repgerm
