#pragma once

// Weight axioms, the truncation ideal I = L^1_4 + d(L^1_4) + L_{>=5}, and the
// reduction of a truncated algebra to its weighted quadratic cone.

#include "repgerm/cones.hpp"
#include "repgerm/wdgla.hpp"

#include <optional>
#include <vector>

namespace repgerm {

struct WeightAxiomReport {
  bool weight0_degree0_match = false;  // L_0 and L^0 coincide (as index sets)
  std::vector<int> h1_support;
  std::vector<int> h2_support;
  bool h1_ok = false;  // support within {1,2}
  bool h2_ok = false;  // support within {2,3,4}
  struct Violation {
    int degree, weight, dim;
  };
  std::vector<Violation> violations;
  bool pass() const { return weight0_degree0_match && h1_ok && h2_ok; }
};

/// Weight-grading axioms: the weight-0 part sits in degree 0 and vice versa,
/// and the induced weights on H^1 / H^2 are within {1,2} / {2,3,4}.
WeightAxiomReport check_weight_axioms(const WDGLA& L);

struct TruncationResult {
  WDGLA Q;
  DGLAMorphism pi;
  bool pi_is_one_quasi_iso = false;
};

/// Quotient by I = L^1_4 + d(L^1_4) + L_{>=5}. Requires L^0 = 0, L_0 = 0 and
/// the weight axioms; verifies I is an ideal and that pi is a
/// 1-quasi-isomorphism.
TruncationResult truncate(const WDGLA& L);

/// Refusal carrying the located witness (a nonzero class, global coords).
class ReduceRefusal : public ValidationError {
public:
  ReduceRefusal(std::string msg, std::string witness_name, std::vector<Rational> witness)
      : ValidationError(std::move(msg)),
        witness_name(std::move(witness_name)),
        witness(std::move(witness)) {}
  std::string witness_name;
  std::vector<Rational> witness;
};

struct ReduceResult {
  WeightedCone cone;  // variables of weight 1, relations of weight 2 (halved)
  std::vector<std::vector<Rational>> z21_basis;  // global coords of Z^1_2
  bool q11_zero = false;        // implied consequence, checked
  bool eta3_forced_zero = false;  // ker(d) in Q^1_3 vanishes, checked
  int dropped_zero_relations = 0;
};

/// The main reduction: cone = { (1/2)[eta_2, eta_2] = 0, eta_2 in Z^1_2 },
/// relations doubled to clear the 1/2 and weights halved on output.
/// Refuses (ReduceRefusal) when H^1(Q_1) != 0 (purity surrogate) or when
/// d(Q^1_1) != 0 (the decomposability conclusion fails).
ReduceResult reduce_to_quadratic(const WDGLA& Q);

}  // namespace repgerm
