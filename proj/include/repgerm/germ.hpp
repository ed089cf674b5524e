#pragma once

// The analytic germ of Hom(Gamma, G) at rho: presentation cochain complex,
// tangent space Z^1, the explicit quadratic cone from the second-order
// obstruction, and a brute-force deformation oracle over Q[t]/t^(c+1).

#include "repgerm/group.hpp"
#include "repgerm/linalg.hpp"
#include "repgerm/poly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace repgerm {

struct CochainData {
  int lie_dim = 0;
  int ngens = 0;
  int nrels = 0;
  Mat<Rational> d0;  // (n*l) x l: X -> (X - Ad(rho(g_i)) X)_i
  Mat<Rational> d1;  // (m*l) x (n*l): Fox matrix of relators through Ad(rho)
};

/// Builds the complex and verifies d1 * d0 = 0.
CochainData presentation_complex(const Representation& rep);

struct CocycleSpaces {
  Subspace<Rational> Z1;  // ker d1
  Subspace<Rational> B1;  // im d0
  int z1 = 0, b1 = 0, h1 = 0;
};
CocycleSpaces cocycle_spaces(const CochainData& c);

struct QuadraticConeResult {
  CocycleSpaces spaces;
  Subspace<Rational> im_d1;
  std::vector<int> complement_coords;  // non-pivot C^2 coordinates of im d1
  int obstruction_dim = 0;             // dim C^2 / im d1
  /// Homogeneous quadratics in the Z^1 coordinates x1..x_{z1}; identically
  /// zero components dropped, primitive integer normalization.
  std::vector<QPoly> relations;
  std::vector<std::string> variable_names;

  /// Membership of a Z^1 point (ambient coordinates in Q^{n*l}).
  bool contains(const std::vector<Rational>& u) const;
  bool contains_coords(const std::vector<Rational>& coords) const;
};

/// Second-order obstruction of u in Z^1: the t^2 coefficient of the relator
/// stack evaluated at g -> exp(t u_g) rho(g) over Q[t]/t^3, in C^2 coordinates.
std::vector<Rational> obstruction_eval(const Representation& rep, const CochainData& c,
                                       const std::vector<Rational>& u);

QuadraticConeResult quadratic_cone(const Representation& rep);

// ---------------------------------------------------------------------------
// Order-by-order lifting. "Lift order k" means a homomorphism into
// G(Q[t]/t^(k+1)) whose first-order term is the given cocycle, so order 1 is
// exactly d1 u = 0 and order 2 is exactly cone membership.

struct LiftObstruction {
  int order = 0;                  // the order that could not be reached
  std::vector<Rational> residue;  // error reduced mod im d1, in C^2 coordinates
  /// Through order 3 the joint layer system is affine-linear, so
  /// infeasibility is a proof; beyond that it is a failed Newton search.
  bool certified = true;
};

struct LiftCertificate {
  int order = 0;                               // reached order
  std::vector<std::vector<Rational>> layers;   // layers[j] = t^(j+1) coefficients
  std::optional<LiftObstruction> obstruction;  // present when blocked below the cap
};

/// One greedy step: extend layers valid to order k (layers.size() == k) by a
/// single new layer, or report the obstruction class at order k+1. This
/// extends the *given* partial solution; deciding whether some other history
/// lifts is lift_order's job.
std::variant<std::vector<Rational>, LiftObstruction> lift_step(
    const Representation& rep, const CochainData& c,
    const std::vector<std::vector<Rational>>& layers);

/// Highest order at which the given layers define a homomorphism.
int lift_validate(const Representation& rep, const CochainData& c,
                  const std::vector<std::vector<Rational>>& layers, int order_cap);

/// Maximal lift order of tangent u up to max_order, searching over all
/// correction layers (joint affine solve through order 3, exact Newton above).
LiftCertificate lift_order(const Representation& rep, const CochainData& c,
                           const std::vector<Rational>& u, int max_order);

// ---------------------------------------------------------------------------

struct OracleSample {
  std::vector<Rational> coeffs;  // coefficients over the Z^1 echelon basis
  bool in_cone = false;
  int lift_order = 0;
  std::optional<std::vector<Rational>> obstruction;
  bool disagreement = false;
};

struct OracleReport {
  QuadraticConeResult cone;
  int order = 0;
  std::vector<OracleSample> samples;
  int disagreements = 0;
  bool all_agree() const { return disagreements == 0; }
};

/// Compares cone membership with maximal lift order on each sample.
/// Samples are Z^1 points given by coefficient vectors over the echelon basis
/// of Z^1. Disagreement: (in cone and lift order < order) or (not in cone and
/// lift order >= 2).
OracleReport deformation_oracle(const Representation& rep, int order,
                                const std::vector<std::vector<Rational>>& coeff_samples);

/// Deterministic sample plan: the {-1,0,1} grid over the Z^1 basis coefficients
/// enumerated first (up to `target` or exhausted), then seeded random small
/// rational points to fill up to `target`.
std::vector<std::vector<Rational>> oracle_sample_plan(int z1, size_t target,
                                                      unsigned long long seed);

/// Convenience: plan + oracle. `order` must be >= 3 per the CLI contract.
OracleReport deformation_oracle_auto(const Representation& rep, int order, size_t target,
                                     unsigned long long seed);

/// Validating entry point for explicit ambient samples (throws unless each
/// sample lies in Z^1).
OracleReport deformation_oracle_points(const Representation& rep, int order,
                                       const std::vector<std::vector<Rational>>& points);

}  // namespace repgerm
