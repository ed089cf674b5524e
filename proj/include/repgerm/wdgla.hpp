#pragma once

// Finite-dimensional bigraded differential graded Lie algebras over Q:
// degree x weight grading, axiom checks, bigraded cohomology, sub/quotient
// constructions, morphisms and 1-quasi-isomorphism tests.

#include "repgerm/exact.hpp"
#include "repgerm/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repgerm {

struct WBasisElement {
  std::string name;
  int degree = 0;  // >= 0
  int weight = 0;  // >= 0
};

/// Abstract Lie algebra by structure constants (no matrix realization).
struct AbstractLie {
  std::string name;
  int dim = 0;
  // (i,j) -> sparse coefficients of [b_i, b_j]; both orders stored.
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> bracket;

  static AbstractLie abelian(int n);
  static AbstractLie sl2();
  static AbstractLie heisenberg();  // [e1,e2] = e3 central
  static AbstractLie solvable2();   // [e1,e2] = e2

  std::vector<Rational> bracket_vec(const std::vector<Rational>& u,
                                    const std::vector<Rational>& v) const;
  bool check_structure() const;  // antisymmetry + Jacobi
};

using SparseVec = std::vector<std::pair<int, Rational>>;

class WDGLA {
public:
  WDGLA() = default;
  /// `raw_bracket` may list each unordered pair once; the graded-antisymmetric
  /// counterpart is filled in automatically (and consistency is checked when
  /// both orders are present).
  WDGLA(std::vector<WBasisElement> basis, Mat<Rational> d,
        std::map<std::pair<int, int>, SparseVec> raw_bracket);

  int dim() const { return static_cast<int>(basis_.size()); }
  const WBasisElement& elem(int i) const { return basis_[static_cast<size_t>(i)]; }
  const std::vector<WBasisElement>& basis() const { return basis_; }
  const Mat<Rational>& d() const { return d_; }
  const SparseVec& bracket_coeffs(int i, int j) const;
  const std::map<std::pair<int, int>, SparseVec>& bracket() const { return bracket_; }

  int index_of(const std::string& name) const;  // -1 when absent

  std::vector<Rational> bracket_vec(const std::vector<Rational>& x,
                                    const std::vector<Rational>& y) const;
  std::vector<Rational> d_apply(const std::vector<Rational>& x) const { return d_.apply(x); }

  /// Basis indices of the (degree, weight) component, ascending.
  std::vector<int> component(int degree, int weight) const;
  std::vector<int> degree_indices(int degree) const;
  std::vector<int> weight_indices(int weight) const;
  int max_degree() const;
  int max_weight() const;

  // Optional finite-group action (names -> matrices) and augmentation.
  std::map<std::string, Mat<Rational>> action;
  struct Augmentation {
    AbstractLie target;
    Mat<Rational> matrix;  // target.dim x L.dim, supported on degree-0 columns
    bool declared_surjective = false;
  };
  std::optional<Augmentation> augmentation;

private:
  std::vector<WBasisElement> basis_;
  Mat<Rational> d_;
  std::map<std::pair<int, int>, SparseVec> bracket_;
};

// ---------------------------------------------------------------------------

struct AxiomViolation {
  std::string axiom;    // "d_squared", "antisymmetry", "jacobi", "leibniz",
                        // "degree_grading", "weight_grading", "action"
  std::string detail;   // located witness, human-readable
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Verifies every DGLA axiom exactly on all basis tuples, plus the bigrading
/// compatibilities and (when present) that the action is by automorphisms.
AxiomReport check_dgla_axioms(const WDGLA& L);

// ---------------------------------------------------------------------------

struct CohomologyData {
  std::map<std::pair<int, int>, int> dims;  // (degree, weight) -> dim H
  std::map<std::pair<int, int>, std::vector<std::vector<Rational>>> reps;  // global coords
  std::map<int, Subspace<Rational>> Z_by_degree;  // cocycles, global coords
  std::map<int, Subspace<Rational>> B_by_degree;  // coboundaries

  int dim_at(int degree, int weight) const {
    auto it = dims.find({degree, weight});
    return it == dims.end() ? 0 : it->second;
  }
  int dim_degree(int degree) const {
    int s = 0;
    for (const auto& [k, v] : dims)
      if (k.first == degree) s += v;
    return s;
  }
  /// Weights carrying nonzero cohomology in the given degree.
  std::vector<int> weight_support(int degree) const {
    std::vector<int> w;
    for (const auto& [k, v] : dims)
      if (k.first == degree && v > 0) w.push_back(k.second);
    return w;
  }
};

CohomologyData cohomology(const WDGLA& L);

// ---------------------------------------------------------------------------

struct DGLAMorphism {
  WDGLA source;
  WDGLA target;
  Mat<Rational> matrix;  // target.dim x source.dim
};

struct MorphismReport {
  bool is_morphism = false;
  std::string failure;  // when not a morphism
  bool h0_iso = false, h1_iso = false, h2_injective = false;
  bool one_quasi_iso() const { return is_morphism && h0_iso && h1_iso && h2_injective; }
};

/// Verifies the morphism axioms (degree- and weight-preserving, commutes with
/// d and brackets), then computes the induced maps on H^0, H^1, H^2.
MorphismReport analyze_morphism(const DGLAMorphism& phi);
bool is_one_quasi_iso(const DGLAMorphism& phi);

// ---------------------------------------------------------------------------

/// Sub-DGLA spanned by the given vectors (must be homogeneous per component
/// and closed under d and bracket; throws otherwise). Returns the sub-algebra
/// together with the inclusion matrix (L.dim x sub.dim).
std::pair<WDGLA, Mat<Rational>> sub_dgla(const WDGLA& L,
                                         const std::vector<std::vector<Rational>>& vectors,
                                         const std::string& name_prefix);

/// Quotient by a bigraded ideal given per component; verifies d- and
/// bracket-stability. Returns the quotient and the projection morphism.
std::pair<WDGLA, DGLAMorphism> quotient_dgla(
    const WDGLA& L, const std::map<std::pair<int, int>, Subspace<Rational>>& ideal,
    const std::string& name_prefix);

}  // namespace repgerm
