#pragma once

// Weighted homogeneous cones as first-class values: homogeneity checks,
// quadraticity, weight halving, realification, and functor-of-points
// membership over Artin algebras.

#include "repgerm/artin.hpp"
#include "repgerm/poly.hpp"

#include <string>
#include <vector>

namespace repgerm {

struct WeightedCone {
  std::vector<std::string> variables;
  std::vector<int> weights;             // positive
  std::vector<GPoly> relations;         // rational cones have all-real coefficients
  std::vector<long> declared_degrees;   // one per relation

  int nvars() const { return static_cast<int>(variables.size()); }
  bool is_real() const;

  /// Verifies weights positive and every relation homogeneous of its declared
  /// degree (> 0). Throws ValidationError otherwise.
  void validate() const;
};

/// Builds a cone, inferring declared degrees from the relations (each must be
/// homogeneous; zero relations are rejected since their degree is undefined).
WeightedCone make_cone(std::vector<std::string> variables, std::vector<int> weights,
                       std::vector<GPoly> relations);

struct HomogeneityReport {
  struct Entry {
    int relation = 0;
    bool homogeneous = false;
    long degree = -1;                 // weighted degree when homogeneous
    std::vector<int> offender;       // offending monomial otherwise
    bool matches_declared = false;
  };
  std::vector<Entry> entries;
  bool pass = true;
};
HomogeneityReport check_homogeneous(const WeightedCone& c);

/// True iff all variable weights are 1 and all relation degrees are 2.
/// Throws on inhomogeneous input.
bool is_quadratic(const WeightedCone& c);

/// Halves all weights and degrees; requires them even.
WeightedCone halve_weights(const WeightedCone& c);

/// Replace X_j by x_j + i y_j and split each relation into real and imaginary
/// parts: 2n variables, 2m relations, same weighted degrees.
WeightedCone realify(const WeightedCone& c);

/// Functor of points: membership of an assignment of m-elements.
bool functor_points(const WeightedCone& c, const ArtinPtr& alg,
                    const std::vector<ArtinElem<GaussianRational>>& assignment);

/// Real-algebra convenience overload.
bool functor_points(const WeightedCone& c, const ArtinPtr& alg,
                    const std::vector<ArtinElem<Rational>>& assignment);

struct ConeCompareReport {
  struct Mismatch {
    size_t sample = 0;
    int tower_index = 0;
    bool in_c1 = false;
    bool in_c2 = false;
  };
  std::vector<Mismatch> mismatches;
  size_t checks = 0;
  bool pass = true;
};

/// Sampled necessary condition for cone isomorphism: for each sample (an
/// assignment of m-elements to c2's variables) and each algebra in the tower,
/// membership of the dictionary-translated sample in c1 must match membership
/// of the sample in c2. The dictionary maps each c1 variable to a
/// weight-consistent linear form in c2's variables.
ConeCompareReport cone_compare_sampled(
    const WeightedCone& c1, const WeightedCone& c2,
    const std::vector<std::vector<GaussianRational>>& dictionary,
    const std::vector<ArtinPtr>& tower,
    const std::vector<std::vector<std::vector<GaussianRational>>>& samples);

/// Deterministic seeded samples for cone_compare_sampled / realify testing:
/// per sample and variable, coordinates of an m-element (coefficients for
/// each maximal-ideal monomial of the algebra).
std::vector<std::vector<std::vector<GaussianRational>>> cone_sample_plan(
    int nvars, const ArtinPtr& alg, size_t count, unsigned long long seed, bool complex_parts);

/// Assemble an assignment from per-variable monomial coefficients.
std::vector<ArtinElem<GaussianRational>> cone_assignment(
    const ArtinPtr& alg, const std::vector<std::vector<GaussianRational>>& coords);

}  // namespace repgerm
