#pragma once

// Linear-algebra layer of mixed Hodge theory: weight filtrations, purity,
// the Deligne splitting, and the Dec filtration on filtered complexes.

#include "repgerm/exact.hpp"
#include "repgerm/linalg.hpp"

#include <map>
#include <vector>

namespace repgerm {

/// V over Q with an increasing filtration W (rational) and a decreasing
/// filtration F on V (x) Q(i). Filtration values are step functions of the
/// stored jump levels.
struct FilteredVectorSpace {
  int dim = 0;
  std::vector<std::pair<int, Subspace<Rational>>> W;          // ascending levels
  std::vector<std::pair<int, Subspace<GaussianRational>>> F;  // ascending levels

  /// Nesting, exhaustiveness of W (last = full), decreasingness of F.
  void validate() const;

  Subspace<Rational> w_at(int n) const;
  Subspace<GaussianRational> wc_at(int n) const;  // complexified W
  Subspace<GaussianRational> f_at(int p) const;
  int w_min() const { return W.empty() ? 0 : W.front().first; }
  int w_max() const { return W.empty() ? 0 : W.back().first; }
  int f_min() const { return F.empty() ? 0 : F.front().first; }
  int f_max() const { return F.empty() ? 0 : F.back().first; }
};

/// dim Gr_n^W per weight n (only nonzero entries).
std::map<int, int> gr_weight(const FilteredVectorSpace& v);

/// Gr_m^W = 0 for all m != n. The zero space is pure of every weight.
bool is_pure(const FilteredVectorSpace& v, int n);

struct DeligneSplitting {
  // Nonzero pieces I^{p,q} of V_C.
  std::map<std::pair<int, int>, Subspace<GaussianRational>> pieces;
  int dim_at(int p, int q) const {
    auto it = pieces.find({p, q});
    return it == pieces.end() ? 0 : it->second.dim();
  }
};

/// The bifiltered splitting
/// I^{p,q} = F^p ∩ W_{p+q} ∩ (conj(F^q) ∩ W_{p+q} + sum_{j>=2} conj(F^{q-j+1}) ∩ W_{p+q-j}).
/// Requires (W, F) to be a mixed Hodge structure (opposed filtrations on each
/// graded piece); throws ValidationError locating the failing weight.
/// Verifies the direct-sum recombination of W and F before returning.
DeligneSplitting deligne_splitting(const FilteredVectorSpace& v);

// ---------------------------------------------------------------------------

/// Cochain complex in consecutive degrees with a filtration W on each piece,
/// preserved by d.
struct FilteredComplex {
  int first_degree = 0;
  std::vector<int> dims;                                            // per degree
  std::vector<Mat<Rational>> d;                                     // d[k]: deg k -> deg k+1
  std::vector<std::vector<std::pair<int, Subspace<Rational>>>> W;   // per degree

  int degrees() const { return static_cast<int>(dims.size()); }
  void validate() const;  // d^2 = 0, shapes, nesting, d(W_i) subset W_i
  Subspace<Rational> w_at(int k, int level) const;
  int w_min(int k) const;
  int w_max(int k) const;
};

struct DecResult {
  FilteredComplex dec;            // same complex, Dec W filtration
  bool cohomology_identity = true;  // Dec W_i H^n = W_{i-n} H^n, verified
};

/// Dec W_i(A^n) = { x in W_{i-n}(A^n) | dx in W_{i-n-1}(A^{n+1}) }.
DecResult dec_filtration(const FilteredComplex& c);

struct WeightSupport {
  std::vector<int> weights;  // i with Gr_i^W H^n != 0
  bool conforms = true;      // {1,2} for n = 1, {2,3,4} for n = 2, else vacuous
};
WeightSupport weight_support(const FilteredComplex& c, int n);

/// Induced weight filtration dimensions on H^n: level -> dim W_level H^n.
std::map<int, int> cohomology_filtration_dims(const FilteredComplex& c, int n);

// JSON file formats (implemented in io.cpp).
FilteredVectorSpace filtered_space_from_json(const std::string& text);
std::string filtered_space_to_json(const FilteredVectorSpace& v);
FilteredComplex filtered_complex_from_json(const std::string& text);
std::string filtered_complex_to_json(const FilteredComplex& c);

}  // namespace repgerm
