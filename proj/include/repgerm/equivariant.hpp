#pragma once

// Finite-group actions on WDGLAs: invariants via the averaging projector,
// equality of invariants-then-cohomology with cohomology-then-fixed-points,
// and augmentation kernels.

#include "repgerm/wdgla.hpp"

#include <map>
#include <vector>

namespace repgerm {

/// Multiplicative closure of the action matrices (identity included).
/// Throws when an element is not a bigraded DGLA automorphism or when the
/// closure exceeds `bound`.
std::vector<Mat<Rational>> action_group(const WDGLA& L, size_t bound = 1024);

/// Sub-DGLA of fixed vectors, computed with the averaging projector
/// (1/|Phi|) sum_gamma gamma; closed under d and bracket by construction.
WDGLA invariants(const WDGLA& L);

/// Same, returning the inclusion matrix (L.dim x sub.dim) alongside.
std::pair<WDGLA, Mat<Rational>> invariants_with_inclusion(const WDGLA& L);

/// dim (H^j_i(L))^Phi per component: the rank of the projector induced on
/// cohomology. Compared against cohomology(invariants(L)) in the lemma tests.
std::map<std::pair<int, int>, int> fixed_cohomology_dims(const WDGLA& L);

struct AugmentationKernelResult {
  WDGLA kernel;
  bool surjective = false;  // rank of eps equals dim of the target
  int h0_dim = 0;           // dim H^0 of the kernel (0 when eps is surjective
                            // and H^0(L) maps isomorphically)
};

/// Sub-DGLA with degree-0 part ker(eps); requires L.augmentation.
/// eps must be weight-graded (kernel computed per weight block).
AugmentationKernelResult augmentation_kernel(const WDGLA& L);

}  // namespace repgerm
