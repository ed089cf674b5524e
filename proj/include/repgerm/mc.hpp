#pragma once

// Maurer-Cartan elements of L^1 (x) m, the gauge action of exp(L^0 (x) m),
// and BCH composition in the gauge group.

#include "repgerm/artin.hpp"
#include "repgerm/wdgla.hpp"

#include <map>

namespace repgerm {

/// Element of L (x) m with homogeneous-degree support: basis index ->
/// coefficient in the maximal ideal. Missing keys are zero.
using MCCoeffs = std::map<int, ArtinElem<Rational>>;

struct MCElement {
  ArtinPtr alg;
  MCCoeffs coeff;  // degree-1 indices only
};

/// Validates degree-1 support and m-valued coefficients.
void validate_mc_element(const WDGLA& L, const MCElement& eta);

/// dh + (1/2)[h,h] as coefficients on the degree-2 basis lines.
MCCoeffs mc_defect(const WDGLA& L, const MCElement& eta);
bool is_mc(const WDGLA& L, const MCElement& eta);

/// exp(alpha).eta = eta + sum_{n>=0} ad(alpha)^n / (n+1)! ([alpha,eta] - d alpha);
/// alpha has degree-0 support with m-valued coefficients.
MCElement gauge(const WDGLA& L, const MCCoeffs& alpha, const MCElement& eta);

/// BCH product in the nilpotent Lie algebra L^0 (x) m.
MCCoeffs bch(const WDGLA& L, const ArtinPtr& alg, const MCCoeffs& a, const MCCoeffs& b);

// Shared helpers for coefficient maps.
MCCoeffs coeff_bracket(const WDGLA& L, const MCCoeffs& x, const MCCoeffs& y);
MCCoeffs coeff_d(const WDGLA& L, const MCCoeffs& x);
MCCoeffs coeff_add(const MCCoeffs& x, const MCCoeffs& y);
MCCoeffs coeff_scale(const Rational& s, MCCoeffs x);
bool coeff_is_zero(const MCCoeffs& x);
bool coeff_equal(const MCCoeffs& x, const MCCoeffs& y);

}  // namespace repgerm
