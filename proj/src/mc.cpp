#include "repgerm/mc.hpp"

#include "repgerm/bch.hpp"

namespace repgerm {

MCCoeffs coeff_add(const MCCoeffs& x, const MCCoeffs& y) {
  MCCoeffs out = x;
  for (const auto& [i, v] : y) {
    auto it = out.find(i);
    if (it == out.end()) {
      out[i] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

MCCoeffs coeff_scale(const Rational& s, MCCoeffs x) {
  if (s.is_zero()) return {};
  for (auto& [i, v] : x) v.scale(s);
  return x;
}

bool coeff_is_zero(const MCCoeffs& x) {
  for (const auto& [i, v] : x)
    if (!v.is_zero()) return false;
  return true;
}

bool coeff_equal(const MCCoeffs& x, const MCCoeffs& y) {
  return coeff_is_zero(coeff_add(x, coeff_scale(Rational(-1), y)));
}

MCCoeffs coeff_bracket(const WDGLA& L, const MCCoeffs& x, const MCCoeffs& y) {
  MCCoeffs out;
  for (const auto& [i, xv] : x) {
    if (xv.is_zero()) continue;
    for (const auto& [j, yv] : y) {
      if (yv.is_zero()) continue;
      const auto& coeffs = L.bracket_coeffs(i, j);
      if (coeffs.empty()) continue;
      auto prod = xv * yv;
      if (prod.is_zero()) continue;
      for (const auto& [k, c] : coeffs) {
        auto term = prod;
        term.scale(c);
        auto it = out.find(k);
        if (it == out.end()) {
          out[k] = std::move(term);
        } else {
          it->second += term;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

MCCoeffs coeff_d(const WDGLA& L, const MCCoeffs& x) {
  MCCoeffs out;
  for (const auto& [j, v] : x) {
    if (v.is_zero()) continue;
    for (int i = 0; i < L.dim(); ++i) {
      const Rational& c = L.d().at(i, j);
      if (c.is_zero()) continue;
      auto term = v;
      term.scale(c);
      auto it = out.find(i);
      if (it == out.end()) {
        out[i] = std::move(term);
      } else {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

void validate_mc_element(const WDGLA& L, const MCElement& eta) {
  for (const auto& [i, v] : eta.coeff) {
    if (i < 0 || i >= L.dim()) throw std::invalid_argument("MC element: index out of range");
    if (L.elem(i).degree != 1 && !v.is_zero())
      throw std::invalid_argument("MC element: support must be degree 1");
    if (!v.in_maximal_ideal())
      throw std::invalid_argument("MC element: coefficient not in the maximal ideal");
  }
}

MCCoeffs mc_defect(const WDGLA& L, const MCElement& eta) {
  validate_mc_element(L, eta);
  auto d_eta = coeff_d(L, eta.coeff);
  auto sq = coeff_bracket(L, eta.coeff, eta.coeff);
  return coeff_add(d_eta, coeff_scale(Rational(1, 2), std::move(sq)));
}

bool is_mc(const WDGLA& L, const MCElement& eta) { return coeff_is_zero(mc_defect(L, eta)); }

MCElement gauge(const WDGLA& L, const MCCoeffs& alpha, const MCElement& eta) {
  validate_mc_element(L, eta);
  for (const auto& [i, v] : alpha) {
    if (L.elem(i).degree != 0 && !v.is_zero())
      throw std::invalid_argument("gauge: alpha must have degree-0 support");
    if (!v.in_maximal_ideal())
      throw std::invalid_argument("gauge: alpha coefficient not in the maximal ideal");
  }
  // seed = [alpha, eta] - d alpha; result = eta + sum ad(alpha)^n seed / (n+1)!
  MCCoeffs seed = coeff_add(coeff_bracket(L, alpha, eta.coeff),
                            coeff_scale(Rational(-1), coeff_d(L, alpha)));
  MCCoeffs acc = eta.coeff;
  MCCoeffs term = seed;
  Rational fact(1);  // (n+1)! at n = 0
  int order = eta.alg ? eta.alg->order() : 2;
  for (int n = 0; n <= order; ++n) {
    if (coeff_is_zero(term)) break;
    acc = coeff_add(acc, coeff_scale(fact.inverse(), term));
    term = coeff_bracket(L, alpha, term);
    fact *= Rational(n + 2);
  }
  return MCElement{eta.alg, std::move(acc)};
}

MCCoeffs bch(const WDGLA& L, const ArtinPtr& alg, const MCCoeffs& a, const MCCoeffs& b) {
  for (const auto& m : {a, b})
    for (const auto& [i, v] : m) {
      if (L.elem(i).degree != 0 && !v.is_zero())
        throw std::invalid_argument("bch: arguments must have degree-0 support");
      if (!v.in_maximal_ideal())
        throw std::invalid_argument("bch: coefficient not in the maximal ideal");
    }
  auto bracket = [&L](const MCCoeffs& x, const MCCoeffs& y) { return coeff_bracket(L, x, y); };
  auto axpy = [](MCCoeffs& acc, const Rational& c, const MCCoeffs& term) {
    acc = coeff_add(acc, coeff_scale(c, term));
  };
  return bch_dynkin<MCCoeffs>(a, b, alg->order() - 1, bracket, axpy);
}

}  // namespace repgerm
