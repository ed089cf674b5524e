#include "repgerm/cones.hpp"

#include <random>

namespace repgerm {

bool WeightedCone::is_real() const {
  for (const auto& p : relations)
    for (const auto& [m, c] : p.terms())
      if (!c.is_real()) return false;
  return true;
}

void WeightedCone::validate() const {
  if (weights.size() != variables.size())
    throw ValidationError("cone: weight count does not match variable count");
  for (int w : weights)
    if (w <= 0) throw ValidationError("cone: weights must be positive");
  if (declared_degrees.size() != relations.size())
    throw ValidationError("cone: degree count does not match relation count");
  auto rep = check_homogeneous(*this);
  for (const auto& e : rep.entries) {
    if (!e.homogeneous)
      throw ValidationError("cone: relation " + std::to_string(e.relation) +
                            " is not weighted homogeneous");
    if (!e.matches_declared)
      throw ValidationError("cone: relation " + std::to_string(e.relation) +
                            " does not have its declared weighted degree");
  }
}

WeightedCone make_cone(std::vector<std::string> variables, std::vector<int> weights,
                       std::vector<GPoly> relations) {
  WeightedCone c;
  c.variables = std::move(variables);
  c.weights = std::move(weights);
  c.relations = std::move(relations);
  for (size_t i = 0; i < c.relations.size(); ++i) {
    if (c.relations[i].is_zero())
      throw ValidationError("cone: relation " + std::to_string(i) +
                            " is identically zero (degree undefined)");
    auto h = c.relations[i].weighted_homogeneity(c.weights);
    if (!h.homogeneous)
      throw ValidationError("cone: relation " + std::to_string(i) +
                            " is not weighted homogeneous");
    if (h.degree <= 0)
      throw ValidationError("cone: relation " + std::to_string(i) +
                            " has non-positive weighted degree");
    c.declared_degrees.push_back(h.degree);
  }
  c.validate();
  return c;
}

HomogeneityReport check_homogeneous(const WeightedCone& c) {
  HomogeneityReport rep;
  for (size_t i = 0; i < c.relations.size(); ++i) {
    HomogeneityReport::Entry e;
    e.relation = static_cast<int>(i);
    auto h = c.relations[i].weighted_homogeneity(c.weights);
    e.homogeneous = h.homogeneous;
    if (h.homogeneous) {
      e.degree = h.degree;
      e.matches_declared =
          i < c.declared_degrees.size() && c.declared_degrees[i] == h.degree;
    } else {
      e.offender = h.offender;
    }
    rep.pass = rep.pass && e.homogeneous && e.matches_declared;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool is_quadratic(const WeightedCone& c) {
  auto rep = check_homogeneous(c);
  for (const auto& e : rep.entries)
    if (!e.homogeneous) throw ValidationError("is_quadratic: inhomogeneous input");
  for (int w : c.weights)
    if (w != 1) return false;
  for (long d : c.declared_degrees)
    if (d != 2) return false;
  return true;
}

WeightedCone halve_weights(const WeightedCone& c) {
  WeightedCone out = c;
  for (auto& w : out.weights) {
    if (w % 2 != 0) throw ValidationError("halve_weights: odd variable weight");
    w /= 2;
  }
  for (auto& d : out.declared_degrees) {
    if (d % 2 != 0) throw ValidationError("halve_weights: odd relation degree");
    d /= 2;
  }
  out.validate();
  return out;
}

WeightedCone realify(const WeightedCone& c) {
  auto rep = check_homogeneous(c);
  for (const auto& e : rep.entries)
    if (!e.homogeneous) throw ValidationError("realify: inhomogeneous input");

  const int n = c.nvars();
  WeightedCone out;
  for (int j = 0; j < n; ++j) out.variables.push_back("re_" + c.variables[static_cast<size_t>(j)]);
  for (int j = 0; j < n; ++j) out.variables.push_back("im_" + c.variables[static_cast<size_t>(j)]);
  out.weights = c.weights;
  out.weights.insert(out.weights.end(), c.weights.begin(), c.weights.end());

  // Substitute X_j = x_j + i y_j, then split into real and imaginary parts.
  std::vector<GPoly> images;
  for (int j = 0; j < n; ++j) {
    GPoly img(2 * n);
    GPoly::Monomial mx(static_cast<size_t>(2 * n), 0), my(static_cast<size_t>(2 * n), 0);
    mx[static_cast<size_t>(j)] = 1;
    my[static_cast<size_t>(n + j)] = 1;
    img.add_term(std::move(mx), GaussianRational(Rational(1)));
    img.add_term(std::move(my), GaussianRational::i());
    images.push_back(std::move(img));
  }
  for (size_t r = 0; r < c.relations.size(); ++r) {
    GPoly expanded = c.relations[r].substitute(images);
    GPoly real_part(2 * n), imag_part(2 * n);
    for (const auto& [m, coeff] : expanded.terms()) {
      if (!coeff.re().is_zero()) real_part.add_term(m, GaussianRational(coeff.re()));
      if (!coeff.im().is_zero()) imag_part.add_term(m, GaussianRational(coeff.im()));
    }
    out.relations.push_back(std::move(real_part));
    out.relations.push_back(std::move(imag_part));
    out.declared_degrees.push_back(c.declared_degrees[r]);
    out.declared_degrees.push_back(c.declared_degrees[r]);
  }

  // Both parts are nonzero for a nonzero relation of positive degree: a zero
  // real part would force P(X) + conj(P)(Y) = 0 in independent variables.
  out.validate();
  return out;
}

bool functor_points(const WeightedCone& c, const ArtinPtr& alg,
                    const std::vector<ArtinElem<GaussianRational>>& assignment) {
  if (assignment.size() != c.variables.size())
    throw std::invalid_argument("functor_points: assignment size mismatch");
  for (const auto& v : assignment)
    if (!v.in_maximal_ideal())
      throw std::invalid_argument("functor_points: value not in the maximal ideal");
  for (const auto& p : c.relations) {
    auto value = p.eval_generic(assignment, [&](const GaussianRational& k) {
      return ArtinElem<GaussianRational>::constant(alg, k);
    });
    if (!value.is_zero()) return false;
  }
  return true;
}

bool functor_points(const WeightedCone& c, const ArtinPtr& alg,
                    const std::vector<ArtinElem<Rational>>& assignment) {
  std::vector<ArtinElem<GaussianRational>> lifted;
  for (const auto& v : assignment) {
    ArtinElem<GaussianRational> g(alg);
    for (const auto& [i, coef] : v.coeffs())
      g += ArtinElem<GaussianRational>::monomial_term(alg, i, GaussianRational(coef));
    lifted.push_back(std::move(g));
  }
  return functor_points(c, alg, lifted);
}

std::vector<ArtinElem<GaussianRational>> cone_assignment(
    const ArtinPtr& alg, const std::vector<std::vector<GaussianRational>>& coords) {
  std::vector<ArtinElem<GaussianRational>> out;
  for (const auto& per_var : coords) {
    ArtinElem<GaussianRational> e(alg);
    // coords index monomials of the maximal ideal (algebra index + 1 skips 1).
    for (size_t c = 0; c < per_var.size(); ++c) {
      int mono = static_cast<int>(c) + 1;
      if (mono < alg->dim() && !per_var[c].is_zero())
        e += ArtinElem<GaussianRational>::monomial_term(alg, mono, per_var[c]);
    }
    out.push_back(std::move(e));
  }
  return out;
}

ConeCompareReport cone_compare_sampled(
    const WeightedCone& c1, const WeightedCone& c2,
    const std::vector<std::vector<GaussianRational>>& dictionary,
    const std::vector<ArtinPtr>& tower,
    const std::vector<std::vector<std::vector<GaussianRational>>>& samples) {
  if (dictionary.size() != c1.variables.size())
    throw std::invalid_argument("cone_compare_sampled: dictionary size mismatch");
  for (const auto& row : dictionary) {
    if (row.size() != c2.variables.size())
      throw std::invalid_argument("cone_compare_sampled: dictionary row size mismatch");
  }
  // Weight consistency: X_i (weight w) may only use c2 variables of weight w.
  for (size_t i = 0; i < dictionary.size(); ++i)
    for (size_t j = 0; j < dictionary[i].size(); ++j)
      if (!dictionary[i][j].is_zero() && c1.weights[i] != c2.weights[j])
        throw ValidationError("cone_compare_sampled: weight-inconsistent dictionary");

  ConeCompareReport report;
  for (size_t s = 0; s < samples.size(); ++s) {
    for (size_t a = 0; a < tower.size(); ++a) {
      const auto& alg = tower[a];
      auto assign2 = cone_assignment(alg, samples[s]);
      std::vector<ArtinElem<GaussianRational>> assign1;
      for (size_t i = 0; i < dictionary.size(); ++i) {
        ArtinElem<GaussianRational> v(alg);
        for (size_t j = 0; j < dictionary[i].size(); ++j)
          if (!dictionary[i][j].is_zero()) {
            auto term = assign2[j];
            term.scale(dictionary[i][j]);
            v += term;
          }
        assign1.push_back(std::move(v));
      }
      bool m1 = functor_points(c1, alg, assign1);
      bool m2 = functor_points(c2, alg, assign2);
      report.checks += 1;
      if (m1 != m2) {
        report.pass = false;
        report.mismatches.push_back({s, static_cast<int>(a), m1, m2});
      }
    }
  }
  return report;
}

std::vector<std::vector<std::vector<GaussianRational>>> cone_sample_plan(
    int nvars, const ArtinPtr& alg, size_t count, unsigned long long seed,
    bool complex_parts) {
  std::mt19937_64 eng(seed);
  auto small_int = [&](long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  const int mdim = alg->dim() - 1;  // maximal-ideal monomials
  std::vector<std::vector<std::vector<GaussianRational>>> out;
  for (size_t s = 0; s < count; ++s) {
    std::vector<std::vector<GaussianRational>> sample;
    for (int v = 0; v < nvars; ++v) {
      std::vector<GaussianRational> coords;
      for (int m = 0; m < mdim; ++m) {
        Rational re(small_int(-2, 2));
        Rational im = complex_parts ? Rational(small_int(-2, 2)) : Rational(0);
        coords.emplace_back(re, im);
      }
      sample.push_back(std::move(coords));
    }
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace repgerm
