#include "repgerm/germ.hpp"

#include <numeric>
#include <random>

namespace repgerm {

CochainData presentation_complex(const Representation& rep) {
  const Presentation& pres = rep.presentation();
  const int l = rep.lie_dim();
  const int n = pres.ngens();
  const int m = pres.nrels();
  CochainData c;
  c.lie_dim = l;
  c.ngens = n;
  c.nrels = m;

  c.d0 = Mat<Rational>(n * l, l);
  for (int g = 0; g < n; ++g) {
    const Mat<Rational>& ad = rep.ad_gen(g);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        c.d0.at(g * l + i, j) = (i == j ? Rational(1) : Rational(0)) - ad.at(i, j);
  }

  c.d1 = Mat<Rational>(m * l, n * l);
  for (int r = 0; r < m; ++r) {
    const Word& rel = pres.relators[static_cast<size_t>(r)];
    for (int g = 0; g < n; ++g) {
      Mat<Rational> block(l, l);
      for (const auto& [w, coeff] : fox_derivative(rel, g)) {
        Mat<Rational> ad = rep.ad_word(w);
        for (int i = 0; i < l; ++i)
          for (int j = 0; j < l; ++j) block.at(i, j) += Rational(coeff) * ad.at(i, j);
      }
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) c.d1.at(r * l + i, g * l + j) = block.at(i, j);
    }
  }

  if (!(c.d1 * c.d0).is_zero())
    throw ValidationError("presentation complex: d1 * d0 != 0 (invalid representation)");
  return c;
}

CocycleSpaces cocycle_spaces(const CochainData& c) {
  CocycleSpaces s;
  s.Z1 = kernel_space(c.d1);
  s.B1 = column_space(c.d0);
  s.z1 = s.Z1.dim();
  s.b1 = s.B1.dim();
  s.h1 = s.z1 - s.b1;
  return s;
}

// ---------------------------------------------------------------------------

namespace {

bool vec_is_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::map<int, std::vector<ArtinElem<Rational>>> perturbation_of_layers(
    const ArtinPtr& alg, int ngens, int lie_dim,
    const std::vector<std::vector<Rational>>& layers) {
  std::map<int, std::vector<ArtinElem<Rational>>> pert;
  for (int g = 0; g < ngens; ++g) {
    std::vector<ArtinElem<Rational>> coords(static_cast<size_t>(lie_dim));
    for (size_t j = 0; j < layers.size(); ++j) {
      int idx = alg->mono_index(std::vector<int>{static_cast<int>(j) + 1});
      if (idx < 0) continue;  // beyond the cut
      for (int k = 0; k < lie_dim; ++k) {
        const Rational& v = layers[j][static_cast<size_t>(g * lie_dim + k)];
        if (!v.is_zero())
          coords[static_cast<size_t>(k)] += ArtinElem<Rational>::monomial_term(alg, idx, v);
      }
    }
    pert[g] = std::move(coords);
  }
  return pert;
}

/// t^k coefficient of the relator stack, as a C^2 vector in Lie coordinates.
/// Valid (Lie-valued) when the lower-order coefficients vanish.
std::vector<Rational> relator_error_at(const Representation& rep, const CochainData& c,
                                       const std::vector<std::vector<Rational>>& layers,
                                       int k) {
  const auto alg = ArtinAlgebra::make(1, k + 1);
  const auto pert = perturbation_of_layers(alg, c.ngens, c.lie_dim, layers);
  const int tk = alg->mono_index(std::vector<int>{k});
  std::vector<Rational> error(static_cast<size_t>(c.nrels * c.lie_dim));
  const auto& pres = rep.presentation();
  for (int r = 0; r < c.nrels; ++r) {
    auto m = rep.evaluate_artin(pres.relators[static_cast<size_t>(r)], alg, pert);
    Mat<Rational> coeff(rep.mat_dim(), rep.mat_dim());
    for (int i = 0; i < rep.mat_dim(); ++i)
      for (int j = 0; j < rep.mat_dim(); ++j) coeff.at(i, j) = m.at(i, j).coeff(tk);
    auto coords = rep.lie().coords_from_matrix(coeff);
    if (!coords) throw ValidationError("lift: relator error leaves the Lie algebra span");
    for (int i = 0; i < c.lie_dim; ++i)
      error[static_cast<size_t>(r * c.lie_dim + i)] = (*coords)[static_cast<size_t>(i)];
  }
  return error;
}

/// Raw residual for the joint solver: matrix entries of (relator value - I)
/// at t-orders 2..kmax, stacked. First-order terms vanish for u in Z^1.
std::vector<Rational> residual_upto(const Representation& rep, const CochainData& c,
                                    const std::vector<std::vector<Rational>>& layers,
                                    int kmax) {
  const auto alg = ArtinAlgebra::make(1, kmax + 1);
  const auto pert = perturbation_of_layers(alg, c.ngens, c.lie_dim, layers);
  const int d = rep.mat_dim();
  const auto& pres = rep.presentation();
  std::vector<Rational> res;
  res.reserve(static_cast<size_t>((kmax - 1) * c.nrels * d * d));
  std::vector<ArtinMat<Rational>> values;
  for (int r = 0; r < c.nrels; ++r)
    values.push_back(rep.evaluate_artin(pres.relators[static_cast<size_t>(r)], alg, pert));
  for (int k = 2; k <= kmax; ++k) {
    const int tk = alg->mono_index(std::vector<int>{k});
    for (int r = 0; r < c.nrels; ++r)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) res.push_back(values[static_cast<size_t>(r)].at(i, j).coeff(tk));
  }
  return res;
}

struct JointLayout {
  int nvars_per_layer = 0;
  int first_layer = 2;
  int last_layer = 1;  // inclusive; empty when < first_layer
  int unknowns() const {
    return last_layer < first_layer ? 0 : (last_layer - first_layer + 1) * nvars_per_layer;
  }
};

std::vector<std::vector<Rational>> layers_from_vector(const std::vector<Rational>& u,
                                                      const JointLayout& lay,
                                                      const std::vector<Rational>& z) {
  std::vector<std::vector<Rational>> layers{u};
  for (int m = lay.first_layer; m <= lay.last_layer; ++m) {
    size_t off = static_cast<size_t>((m - lay.first_layer) * lay.nvars_per_layer);
    layers.emplace_back(z.begin() + static_cast<long>(off),
                        z.begin() + static_cast<long>(off + static_cast<size_t>(lay.nvars_per_layer)));
  }
  return layers;
}

/// Row of the inverse Vandermonde on nodes 0..deg picking the lambda^1
/// coefficient.
std::vector<Rational> linear_coeff_weights(int deg) {
  Mat<Rational> v(deg + 1, deg + 1);
  for (int row = 0; row <= deg; ++row) {
    Rational p(1);
    for (int col = 0; col <= deg; ++col) {
      v.at(row, col) = p;
      p *= Rational(row);
    }
  }
  auto inv = try_inverse(v);
  std::vector<Rational> w(static_cast<size_t>(deg + 1));
  for (int col = 0; col <= deg; ++col) w[static_cast<size_t>(col)] = inv->at(1, col);
  return w;
}

/// Search for layers 2..k making all relators the identity mod t^(k+1), with
/// prescribed first layer u (assumed in Z^1). Exact-arithmetic Newton on the
/// polynomial residual; the system is affine for k <= 3, so one step decides.
std::optional<std::vector<std::vector<Rational>>> lift_feasible(
    const Representation& rep, const CochainData& c, const std::vector<Rational>& u, int k,
    const std::vector<std::vector<Rational>>& warm) {
  JointLayout lay;
  lay.nvars_per_layer = c.ngens * c.lie_dim;
  lay.first_layer = 2;
  lay.last_layer = k;
  std::vector<Rational> z(static_cast<size_t>(lay.unknowns()));
  for (size_t m = 1; m < warm.size() && m + 1 <= static_cast<size_t>(k); ++m)
    for (int q = 0; q < lay.nvars_per_layer; ++q)
      z[(m - 1) * static_cast<size_t>(lay.nvars_per_layer) + static_cast<size_t>(q)] =
          warm[m][static_cast<size_t>(q)];

  // Columns ordered highest layer first, so the echelon particular solution
  // prefers new-layer corrections and reduces to the greedy step whenever the
  // greedy step suffices (then one Newton iteration is exact).
  const int npl = lay.nvars_per_layer;
  auto col_to_z = [&](int col) {
    int block = col / npl;  // 0 = layer k
    int m = lay.last_layer - block;
    return (m - lay.first_layer) * npl + (col % npl);
  };

  const int max_newton = k <= 3 ? 1 : 2 * k;
  for (int iter = 0; iter < max_newton; ++iter) {
    auto layers = layers_from_vector(u, lay, z);
    auto r0 = residual_upto(rep, c, layers, k);
    if (vec_is_zero(r0)) return layers;

    // Exact Jacobian column by column via polynomial interpolation in the
    // step scale; direction at layer m contributes degree <= floor(k/m).
    const int rows = static_cast<int>(r0.size());
    const int cols = lay.unknowns();
    Mat<Rational> jac(rows, cols);
    for (int col = 0; col < cols; ++col) {
      int zidx = col_to_z(col);
      int m = lay.first_layer + zidx / npl;
      int deg = k / m;
      if (deg < 1) deg = 1;
      auto weights = linear_coeff_weights(deg);
      std::vector<Rational> column(static_cast<size_t>(rows));
      for (int node = 0; node <= deg; ++node) {
        const Rational& w = weights[static_cast<size_t>(node)];
        if (w.is_zero()) continue;
        std::vector<Rational> values;
        if (node == 0) {
          values = r0;
        } else {
          std::vector<Rational> zs = z;
          zs[static_cast<size_t>(zidx)] += Rational(node);
          values = residual_upto(rep, c, layers_from_vector(u, lay, zs), k);
        }
        for (int row = 0; row < rows; ++row)
          column[static_cast<size_t>(row)] += w * values[static_cast<size_t>(row)];
      }
      for (int row = 0; row < rows; ++row) jac.at(row, col) = column[static_cast<size_t>(row)];
    }
    std::vector<Rational> rhs(r0.size());
    for (size_t i = 0; i < r0.size(); ++i) rhs[i] = -r0[i];
    auto sol = solve_linear(jac, rhs);
    if (!sol) return std::nullopt;
    for (int col = 0; col < cols; ++col)
      z[static_cast<size_t>(col_to_z(col))] += sol->particular[static_cast<size_t>(col)];
  }
  auto layers = layers_from_vector(u, lay, z);
  if (vec_is_zero(residual_upto(rep, c, layers, k))) return layers;
  return std::nullopt;
}

}  // namespace

std::vector<Rational> obstruction_eval(const Representation& rep, const CochainData& c,
                                       const std::vector<Rational>& u) {
  if (!vec_is_zero(c.d1.apply(u)))
    throw std::invalid_argument("obstruction_eval: point is not in Z^1");
  return relator_error_at(rep, c, {u}, 2);
}

bool QuadraticConeResult::contains_coords(const std::vector<Rational>& coords) const {
  for (const auto& p : relations)
    if (!p.eval(coords).is_zero()) return false;
  return true;
}

bool QuadraticConeResult::contains(const std::vector<Rational>& u) const {
  auto coords = spaces.Z1.coordinates(u);
  if (!coords) throw std::invalid_argument("cone membership: point is not in Z^1");
  return contains_coords(*coords);
}

namespace {

/// Scale to primitive integer coefficients, positive leading (deg-lex first)
/// coefficient.
QPoly normalize_relation(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class den = c.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  for (const auto& [m, c] : p.terms()) {
    mpz_class num = c.num() * (lcm_den / c.den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class q(lcm_den, gcd_num);
  q.canonicalize();
  Rational scale{q};
  if (p.terms().begin()->second.sign() < 0) scale = -scale;
  QPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, c * scale);
  return out;
}

}  // namespace

QuadraticConeResult quadratic_cone(const Representation& rep) {
  CochainData c = presentation_complex(rep);
  QuadraticConeResult res;
  res.spaces = cocycle_spaces(c);

  res.im_d1 = column_space(c.d1);
  const int c2dim = c.nrels * c.lie_dim;
  std::vector<bool> pivot(static_cast<size_t>(c2dim), false);
  for (int p : res.im_d1.pivots()) pivot[static_cast<size_t>(p)] = true;
  for (int q = 0; q < c2dim; ++q)
    if (!pivot[static_cast<size_t>(q)]) res.complement_coords.push_back(q);
  res.obstruction_dim = c2dim - res.im_d1.dim();

  const int z1 = res.spaces.z1;
  for (int j = 0; j < z1; ++j) res.variable_names.push_back("x" + std::to_string(j + 1));

  // The obstruction is exactly quadratic in u (every appearance of u carries
  // one t and t^3 = 0), so polarization over the Z^1 basis recovers the
  // relation polynomials from point evaluations.
  auto reduced_obstruction = [&](const std::vector<Rational>& u) {
    return res.im_d1.reduce(relator_error_at(rep, c, {u}, 2));
  };
  std::vector<std::vector<Rational>> diag;
  for (int j = 0; j < z1; ++j) diag.push_back(reduced_obstruction(res.spaces.Z1.basis_vector(j)));

  std::map<int, QPoly> per_coord;
  auto add_coeff = [&](int coord, QPoly::Monomial mono, const Rational& v) {
    if (v.is_zero()) return;
    auto it = per_coord.find(coord);
    if (it == per_coord.end()) it = per_coord.emplace(coord, QPoly(z1)).first;
    it->second.add_term(std::move(mono), v);
  };
  for (int j = 0; j < z1; ++j) {
    for (int q : res.complement_coords) {
      QPoly::Monomial m(static_cast<size_t>(z1), 0);
      m[static_cast<size_t>(j)] = 2;
      add_coeff(q, std::move(m), diag[static_cast<size_t>(j)][static_cast<size_t>(q)]);
    }
    for (int l = j + 1; l < z1; ++l) {
      std::vector<Rational> sum = res.spaces.Z1.basis_vector(j);
      const auto bl = res.spaces.Z1.basis_vector(l);
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += bl[i];
      auto cross = reduced_obstruction(sum);
      for (int q : res.complement_coords) {
        Rational v = cross[static_cast<size_t>(q)] -
                     diag[static_cast<size_t>(j)][static_cast<size_t>(q)] -
                     diag[static_cast<size_t>(l)][static_cast<size_t>(q)];
        QPoly::Monomial m(static_cast<size_t>(z1), 0);
        m[static_cast<size_t>(j)] = 1;
        m[static_cast<size_t>(l)] = 1;
        add_coeff(q, std::move(m), v);
      }
    }
  }
  for (auto& [q, p] : per_coord)
    if (!p.is_zero()) res.relations.push_back(normalize_relation(p));
  return res;
}

// ---------------------------------------------------------------------------

std::variant<std::vector<Rational>, LiftObstruction> lift_step(
    const Representation& rep, const CochainData& c,
    const std::vector<std::vector<Rational>>& layers) {
  const int k = static_cast<int>(layers.size()) + 1;  // target order
  auto error = relator_error_at(rep, c, layers, k);
  std::vector<Rational> rhs(error.size());
  for (size_t i = 0; i < error.size(); ++i) rhs[i] = -error[i];
  auto sol = solve_linear(c.d1, rhs);
  if (sol) return sol->particular;
  Subspace<Rational> im = column_space(c.d1);
  return LiftObstruction{k, im.reduce(error), k <= 2};
}

int lift_validate(const Representation& rep, const CochainData& c,
                  const std::vector<std::vector<Rational>>& layers, int order_cap) {
  const auto alg = ArtinAlgebra::make(1, order_cap + 1);
  const auto pert = perturbation_of_layers(alg, c.ngens, c.lie_dim, layers);
  const auto& pres = rep.presentation();
  int order = order_cap;
  for (int r = 0; r < c.nrels; ++r) {
    auto m = rep.evaluate_artin(pres.relators[static_cast<size_t>(r)], alg, pert);
    auto diff = m - artin_identity<Rational>(alg, rep.mat_dim());
    for (int i = 0; i < rep.mat_dim(); ++i)
      for (int j = 0; j < rep.mat_dim(); ++j)
        for (const auto& [idx, v] : diff.at(i, j).coeffs()) {
          int deg = alg->total_degree(idx);
          if (deg - 1 < order) order = deg - 1;
        }
  }
  return order;
}

LiftCertificate lift_order(const Representation& rep, const CochainData& c,
                           const std::vector<Rational>& u, int max_order) {
  LiftCertificate cert;
  auto d1u = c.d1.apply(u);
  if (!vec_is_zero(d1u)) {
    cert.order = 0;
    cert.obstruction = LiftObstruction{1, d1u, true};
    return cert;
  }
  cert.layers = {u};
  cert.order = 1;
  while (cert.order < max_order) {
    int k = cert.order + 1;
    auto found = lift_feasible(rep, c, u, k, cert.layers);
    if (!found) {
      // Witness: the greedy residue of the deepest valid history found.
      auto error = relator_error_at(rep, c, cert.layers, k);
      Subspace<Rational> im = column_space(c.d1);
      cert.obstruction = LiftObstruction{k, im.reduce(error), k <= 3};
      return cert;
    }
    cert.layers = std::move(*found);
    cert.order = k;
  }
  return cert;
}

// ---------------------------------------------------------------------------

OracleReport deformation_oracle(const Representation& rep, int order,
                                const std::vector<std::vector<Rational>>& coeff_samples) {
  if (order < 3) throw std::invalid_argument("deformation_oracle: order must be >= 3");
  OracleReport report;
  report.cone = quadratic_cone(rep);
  report.order = order;
  CochainData c = presentation_complex(rep);
  const auto& Z1 = report.cone.spaces.Z1;

  for (const auto& coeffs : coeff_samples) {
    if (static_cast<int>(coeffs.size()) != Z1.dim())
      throw std::invalid_argument("deformation_oracle: coefficient vector has wrong length");
    std::vector<Rational> u(static_cast<size_t>(c.ngens * c.lie_dim));
    for (int j = 0; j < Z1.dim(); ++j) {
      if (coeffs[static_cast<size_t>(j)].is_zero()) continue;
      auto b = Z1.basis_vector(j);
      for (size_t i = 0; i < u.size(); ++i) u[i] += coeffs[static_cast<size_t>(j)] * b[i];
    }
    OracleSample s;
    s.coeffs = coeffs;
    s.in_cone = report.cone.contains_coords(coeffs);
    LiftCertificate cert = lift_order(rep, c, u, order);
    s.lift_order = cert.order;
    if (cert.obstruction) s.obstruction = cert.obstruction->residue;
    s.disagreement = (s.in_cone && s.lift_order < order) || (!s.in_cone && s.lift_order >= 2);
    if (s.disagreement) report.disagreements += 1;
    report.samples.push_back(std::move(s));
  }
  return report;
}

std::vector<std::vector<Rational>> oracle_sample_plan(int z1, size_t target,
                                                      unsigned long long seed) {
  std::vector<std::vector<Rational>> samples;
  if (z1 == 0) {
    samples.emplace_back();
    return samples;
  }
  double full = 1;
  bool huge = false;
  for (int i = 0; i < z1 && !huge; ++i) {
    full *= 3;
    if (full > 1e18) huge = true;
  }
  size_t grid_size = huge ? target : std::min<size_t>(target, static_cast<size_t>(full));
  std::vector<int> odo(static_cast<size_t>(z1), 0);
  for (size_t cnt = 0; cnt < grid_size; ++cnt) {
    std::vector<Rational> coeffs(static_cast<size_t>(z1));
    for (int i = 0; i < z1; ++i)
      coeffs[static_cast<size_t>(i)] = Rational(odo[static_cast<size_t>(i)] - 1);
    samples.push_back(std::move(coeffs));
    int pos = z1 - 1;
    while (pos >= 0) {
      if (++odo[static_cast<size_t>(pos)] < 3) break;
      odo[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::mt19937_64 eng(seed);
  auto small_int = [&](long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  while (samples.size() < target) {
    std::vector<Rational> coeffs(static_cast<size_t>(z1));
    for (int i = 0; i < z1; ++i)
      coeffs[static_cast<size_t>(i)] = Rational(small_int(-4, 4), small_int(1, 3));
    samples.push_back(std::move(coeffs));
  }
  return samples;
}

OracleReport deformation_oracle_auto(const Representation& rep, int order, size_t target,
                                     unsigned long long seed) {
  QuadraticConeResult cone = quadratic_cone(rep);
  auto samples = oracle_sample_plan(cone.spaces.z1, target, seed);
  return deformation_oracle(rep, order, samples);
}

OracleReport deformation_oracle_points(const Representation& rep, int order,
                                       const std::vector<std::vector<Rational>>& points) {
  QuadraticConeResult cone = quadratic_cone(rep);
  std::vector<std::vector<Rational>> coeff_samples;
  for (const auto& p : points) {
    auto coords = cone.spaces.Z1.coordinates(p);
    if (!coords) throw std::invalid_argument("deformation_oracle: sample outside Z^1");
    coeff_samples.push_back(*coords);
  }
  return deformation_oracle(rep, order, coeff_samples);
}

}  // namespace repgerm
