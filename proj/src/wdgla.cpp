#include "repgerm/wdgla.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace repgerm {

AbstractLie AbstractLie::abelian(int n) {
  AbstractLie g;
  g.name = "abelian" + std::to_string(n);
  g.dim = n;
  return g;
}

AbstractLie AbstractLie::sl2() {
  AbstractLie g;
  g.name = "sl2";
  g.dim = 3;  // e, f, h
  auto set = [&](int i, int j, SparseVec v) {
    g.bracket[{i, j}] = v;
    SparseVec neg;
    for (auto& [k, c] : v) neg.emplace_back(k, -c);
    g.bracket[{j, i}] = neg;
  };
  set(0, 1, {{2, Rational(1)}});   // [e,f] = h
  set(0, 2, {{0, Rational(-2)}});  // [e,h] = -2e
  set(1, 2, {{1, Rational(2)}});   // [f,h] = 2f
  return g;
}

AbstractLie AbstractLie::heisenberg() {
  AbstractLie g;
  g.name = "heis3";
  g.dim = 3;
  g.bracket[{0, 1}] = {{2, Rational(1)}};
  g.bracket[{1, 0}] = {{2, Rational(-1)}};
  return g;
}

AbstractLie AbstractLie::solvable2() {
  AbstractLie g;
  g.name = "solv2";
  g.dim = 2;
  g.bracket[{0, 1}] = {{1, Rational(1)}};
  g.bracket[{1, 0}] = {{1, Rational(-1)}};
  return g;
}

std::vector<Rational> AbstractLie::bracket_vec(const std::vector<Rational>& u,
                                               const std::vector<Rational>& v) const {
  std::vector<Rational> out(static_cast<size_t>(dim));
  for (const auto& [ij, coeffs] : bracket) {
    const Rational& a = u[static_cast<size_t>(ij.first)];
    const Rational& b = v[static_cast<size_t>(ij.second)];
    if (a.is_zero() || b.is_zero()) continue;
    Rational f = a * b;
    for (const auto& [k, c] : coeffs) out[static_cast<size_t>(k)] += f * c;
  }
  return out;
}

bool AbstractLie::check_structure() const {
  auto coeffs = [&](int i, int j) {
    std::vector<Rational> v(static_cast<size_t>(dim));
    auto it = bracket.find({i, j});
    if (it != bracket.end())
      for (const auto& [k, c] : it->second) v[static_cast<size_t>(k)] = c;
    return v;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      auto a = coeffs(i, j), b = coeffs(j, i);
      for (int k = 0; k < dim; ++k)
        if (a[static_cast<size_t>(k)] != -b[static_cast<size_t>(k)]) return false;
    }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        std::vector<Rational> ei(static_cast<size_t>(dim)), ej(static_cast<size_t>(dim)),
            ek(static_cast<size_t>(dim));
        ei[static_cast<size_t>(i)] = Rational(1);
        ej[static_cast<size_t>(j)] = Rational(1);
        ek[static_cast<size_t>(k)] = Rational(1);
        auto s = bracket_vec(ei, bracket_vec(ej, ek));
        auto t = bracket_vec(ej, bracket_vec(ek, ei));
        auto u = bracket_vec(ek, bracket_vec(ei, ej));
        for (int r = 0; r < dim; ++r)
          if (!(s[static_cast<size_t>(r)] + t[static_cast<size_t>(r)] +
                u[static_cast<size_t>(r)])
                   .is_zero())
            return false;
      }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

SparseVec negate(const SparseVec& v) {
  SparseVec out;
  for (const auto& [k, c] : v) out.emplace_back(k, -c);
  return out;
}

SparseVec scale_sparse(const SparseVec& v, const Rational& s) {
  SparseVec out;
  for (const auto& [k, c] : v) {
    Rational x = s * c;
    if (!x.is_zero()) out.emplace_back(k, x);
  }
  return out;
}

}  // namespace

WDGLA::WDGLA(std::vector<WBasisElement> basis, Mat<Rational> d,
             std::map<std::pair<int, int>, SparseVec> raw_bracket)
    : basis_(std::move(basis)), d_(std::move(d)) {
  const int n = dim();
  if (d_.rows() != n || d_.cols() != n)
    throw ValidationError("WDGLA: differential matrix has wrong shape");
  std::set<std::string> names;
  for (const auto& b : basis_) {
    if (!names.insert(b.name).second) throw ValidationError("WDGLA: duplicate basis name " + b.name);
    if (b.degree < 0 || b.weight < 0)
      throw ValidationError("WDGLA: negative degree or weight on " + b.name);
  }
  // Normalize sparse entries and fill graded-antisymmetric counterparts.
  for (auto& [ij, v] : raw_bracket) {
    SparseVec clean;
    for (const auto& [k, c] : v) {
      if (k < 0 || k >= n) throw ValidationError("WDGLA: bracket target out of range");
      if (!c.is_zero()) clean.emplace_back(k, c);
    }
    std::sort(clean.begin(), clean.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!clean.empty()) bracket_[ij] = std::move(clean);
  }
  std::map<std::pair<int, int>, SparseVec> fill;
  for (const auto& [ij, v] : bracket_) {
    auto [i, j] = ij;
    std::pair<int, int> ji{j, i};
    int sign = (basis_[static_cast<size_t>(i)].degree * basis_[static_cast<size_t>(j)].degree) % 2
                   ? 1
                   : -1;  // [y,x] = -(-1)^{|x||y|}[x,y]
    SparseVec counterpart = sign > 0 ? v : negate(v);
    auto it = bracket_.find(ji);
    if (it == bracket_.end())
      fill[ji] = counterpart;
  }
  for (auto& [ij, v] : fill) bracket_[ij] = std::move(v);
}

const SparseVec& WDGLA::bracket_coeffs(int i, int j) const {
  static const SparseVec empty;
  auto it = bracket_.find({i, j});
  return it == bracket_.end() ? empty : it->second;
}

int WDGLA::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[static_cast<size_t>(i)].name == name) return i;
  return -1;
}

std::vector<Rational> WDGLA::bracket_vec(const std::vector<Rational>& x,
                                         const std::vector<Rational>& y) const {
  std::vector<Rational> out(static_cast<size_t>(dim()));
  for (const auto& [ij, coeffs] : bracket_) {
    const Rational& a = x[static_cast<size_t>(ij.first)];
    const Rational& b = y[static_cast<size_t>(ij.second)];
    if (a.is_zero() || b.is_zero()) continue;
    Rational f = a * b;
    for (const auto& [k, c] : coeffs) out[static_cast<size_t>(k)] += f * c;
  }
  return out;
}

std::vector<int> WDGLA::component(int degree, int weight) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[static_cast<size_t>(i)].degree == degree &&
        basis_[static_cast<size_t>(i)].weight == weight)
      out.push_back(i);
  return out;
}

std::vector<int> WDGLA::degree_indices(int degree) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[static_cast<size_t>(i)].degree == degree) out.push_back(i);
  return out;
}

std::vector<int> WDGLA::weight_indices(int weight) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[static_cast<size_t>(i)].weight == weight) out.push_back(i);
  return out;
}

int WDGLA::max_degree() const {
  int m = 0;
  for (const auto& b : basis_) m = std::max(m, b.degree);
  return m;
}

int WDGLA::max_weight() const {
  int m = 0;
  for (const auto& b : basis_) m = std::max(m, b.weight);
  return m;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> unit_vec(int n, int i) {
  std::vector<Rational> v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = Rational(1);
  return v;
}

bool is_zero_vec(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

AxiomReport check_dgla_axioms(const WDGLA& L) {
  AxiomReport rep;
  const int n = L.dim();
  auto add = [&](const std::string& axiom, const std::string& detail) {
    rep.violations.push_back({axiom, detail});
  };

  // Differential: degree +1, weight-preserving, d^2 = 0.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (L.d().at(i, j).is_zero()) continue;
      if (L.elem(i).degree != L.elem(j).degree + 1)
        add("degree_grading", "d(" + L.elem(j).name + ") hits degree " +
                                  std::to_string(L.elem(i).degree) + " entry " + L.elem(i).name);
      if (L.elem(i).weight != L.elem(j).weight)
        add("weight_grading", "d(" + L.elem(j).name + ") changes weight at " + L.elem(i).name);
    }
  if (!(L.d() * L.d()).is_zero()) add("d_squared", "d^2 != 0");

  // Bracket grading.
  for (const auto& [ij, coeffs] : L.bracket()) {
    const auto& bi = L.elem(ij.first);
    const auto& bj = L.elem(ij.second);
    for (const auto& [k, c] : coeffs) {
      if (L.elem(k).degree != bi.degree + bj.degree)
        add("degree_grading",
            "[" + bi.name + "," + bj.name + "] has component " + L.elem(k).name);
      if (L.elem(k).weight != bi.weight + bj.weight)
        add("weight_grading",
            "[" + bi.name + "," + bj.name + "] has component " + L.elem(k).name);
    }
  }

  // Sparse accumulator helpers keep the pair/triple loops cheap.
  auto sv_axpy = [](std::map<int, Rational>& acc, const Rational& c, const SparseVec& v) {
    for (const auto& [k, x] : v) {
      auto it = acc.find(k);
      if (it == acc.end()) {
        Rational t = c * x;
        if (!t.is_zero()) acc.emplace(k, std::move(t));
      } else {
        it->second += c * x;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  };
  auto bracket_into = [&](int i, const SparseVec& v, const Rational& scale,
                          std::map<int, Rational>& acc) {
    for (const auto& [k, c] : v) sv_axpy(acc, scale * c, L.bracket_coeffs(i, k));
  };
  auto bracket_right_into = [&](const SparseVec& v, int k, const Rational& scale,
                                std::map<int, Rational>& acc) {
    for (const auto& [s, c] : v) sv_axpy(acc, scale * c, L.bracket_coeffs(s, k));
  };
  std::vector<SparseVec> d_cols(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!L.d().at(i, j).is_zero()) d_cols[static_cast<size_t>(j)].emplace_back(i, L.d().at(i, j));

  // Graded antisymmetry on all pairs.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const auto& xy = L.bracket_coeffs(i, j);
      const auto& yx = L.bracket_coeffs(j, i);
      int sign = (L.elem(i).degree * L.elem(j).degree) % 2 ? 1 : -1;
      std::map<int, Rational> acc;
      sv_axpy(acc, Rational(1), xy);
      sv_axpy(acc, Rational(-sign), yx);
      if (!acc.empty())
        add("antisymmetry", "pair (" + L.elem(i).name + "," + L.elem(j).name + ")");
    }

  // Graded Leibniz: d[x,y] = [dx,y] + (-1)^{|x|} [x,dy].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& bij = L.bracket_coeffs(i, j);
      if (bij.empty() && d_cols[static_cast<size_t>(i)].empty() &&
          d_cols[static_cast<size_t>(j)].empty())
        continue;
      std::map<int, Rational> acc;
      for (const auto& [k, c] : bij) sv_axpy(acc, c, d_cols[static_cast<size_t>(k)]);
      bracket_right_into(d_cols[static_cast<size_t>(i)], j, Rational(-1), acc);
      int sign = L.elem(i).degree % 2 ? 1 : -1;  // subtract (+/-)[x,dy]
      bracket_into(i, d_cols[static_cast<size_t>(j)], Rational(sign), acc);
      if (!acc.empty())
        add("leibniz", "pair (" + L.elem(i).name + "," + L.elem(j).name + ")");
    }

  // Graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& jk = L.bracket_coeffs(j, k);
        const auto& ij = L.bracket_coeffs(i, j);
        const auto& ik = L.bracket_coeffs(i, k);
        if (jk.empty() && ij.empty() && ik.empty()) continue;
        std::map<int, Rational> acc;
        bracket_into(i, jk, Rational(1), acc);
        bracket_right_into(ij, k, Rational(-1), acc);
        int sign = (L.elem(i).degree * L.elem(j).degree) % 2 ? 1 : -1;
        bracket_into(j, ik, Rational(sign), acc);
        if (!acc.empty()) {
          add("jacobi", "triple (" + L.elem(i).name + "," + L.elem(j).name + "," +
                            L.elem(k).name + ")");
        }
      }

  // Action by bigraded DGLA automorphisms.
  for (const auto& [gname, M] : L.action) {
    if (M.rows() != n || M.cols() != n) {
      add("action", gname + ": wrong shape");
      continue;
    }
    if (!try_inverse(M)) add("action", gname + ": singular");
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (!M.at(i, j).is_zero() && (L.elem(i).degree != L.elem(j).degree ||
                                      L.elem(i).weight != L.elem(j).weight))
          add("action", gname + ": not bigraded at (" + L.elem(i).name + "," + L.elem(j).name + ")");
    if (M * L.d() != L.d() * M) add("action", gname + ": does not commute with d");
    std::vector<SparseVec> m_cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (!M.at(i, j).is_zero()) m_cols[static_cast<size_t>(j)].emplace_back(i, M.at(i, j));
    bool mult_ok = true;
    for (int i = 0; i < n && mult_ok; ++i)
      for (int j = 0; j < n && mult_ok; ++j) {
        std::map<int, Rational> acc;
        for (const auto& [k, c] : L.bracket_coeffs(i, j))
          sv_axpy(acc, c, m_cols[static_cast<size_t>(k)]);
        for (const auto& [a, ca] : m_cols[static_cast<size_t>(i)])
          for (const auto& [b, cb] : m_cols[static_cast<size_t>(j)])
            sv_axpy(acc, -(ca * cb), L.bracket_coeffs(a, b));
        if (!acc.empty()) {
          add("action", gname + ": not multiplicative at (" + L.elem(i).name + "," +
                            L.elem(j).name + ")");
          mult_ok = false;
        }
      }
  }

  // Augmentation: supported on degree 0 and a Lie homomorphism there.
  if (L.augmentation) {
    const auto& aug = *L.augmentation;
    if (!aug.target.check_structure()) add("augmentation", "target fails Lie axioms");
    if (aug.matrix.cols() != n || aug.matrix.rows() != aug.target.dim)
      add("augmentation", "matrix shape mismatch");
    else {
      for (int j = 0; j < n; ++j)
        if (L.elem(j).degree != 0)
          for (int i = 0; i < aug.target.dim; ++i)
            if (!aug.matrix.at(i, j).is_zero())
              add("augmentation", "nonzero on positive-degree element " + L.elem(j).name);
      for (int i : L.degree_indices(0))
        for (int j : L.degree_indices(0)) {
          auto lhs = aug.matrix.apply(L.bracket_vec(unit_vec(n, i), unit_vec(n, j)));
          auto rhs = aug.target.bracket_vec(aug.matrix.apply(unit_vec(n, i)),
                                            aug.matrix.apply(unit_vec(n, j)));
          if (lhs != rhs)
            add("augmentation", "not a Lie homomorphism at (" + L.elem(i).name + "," +
                                    L.elem(j).name + ")");
        }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------

CohomologyData cohomology(const WDGLA& L) {
  if (!(L.d() * L.d()).is_zero()) throw ValidationError("cohomology: d^2 != 0");
  CohomologyData data;
  const int n = L.dim();

  for (int deg = 0; deg <= L.max_degree(); ++deg) {
    // Global-coordinate cocycles/coboundaries in this degree.
    auto idx = L.degree_indices(deg);
    std::vector<std::vector<Rational>> zvecs, bvecs;
    if (!idx.empty()) {
      Mat<Rational> dsub(n, static_cast<int>(idx.size()));
      for (size_t c = 0; c < idx.size(); ++c)
        for (int r = 0; r < n; ++r) dsub.at(r, static_cast<int>(c)) = L.d().at(r, idx[c]);
      for (const auto& k : kernel_basis(dsub)) {
        std::vector<Rational> v(static_cast<size_t>(n));
        for (size_t c = 0; c < idx.size(); ++c) v[static_cast<size_t>(idx[c])] = k[c];
        zvecs.push_back(std::move(v));
      }
    }
    for (int j : L.degree_indices(deg - 1)) {
      auto img = L.d_apply(unit_vec(n, j));
      if (!is_zero_vec(img)) bvecs.push_back(std::move(img));
    }
    data.Z_by_degree[deg] = Subspace<Rational>::span(n, zvecs);
    data.B_by_degree[deg] = Subspace<Rational>::span(n, bvecs);
  }

  // Per-component dims and representatives.
  std::set<std::pair<int, int>> comps;
  for (const auto& b : L.basis()) comps.insert({b.degree, b.weight});
  for (const auto& [deg, wt] : comps) {
    auto idx = L.component(deg, wt);
    Mat<Rational> dsub(n, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
      for (int r = 0; r < n; ++r) dsub.at(r, static_cast<int>(c)) = L.d().at(r, idx[c]);
    std::vector<std::vector<Rational>> zvecs;
    for (const auto& k : kernel_basis(dsub)) {
      std::vector<Rational> v(static_cast<size_t>(n));
      for (size_t c = 0; c < idx.size(); ++c) v[static_cast<size_t>(idx[c])] = k[c];
      zvecs.push_back(std::move(v));
    }
    std::vector<std::vector<Rational>> bvecs;
    for (int j : L.component(deg - 1, wt)) {
      auto img = L.d_apply(unit_vec(n, j));
      if (!is_zero_vec(img)) bvecs.push_back(std::move(img));
    }
    auto Z = Subspace<Rational>::span(n, zvecs);
    auto B = Subspace<Rational>::span(n, bvecs);
    int h = Z.dim() - B.dim();
    data.dims[{deg, wt}] = h;
    std::vector<std::vector<Rational>> reps;
    Subspace<Rational> grown = B;
    for (int i = 0; i < Z.dim() && static_cast<int>(reps.size()) < h; ++i) {
      auto cand = Z.basis_vector(i);
      if (!grown.contains(cand)) {
        reps.push_back(cand);
        grown = grown + Subspace<Rational>::span(n, {cand});
      }
    }
    data.reps[{deg, wt}] = std::move(reps);
  }
  return data;
}

// ---------------------------------------------------------------------------

namespace {

struct HBasis {
  std::vector<std::vector<Rational>> reps;  // per degree, global coords
  Subspace<Rational> Z, B;
};

HBasis h_basis(const CohomologyData& data, int degree) {
  HBasis h;
  auto zit = data.Z_by_degree.find(degree);
  auto bit = data.B_by_degree.find(degree);
  if (zit != data.Z_by_degree.end()) h.Z = zit->second;
  if (bit != data.B_by_degree.end()) h.B = bit->second;
  for (const auto& [k, reps] : data.reps)
    if (k.first == degree)
      for (const auto& r : reps) h.reps.push_back(r);
  return h;
}

/// Matrix of the induced map H^deg(src) -> H^deg(dst).
Mat<Rational> induced_h_matrix(const Mat<Rational>& M, const HBasis& src, const HBasis& dst,
                               int dst_dim_ambient) {
  const int hs = static_cast<int>(src.reps.size());
  const int hd = static_cast<int>(dst.reps.size());
  Mat<Rational> out(hd, hs);
  if (hs == 0 || (hd == 0 && hs == 0)) return out;
  // Columns of [B-basis | reps] in the target; coordinates of mapped reps.
  const int bdim = dst.B.dim();
  Mat<Rational> cols(dst_dim_ambient, bdim + hd);
  for (int i = 0; i < bdim; ++i) {
    auto v = dst.B.basis_vector(i);
    for (int r = 0; r < dst_dim_ambient; ++r) cols.at(r, i) = v[static_cast<size_t>(r)];
  }
  for (int i = 0; i < hd; ++i)
    for (int r = 0; r < dst_dim_ambient; ++r)
      cols.at(r, bdim + i) = dst.reps[static_cast<size_t>(i)][static_cast<size_t>(r)];
  for (int c = 0; c < hs; ++c) {
    auto w = M.apply(src.reps[static_cast<size_t>(c)]);
    if (!dst.Z.contains(w))
      throw ValidationError("induced map: image of a cocycle is not a cocycle");
    auto sol = solve_linear(cols, w);
    if (!sol) throw ValidationError("induced map: cannot express image in H basis");
    for (int r = 0; r < hd; ++r) out.at(r, c) = sol->particular[static_cast<size_t>(bdim + r)];
  }
  return out;
}

}  // namespace

MorphismReport analyze_morphism(const DGLAMorphism& phi) {
  MorphismReport rep;
  const WDGLA& L = phi.source;
  const WDGLA& K = phi.target;
  const Mat<Rational>& M = phi.matrix;
  if (M.rows() != K.dim() || M.cols() != L.dim()) {
    rep.failure = "matrix shape mismatch";
    return rep;
  }
  for (int j = 0; j < L.dim(); ++j)
    for (int i = 0; i < K.dim(); ++i)
      if (!M.at(i, j).is_zero() && (K.elem(i).degree != L.elem(j).degree ||
                                    K.elem(i).weight != L.elem(j).weight)) {
        rep.failure = "not bigraded";
        return rep;
      }
  if (M * L.d() != K.d() * M) {
    rep.failure = "does not commute with d";
    return rep;
  }
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) {
      std::vector<Rational> ei(static_cast<size_t>(L.dim())), ej(static_cast<size_t>(L.dim()));
      ei[static_cast<size_t>(i)] = Rational(1);
      ej[static_cast<size_t>(j)] = Rational(1);
      auto lhs = M.apply(L.bracket_vec(ei, ej));
      auto rhs = K.bracket_vec(M.apply(ei), M.apply(ej));
      if (lhs != rhs) {
        rep.failure = "does not preserve brackets";
        return rep;
      }
    }
  rep.is_morphism = true;

  auto hl = cohomology(L);
  auto hk = cohomology(K);
  auto check_deg = [&](int deg, bool& iso_flag, bool injective_only) {
    auto src = h_basis(hl, deg);
    auto dst = h_basis(hk, deg);
    auto hm = induced_h_matrix(M, src, dst, K.dim());
    int rk = rank(hm);
    bool injective = rk == static_cast<int>(src.reps.size());
    bool surjective = rk == static_cast<int>(dst.reps.size());
    iso_flag = injective_only ? injective : (injective && surjective);
  };
  check_deg(0, rep.h0_iso, false);
  check_deg(1, rep.h1_iso, false);
  check_deg(2, rep.h2_injective, true);
  return rep;
}

bool is_one_quasi_iso(const DGLAMorphism& phi) {
  auto rep = analyze_morphism(phi);
  if (!rep.is_morphism) throw ValidationError("is_one_quasi_iso: not a morphism (" + rep.failure + ")");
  return rep.one_quasi_iso();
}

// ---------------------------------------------------------------------------

std::pair<WDGLA, Mat<Rational>> sub_dgla(const WDGLA& L,
                                         const std::vector<std::vector<Rational>>& vectors,
                                         const std::string& name_prefix) {
  const int n = L.dim();
  const int k = static_cast<int>(vectors.size());
  // Each vector must be homogeneous.
  std::vector<WBasisElement> sub_basis;
  for (int c = 0; c < k; ++c) {
    int deg = -1, wt = -1;
    for (int i = 0; i < n; ++i) {
      if (vectors[static_cast<size_t>(c)][static_cast<size_t>(i)].is_zero()) continue;
      if (deg < 0) {
        deg = L.elem(i).degree;
        wt = L.elem(i).weight;
      } else if (deg != L.elem(i).degree || wt != L.elem(i).weight) {
        throw ValidationError("sub_dgla: generator " + std::to_string(c) + " is not homogeneous");
      }
    }
    if (deg < 0) throw ValidationError("sub_dgla: zero generator");
    sub_basis.push_back({name_prefix + std::to_string(c), deg, wt});
  }

  Mat<Rational> incl(n, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) incl.at(r, c) = vectors[static_cast<size_t>(c)][static_cast<size_t>(r)];

  // Batch all images (d of each generator, then all bracket pairs) into one
  // elimination.
  Mat<Rational> rhs(n, k + k * k);
  for (int c = 0; c < k; ++c) {
    auto img = L.d_apply(vectors[static_cast<size_t>(c)]);
    for (int r = 0; r < n; ++r) rhs.at(r, c) = img[static_cast<size_t>(r)];
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto img = L.bracket_vec(vectors[static_cast<size_t>(i)], vectors[static_cast<size_t>(j)]);
      int col = k + i * k + j;
      for (int r = 0; r < n; ++r) rhs.at(r, col) = img[static_cast<size_t>(r)];
    }
  auto sol = solve_linear_multi(incl, rhs);
  if (!sol) throw ValidationError("sub_dgla: span is not closed under the structure maps");

  Mat<Rational> dsub(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) dsub.at(r, c) = sol->at(r, c);
  std::map<std::pair<int, int>, SparseVec> br;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      SparseVec sv;
      int col = k + i * k + j;
      for (int r = 0; r < k; ++r)
        if (!sol->at(r, col).is_zero()) sv.emplace_back(r, sol->at(r, col));
      if (!sv.empty()) br[{i, j}] = std::move(sv);
    }
  return {WDGLA(std::move(sub_basis), std::move(dsub), std::move(br)), std::move(incl)};
}

std::pair<WDGLA, DGLAMorphism> quotient_dgla(
    const WDGLA& L, const std::map<std::pair<int, int>, Subspace<Rational>>& ideal,
    const std::string& name_prefix) {
  const int n = L.dim();

  // Global ideal subspace for the stability checks.
  std::vector<std::vector<Rational>> ideal_vecs;
  for (const auto& [comp, sub] : ideal) {
    auto idx = L.component(comp.first, comp.second);
    if (sub.ambient() != static_cast<int>(idx.size()))
      throw ValidationError("quotient_dgla: ideal block has wrong ambient dimension");
    for (int i = 0; i < sub.dim(); ++i) {
      auto loc = sub.basis_vector(i);
      std::vector<Rational> v(static_cast<size_t>(n));
      for (size_t c = 0; c < idx.size(); ++c) v[static_cast<size_t>(idx[c])] = loc[c];
      ideal_vecs.push_back(std::move(v));
    }
  }
  auto ideal_glob = Subspace<Rational>::span(n, ideal_vecs);
  for (const auto& v : ideal_vecs) {
    if (!ideal_glob.contains(L.d_apply(v)))
      throw ValidationError("quotient_dgla: ideal is not d-stable");
    for (int b = 0; b < n; ++b)
      if (!ideal_glob.contains(L.bracket_vec(v, unit_vec(n, b))))
        throw ValidationError("quotient_dgla: ideal is not bracket-stable");
  }

  // Quotient basis: non-pivot coordinates per component; projection matrix.
  std::vector<WBasisElement> qbasis;
  std::vector<int> qcoord;  // global coordinate of each quotient basis line
  std::set<std::pair<int, int>> comps;
  for (const auto& b : L.basis()) comps.insert({b.degree, b.weight});
  Mat<Rational> proj(0, 0);
  std::vector<std::vector<Rational>> proj_rows;
  for (const auto& comp : comps) {
    auto idx = L.component(comp.first, comp.second);
    Subspace<Rational> block(static_cast<int>(idx.size()));
    auto it = ideal.find(comp);
    if (it != ideal.end()) block = it->second;
    std::vector<bool> pivot(idx.size(), false);
    for (int p : block.pivots()) pivot[static_cast<size_t>(p)] = true;
    for (size_t c = 0; c < idx.size(); ++c) {
      if (pivot[c]) continue;
      qbasis.push_back({name_prefix + L.elem(idx[c]).name, comp.first, comp.second});
      qcoord.push_back(idx[c]);
      // Projection row: local reduce of a unit vector, then read coord c.
      std::vector<Rational> row(static_cast<size_t>(n));
      for (size_t c2 = 0; c2 < idx.size(); ++c2) {
        std::vector<Rational> unit_loc(idx.size());
        unit_loc[c2] = Rational(1);
        auto red = block.reduce(unit_loc);
        row[static_cast<size_t>(idx[c2])] = red[c];
      }
      proj_rows.push_back(std::move(row));
    }
  }
  const int q = static_cast<int>(qbasis.size());
  proj = Mat<Rational>(q, n);
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < n; ++c) proj.at(r, c) = proj_rows[static_cast<size_t>(r)][static_cast<size_t>(c)];

  // Sections are unit vectors at the quotient coordinates, so images come
  // straight from d columns and bracket structure constants.
  auto project_sparse = [&](const SparseVec& v) {
    std::vector<Rational> img(static_cast<size_t>(q));
    for (const auto& [k, c] : v)
      for (int r = 0; r < q; ++r)
        if (!proj.at(r, k).is_zero()) img[static_cast<size_t>(r)] += c * proj.at(r, k);
    return img;
  };
  Mat<Rational> dq(q, q);
  for (int c = 0; c < q; ++c) {
    SparseVec dcol;
    for (int r = 0; r < n; ++r)
      if (!L.d().at(r, qcoord[static_cast<size_t>(c)]).is_zero())
        dcol.emplace_back(r, L.d().at(r, qcoord[static_cast<size_t>(c)]));
    auto img = project_sparse(dcol);
    for (int r = 0; r < q; ++r) dq.at(r, c) = img[static_cast<size_t>(r)];
  }
  std::map<std::pair<int, int>, SparseVec> brq;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const auto& coeffs =
          L.bracket_coeffs(qcoord[static_cast<size_t>(i)], qcoord[static_cast<size_t>(j)]);
      if (coeffs.empty()) continue;
      auto img = project_sparse(coeffs);
      SparseVec sv;
      for (int r = 0; r < q; ++r)
        if (!img[static_cast<size_t>(r)].is_zero()) sv.emplace_back(r, img[static_cast<size_t>(r)]);
      if (!sv.empty()) brq[{i, j}] = std::move(sv);
    }
  WDGLA Q(std::move(qbasis), std::move(dq), std::move(brq));
  DGLAMorphism pi{L, Q, proj};
  return {std::move(Q), std::move(pi)};
}

}  // namespace repgerm
