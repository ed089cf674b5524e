#include "repgerm/equivariant.hpp"

#include <set>

namespace repgerm {

namespace {

std::vector<Rational> unit_vec(int n, int i) {
  std::vector<Rational> v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = Rational(1);
  return v;
}

void verify_automorphism(const WDGLA& L, const std::string& name, const Mat<Rational>& M) {
  const int n = L.dim();
  if (M.rows() != n || M.cols() != n)
    throw ValidationError("action '" + name + "': wrong shape");
  if (!try_inverse(M)) throw ValidationError("action '" + name + "': singular");
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!M.at(i, j).is_zero() && (L.elem(i).degree != L.elem(j).degree ||
                                    L.elem(i).weight != L.elem(j).weight))
        throw ValidationError("action '" + name + "': not bigraded");
  if (M * L.d() != L.d() * M)
    throw ValidationError("action '" + name + "': does not commute with d");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto lhs = M.apply(L.bracket_vec(unit_vec(n, i), unit_vec(n, j)));
      auto rhs = L.bracket_vec(M.apply(unit_vec(n, i)), M.apply(unit_vec(n, j)));
      if (lhs != rhs)
        throw ValidationError("action '" + name + "': not bracket-multiplicative");
    }
}

}  // namespace

std::vector<Mat<Rational>> action_group(const WDGLA& L, size_t bound) {
  const int n = L.dim();
  for (const auto& [name, M] : L.action) verify_automorphism(L, name, M);
  std::vector<Mat<Rational>> group{Mat<Rational>::identity(n)};
  std::set<std::string> seen{group[0].str()};
  std::vector<Mat<Rational>> frontier = group;
  while (!frontier.empty()) {
    std::vector<Mat<Rational>> next;
    for (const auto& m : frontier)
      for (const auto& [name, g] : L.action) {
        Mat<Rational> prod = m * g;
        if (seen.insert(prod.str()).second) {
          group.push_back(prod);
          next.push_back(std::move(prod));
          if (group.size() > bound)
            throw ValidationError("action closure exceeds bound (not a small finite group?)");
        }
      }
    frontier = std::move(next);
  }
  return group;
}

std::pair<WDGLA, Mat<Rational>> invariants_with_inclusion(const WDGLA& L) {
  auto group = action_group(L);
  const int n = L.dim();
  Mat<Rational> avg(n, n);
  for (const auto& g : group) avg += g;
  Rational inv_order = Rational(1, static_cast<long>(group.size()));
  avg = inv_order * avg;

  // Fixed vectors per component keep the basis homogeneous.
  std::vector<std::vector<Rational>> fixed;
  std::set<std::pair<int, int>> comps;
  for (const auto& b : L.basis()) comps.insert({b.degree, b.weight});
  for (const auto& comp : comps) {
    auto idx = L.component(comp.first, comp.second);
    std::vector<std::vector<Rational>> cols;
    for (int j : idx) cols.push_back(avg.apply(unit_vec(n, j)));
    auto sub = Subspace<Rational>::span(n, cols);
    for (int i = 0; i < sub.dim(); ++i) fixed.push_back(sub.basis_vector(i));
  }
  return sub_dgla(L, fixed, "inv");
}

WDGLA invariants(const WDGLA& L) { return invariants_with_inclusion(L).first; }

std::map<std::pair<int, int>, int> fixed_cohomology_dims(const WDGLA& L) {
  auto group = action_group(L);
  const int n = L.dim();
  Mat<Rational> avg(n, n);
  for (const auto& g : group) avg += g;
  avg = Rational(1, static_cast<long>(group.size())) * avg;

  std::map<std::pair<int, int>, int> out;
  std::set<std::pair<int, int>> comps;
  for (const auto& b : L.basis()) comps.insert({b.degree, b.weight});
  for (const auto& [deg, wt] : comps) {
    // Component-level cocycles, coboundaries, and representatives.
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
      bool zero = true;
      for (const auto& x : img) zero = zero && x.is_zero();
      if (!zero) bvecs.push_back(std::move(img));
    }
    auto Z = Subspace<Rational>::span(n, zvecs);
    auto B = Subspace<Rational>::span(n, bvecs);
    int h = Z.dim() - B.dim();
    if (h == 0) {
      out[{deg, wt}] = 0;
      continue;
    }
    std::vector<std::vector<Rational>> reps;
    Subspace<Rational> grown = B;
    for (int i = 0; i < Z.dim() && static_cast<int>(reps.size()) < h; ++i) {
      auto cand = Z.basis_vector(i);
      if (!grown.contains(cand)) {
        reps.push_back(cand);
        grown = grown + Subspace<Rational>::span(n, {cand});
      }
    }
    // Induced averaging projector on H; its rank is the fixed dimension.
    const int bdim = B.dim();
    Mat<Rational> cols(n, bdim + h);
    for (int i = 0; i < bdim; ++i) {
      auto v = B.basis_vector(i);
      for (int r = 0; r < n; ++r) cols.at(r, i) = v[static_cast<size_t>(r)];
    }
    for (int i = 0; i < h; ++i)
      for (int r = 0; r < n; ++r)
        cols.at(r, bdim + i) = reps[static_cast<size_t>(i)][static_cast<size_t>(r)];
    Mat<Rational> hmat(h, h);
    for (int c = 0; c < h; ++c) {
      auto w = avg.apply(reps[static_cast<size_t>(c)]);
      auto sol = solve_linear(cols, w);
      if (!sol) throw ValidationError("fixed_cohomology_dims: projector image escaped Z/B basis");
      for (int r = 0; r < h; ++r) hmat.at(r, c) = sol->particular[static_cast<size_t>(bdim + r)];
    }
    out[{deg, wt}] = rank(hmat);
  }
  return out;
}

AugmentationKernelResult augmentation_kernel(const WDGLA& L) {
  if (!L.augmentation) throw ValidationError("augmentation_kernel: no augmentation on this algebra");
  const auto& aug = *L.augmentation;
  const int n = L.dim();

  AugmentationKernelResult result;
  result.surjective = rank(aug.matrix) == aug.target.dim;

  std::vector<std::vector<Rational>> vectors;
  int kernel_dim_blocks = 0;
  std::set<int> weights;
  for (int i : L.degree_indices(0)) weights.insert(L.elem(i).weight);
  for (int w : weights) {
    auto idx = L.component(0, w);
    Mat<Rational> block(aug.target.dim, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
      for (int r = 0; r < aug.target.dim; ++r) block.at(r, static_cast<int>(c)) = aug.matrix.at(r, idx[c]);
    for (const auto& k : kernel_basis(block)) {
      std::vector<Rational> v(static_cast<size_t>(n));
      for (size_t c = 0; c < idx.size(); ++c) v[static_cast<size_t>(idx[c])] = k[c];
      vectors.push_back(std::move(v));
      ++kernel_dim_blocks;
    }
  }
  // Graded kernels must exhaust the full kernel on degree 0.
  {
    auto idx = L.degree_indices(0);
    Mat<Rational> full(aug.target.dim, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
      for (int r = 0; r < aug.target.dim; ++r) full.at(r, static_cast<int>(c)) = aug.matrix.at(r, idx[c]);
    int full_kernel = static_cast<int>(idx.size()) - rank(full);
    if (full_kernel != kernel_dim_blocks)
      throw ValidationError("augmentation_kernel: augmentation is not weight-graded");
  }
  for (int i = 0; i < n; ++i)
    if (L.elem(i).degree > 0) {
      std::vector<Rational> v(static_cast<size_t>(n));
      v[static_cast<size_t>(i)] = Rational(1);
      vectors.push_back(std::move(v));
    }
  result.kernel = sub_dgla(L, vectors, "k").first;
  result.h0_dim = cohomology(result.kernel).dim_degree(0);
  return result;
}

}  // namespace repgerm
