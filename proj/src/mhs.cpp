#include "repgerm/mhs.hpp"

#include <algorithm>
#include <set>

namespace repgerm {

void FilteredVectorSpace::validate() const {
  for (size_t i = 0; i + 1 < W.size(); ++i) {
    if (W[i].first >= W[i + 1].first) throw ValidationError("W levels must be increasing");
    if (!W[i + 1].second.contains(W[i].second)) throw ValidationError("W chain is not nested");
  }
  if (!W.empty() && W.back().second.dim() != dim)
    throw ValidationError("W is not exhaustive (last step must be the full space)");
  for (const auto& [lvl, sub] : W)
    if (sub.ambient() != dim) throw ValidationError("W ambient dimension mismatch");
  for (size_t i = 0; i + 1 < F.size(); ++i) {
    if (F[i].first >= F[i + 1].first) throw ValidationError("F levels must be increasing");
    if (!F[i].second.contains(F[i + 1].second)) throw ValidationError("F chain is not decreasing");
  }
  for (const auto& [lvl, sub] : F)
    if (sub.ambient() != dim) throw ValidationError("F ambient dimension mismatch");
}

Subspace<Rational> FilteredVectorSpace::w_at(int n) const {
  Subspace<Rational> out(dim);
  for (const auto& [lvl, sub] : W) {
    if (lvl > n) break;
    out = sub;
  }
  return out;
}

Subspace<GaussianRational> FilteredVectorSpace::wc_at(int n) const { return complexify(w_at(n)); }

Subspace<GaussianRational> FilteredVectorSpace::f_at(int p) const {
  // Decreasing step function: the entry at the least stored level >= p.
  for (const auto& [lvl, sub] : F)
    if (lvl >= p) return sub;
  return Subspace<GaussianRational>(dim);
}

std::map<int, int> gr_weight(const FilteredVectorSpace& v) {
  v.validate();
  std::map<int, int> out;
  int prev = 0;
  for (const auto& [lvl, sub] : v.W) {
    int jump = sub.dim() - prev;
    if (jump > 0) out[lvl] = jump;
    prev = sub.dim();
  }
  return out;
}

bool is_pure(const FilteredVectorSpace& v, int n) {
  auto gr = gr_weight(v);
  for (const auto& [m, d] : gr)
    if (m != n && d > 0) return false;
  return true;
}

DeligneSplitting deligne_splitting(const FilteredVectorSpace& v) {
  v.validate();
  if (v.F.empty() && v.dim > 0) throw ValidationError("deligne_splitting: missing F filtration");

  // MHS check: F and conj(F) must be n-opposed on each graded piece Gr_n^W.
  auto gr = gr_weight(v);
  for (const auto& [n, grdim] : gr) {
    auto wn = v.wc_at(n);
    auto wprev = v.wc_at(n - 1);
    auto graded_dim = [&](const Subspace<GaussianRational>& sub) {
      return (intersect(sub, wn) + wprev).dim() - wprev.dim();
    };
    for (int p = v.f_min(); p <= v.f_max() + 1; ++p) {
      int fp = graded_dim(v.f_at(p));
      int fbar = graded_dim(conj(v.f_at(n - p + 1)));
      auto meet = intersect(intersect(v.f_at(p), wn) + wprev,
                            intersect(conj(v.f_at(n - p + 1)), wn) + wprev);
      bool opposed = (fp + fbar == grdim) && (meet.dim() == wprev.dim());
      if (!opposed)
        throw ValidationError("deligne_splitting: not a mixed Hodge structure on Gr_" +
                              std::to_string(n) + " (F^" + std::to_string(p) + ")");
    }
  }

  DeligneSplitting out;
  for (const auto& [n, grdim] : gr) {
    for (int p = v.f_min() - 1; p <= v.f_max() + 1; ++p) {
      int q = n - p;
      // I^{p,q} = F^p ∩ W_n ∩ (conj(F^q) ∩ W_n + sum_{j>=2} conj(F^{q-j+1}) ∩ W_{n-j})
      auto lhs = intersect(v.f_at(p), v.wc_at(n));
      auto rhs = intersect(conj(v.f_at(q)), v.wc_at(n));
      for (int j = 2; n - j >= v.w_min() - 1; ++j) {
        auto term = intersect(conj(v.f_at(q - j + 1)), v.wc_at(n - j));
        rhs = rhs + term;
        if (v.wc_at(n - j).dim() == 0) break;
      }
      auto piece = intersect(lhs, rhs);
      if (piece.dim() > 0) out.pieces[{p, q}] = std::move(piece);
    }
  }

  // Direct sum and recombination checks.
  int total = 0;
  Subspace<GaussianRational> running(v.dim);
  for (const auto& [pq, sub] : out.pieces) {
    if (intersect(running, sub).dim() != 0)
      throw ValidationError("deligne_splitting: pieces are not independent");
    running = running + sub;
    total += sub.dim();
  }
  if (total != v.dim) throw ValidationError("deligne_splitting: pieces do not span");
  for (const auto& [lvl, wsub] : v.W) {
    Subspace<GaussianRational> rec(v.dim);
    for (const auto& [pq, sub] : out.pieces)
      if (pq.first + pq.second <= lvl) rec = rec + sub;
    if (rec != complexify(wsub))
      throw ValidationError("deligne_splitting: W recombination failed at level " +
                            std::to_string(lvl));
  }
  for (const auto& [lvl, fsub] : v.F) {
    Subspace<GaussianRational> rec(v.dim);
    for (const auto& [pq, sub] : out.pieces)
      if (pq.first >= lvl) rec = rec + sub;
    if (rec != fsub)
      throw ValidationError("deligne_splitting: F recombination failed at level " +
                            std::to_string(lvl));
  }
  return out;
}

// ---------------------------------------------------------------------------

void FilteredComplex::validate() const {
  const int nd = degrees();
  if (static_cast<int>(d.size()) != (nd > 0 ? nd - 1 : 0))
    throw ValidationError("filtered complex: need one differential per adjacent pair");
  if (static_cast<int>(W.size()) != nd)
    throw ValidationError("filtered complex: need a filtration per degree");
  for (int k = 0; k + 1 < nd; ++k)
    if (d[static_cast<size_t>(k)].rows() != dims[static_cast<size_t>(k + 1)] ||
        d[static_cast<size_t>(k)].cols() != dims[static_cast<size_t>(k)])
      throw ValidationError("filtered complex: differential shape mismatch");
  for (int k = 0; k + 2 < nd; ++k)
    if (!(d[static_cast<size_t>(k + 1)] * d[static_cast<size_t>(k)]).is_zero())
      throw ValidationError("filtered complex: d^2 != 0");
  for (int k = 0; k < nd; ++k) {
    const auto& chain = W[static_cast<size_t>(k)];
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      if (chain[i].first >= chain[i + 1].first)
        throw ValidationError("filtered complex: W levels must increase");
      if (!chain[i + 1].second.contains(chain[i].second))
        throw ValidationError("filtered complex: W chain not nested");
    }
    if (!chain.empty() && chain.back().second.dim() != dims[static_cast<size_t>(k)])
      throw ValidationError("filtered complex: W not exhaustive");
  }
  // d preserves the filtration.
  for (int k = 0; k + 1 < nd; ++k)
    for (const auto& [lvl, sub] : W[static_cast<size_t>(k)]) {
      auto img = sub.map_by(d[static_cast<size_t>(k)]);
      if (!w_at(k + 1, lvl).contains(img))
        throw ValidationError("filtered complex: d does not preserve W at level " +
                              std::to_string(lvl));
    }
}

Subspace<Rational> FilteredComplex::w_at(int k, int level) const {
  Subspace<Rational> out(dims[static_cast<size_t>(k)]);
  for (const auto& [lvl, sub] : W[static_cast<size_t>(k)]) {
    if (lvl > level) break;
    out = sub;
  }
  return out;
}

int FilteredComplex::w_min(int k) const {
  const auto& chain = W[static_cast<size_t>(k)];
  return chain.empty() ? 0 : chain.front().first;
}

int FilteredComplex::w_max(int k) const {
  const auto& chain = W[static_cast<size_t>(k)];
  return chain.empty() ? 0 : chain.back().first;
}

namespace {

/// { x in A | x in a, Mx in b }
Subspace<Rational> preimage_refine(const Subspace<Rational>& a, const Mat<Rational>& m,
                                   const Subspace<Rational>& b) {
  if (a.dim() == 0) return a;
  // Solve for combinations of a's basis whose image reduces to zero mod b.
  std::vector<std::vector<Rational>> residuals;
  for (int i = 0; i < a.dim(); ++i) residuals.push_back(b.reduce(m.apply(a.basis_vector(i))));
  Mat<Rational> res(m.rows(), a.dim());
  for (int c = 0; c < a.dim(); ++c)
    for (int r = 0; r < m.rows(); ++r) res.at(r, c) = residuals[static_cast<size_t>(c)][static_cast<size_t>(r)];
  std::vector<std::vector<Rational>> vecs;
  for (const auto& k : kernel_basis(res)) {
    std::vector<Rational> v(static_cast<size_t>(a.ambient()));
    for (int i = 0; i < a.dim(); ++i) {
      if (k[static_cast<size_t>(i)].is_zero()) continue;
      auto bi = a.basis_vector(i);
      for (size_t r = 0; r < v.size(); ++r) v[r] += k[static_cast<size_t>(i)] * bi[r];
    }
    vecs.push_back(std::move(v));
  }
  return Subspace<Rational>::span(a.ambient(), vecs);
}

}  // namespace

DecResult dec_filtration(const FilteredComplex& c) {
  c.validate();
  DecResult out;
  out.dec = c;
  const int nd = c.degrees();
  int global_min = 0, global_max = 0;
  for (int k = 0; k < nd; ++k) {
    global_min = std::min(global_min, c.w_min(k));
    global_max = std::max(global_max, c.w_max(k));
  }
  for (int k = 0; k < nd; ++k) {
    const int n = c.first_degree + k;
    std::vector<std::pair<int, Subspace<Rational>>> chain;
    const int lo = global_min + n, hi = global_max + n + 1;
    for (int i = lo; i <= hi; ++i) {
      Subspace<Rational> base = c.w_at(k, i - n);
      Subspace<Rational> dec = base;
      if (k + 1 < nd)
        dec = preimage_refine(base, c.d[static_cast<size_t>(k)], c.w_at(k + 1, i - n - 1));
      if (chain.empty() ? dec.dim() > 0 || i == hi : (chain.back().second != dec || i == hi))
        chain.emplace_back(i, dec);
    }
    // Drop a duplicated full step at the top.
    while (chain.size() >= 2 && chain.back().second == chain[chain.size() - 2].second)
      chain.pop_back();
    out.dec.W[static_cast<size_t>(k)] = std::move(chain);
  }
  out.dec.validate();

  // Cohomology identity Dec W_i H^n = W_{i-n} H^n.
  auto level_dim = [](const std::map<int, int>& m, int level) {
    int best = 0;
    for (const auto& [l, d] : m)
      if (l <= level) best = d;
    return best;
  };
  for (int k = 0; k < nd && out.cohomology_identity; ++k) {
    const int n = c.first_degree + k;
    auto dims_orig = cohomology_filtration_dims(c, n);
    auto dims_dec = cohomology_filtration_dims(out.dec, n);
    for (int i = global_min + n - 1; i <= global_max + n + 1; ++i) {
      if (level_dim(dims_dec, i) != level_dim(dims_orig, i - n)) {
        out.cohomology_identity = false;
        break;
      }
    }
  }
  return out;
}

std::map<int, int> cohomology_filtration_dims(const FilteredComplex& c, int n) {
  const int k = n - c.first_degree;
  if (k < 0 || k >= c.degrees()) return {};
  const int dimk = c.dims[static_cast<size_t>(k)];
  Subspace<Rational> Z = k + 1 < c.degrees()
                             ? kernel_space(c.d[static_cast<size_t>(k)])
                             : Subspace<Rational>::full(dimk);
  Subspace<Rational> B =
      k > 0 ? column_space(c.d[static_cast<size_t>(k - 1)]) : Subspace<Rational>(dimk);
  std::map<int, int> out;
  for (const auto& [lvl, sub] : c.W[static_cast<size_t>(k)]) {
    auto zw = intersect(Z, sub);
    int dim_h = (zw + B).dim() - B.dim();
    out[lvl] = dim_h;
  }
  return out;
}

WeightSupport weight_support(const FilteredComplex& c, int n) {
  WeightSupport out;
  auto dims = cohomology_filtration_dims(c, n);
  int prev = 0;
  for (const auto& [lvl, d] : dims) {
    if (d > prev) out.weights.push_back(lvl);
    prev = d;
  }
  if (n == 1) {
    for (int w : out.weights) out.conforms = out.conforms && (w == 1 || w == 2);
  } else if (n == 2) {
    for (int w : out.weights) out.conforms = out.conforms && (w >= 2 && w <= 4);
  }
  return out;
}

}  // namespace repgerm
