#pragma once

// Seeded mixed-Hodge-structure and filtered-complex generators.

#include "repgerm/mhs.hpp"
#include "support/fixtures.hpp"

namespace repgerm::testfix {

/// Seeded valid MHS built from a hidden bigrading: real lines at (p,p) and
/// conjugate pairs spanning I^{p,q} + I^{q,p}, twisted by a random rational
/// change of basis. Returns the space plus the expected Hodge numbers in the
/// constructed coordinates.
struct MhsFixture {
  FilteredVectorSpace space;
  std::map<std::pair<int, int>, int> hodge_numbers;
};

inline MhsFixture random_mhs(unsigned long long seed) {
  Rng rng(seed);
  // Choose pieces: a few (p,p) lines and (p,q)+(q,p) pairs with small p,q.
  std::vector<std::pair<int, int>> types;
  int nreal = static_cast<int>(rng.integer(1, 2));
  for (int i = 0; i < nreal; ++i) {
    int p = static_cast<int>(rng.integer(0, 2));
    types.push_back({p, p});
  }
  int npairs = static_cast<int>(rng.integer(1, 2));
  for (int i = 0; i < npairs; ++i) {
    int p = static_cast<int>(rng.integer(0, 2));
    int q = static_cast<int>(rng.integer(0, 2));
    while (q == p) q = static_cast<int>(rng.integer(0, 2));
    types.push_back({p, q});
  }

  int dim = 0;
  for (const auto& t : types) dim += (t.first == t.second) ? 1 : 2;

  // Random invertible rational basis change hiding the construction.
  Mat<Rational> T(dim, dim);
  do {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) T.at(i, j) = rng.rational(2, 1);
  } while (!try_inverse(T));

  // Column block per piece in the standard basis, then transform.
  MhsFixture fix;
  fix.space.dim = dim;
  std::map<std::pair<int, int>, std::vector<std::vector<GaussianRational>>> piece_vectors;
  int col = 0;
  auto col_of = [&](int c) {
    std::vector<Rational> v(static_cast<size_t>(dim));
    v[static_cast<size_t>(c)] = Rational(1);
    return T.apply(v);
  };
  auto to_gauss = [](const std::vector<Rational>& re, const std::vector<Rational>& im) {
    std::vector<GaussianRational> v;
    for (size_t i = 0; i < re.size(); ++i) v.emplace_back(re[i], im[i]);
    return v;
  };
  for (const auto& t : types) {
    fix.hodge_numbers[t] += 1;
    if (t.first == t.second) {
      auto a = col_of(col++);
      piece_vectors[t].push_back(to_gauss(a, std::vector<Rational>(a.size())));
    } else {
      fix.hodge_numbers[{t.second, t.first}] += 1;
      auto a = col_of(col++);
      auto b = col_of(col++);
      piece_vectors[t].push_back(to_gauss(a, b));                       // a + i b
      std::vector<Rational> negb;
      for (const auto& x : b) negb.push_back(-x);
      piece_vectors[{t.second, t.first}].push_back(to_gauss(a, negb));  // a - i b
    }
  }

  // W_n = rational span of pieces with p+q <= n; F^p = complex span p' >= p.
  std::set<int> weights;
  std::set<int> flevels;
  for (const auto& [pq, vecs] : piece_vectors) {
    weights.insert(pq.first + pq.second);
    flevels.insert(pq.first);
  }
  for (int n : weights) {
    std::vector<std::vector<Rational>> span;
    int c2 = 0;
    for (size_t ti = 0; ti < types.size(); ++ti) {
      const auto& t = types[ti];
      int cols = (t.first == t.second) ? 1 : 2;
      if (t.first + t.second <= n)
        for (int cc = 0; cc < cols; ++cc) span.push_back(col_of(c2 + cc));
      c2 += cols;
    }
    fix.space.W.emplace_back(n, Subspace<Rational>::span(dim, span));
  }
  // Ensure exhaustive W (top weight carries everything by construction).
  for (int p : flevels) {
    std::vector<std::vector<GaussianRational>> span;
    for (const auto& [pq, vecs] : piece_vectors)
      if (pq.first >= p)
        for (const auto& v : vecs) span.push_back(v);
    fix.space.F.emplace_back(p, Subspace<GaussianRational>::span(dim, span));
  }
  fix.space.validate();
  return fix;
}

/// Seeded filtered complex: acyclic arrows x -> y with level(x) >= level(y),
/// closed singleton lines, and occasional extra differential entries into
/// closed lines of lower-or-equal level (keeping d^2 = 0 and d(W) in W).
inline FilteredComplex random_filtered_complex(unsigned long long seed, int max_total_dim = 24) {
  Rng rng(seed);
  const int ndeg = static_cast<int>(rng.integer(2, 3));
  FilteredComplex c;
  c.first_degree = static_cast<int>(rng.integer(0, 1));

  struct Line {
    int degree;
    int level;
    bool has_outgoing = false;
  };
  std::vector<Line> lines;
  std::vector<std::pair<int, int>> arrows;
  int total = 0;
  while (total < max_total_dim - 1 && (total < 4 || rng.chance(2, 3))) {
    if (rng.chance(1, 2)) {
      int k = static_cast<int>(rng.integer(0, ndeg - 2));
      int ly = static_cast<int>(rng.integer(0, 3));
      int lx = ly + static_cast<int>(rng.integer(0, 2));
      lines.push_back({k, lx, true});
      lines.push_back({k + 1, ly, false});
      arrows.emplace_back(static_cast<int>(lines.size()) - 2,
                          static_cast<int>(lines.size()) - 1);
      total += 2;
    } else {
      lines.push_back({static_cast<int>(rng.integer(0, ndeg - 1)),
                       static_cast<int>(rng.integer(0, 3)), false});
      total += 1;
    }
  }

  std::vector<std::vector<int>> per_degree(static_cast<size_t>(ndeg));
  std::vector<int> pos(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    pos[i] = static_cast<int>(per_degree[static_cast<size_t>(lines[i].degree)].size());
    per_degree[static_cast<size_t>(lines[i].degree)].push_back(static_cast<int>(i));
  }
  for (int k = 0; k < ndeg; ++k)
    c.dims.push_back(static_cast<int>(per_degree[static_cast<size_t>(k)].size()));
  for (int k = 0; k + 1 < ndeg; ++k)
    c.d.push_back(Mat<Rational>(c.dims[static_cast<size_t>(k + 1)], c.dims[static_cast<size_t>(k)]));
  for (const auto& [src, dst] : arrows)
    c.d[static_cast<size_t>(lines[static_cast<size_t>(src)].degree)].at(
        pos[static_cast<size_t>(dst)], pos[static_cast<size_t>(src)]) = Rational(1);
  // Extra entries into closed lines keep d^2 = 0 and respect levels.
  for (const auto& [src, dst] : arrows) {
    const Line& x = lines[static_cast<size_t>(src)];
    for (int idx : per_degree[static_cast<size_t>(x.degree + 1)]) {
      const Line& w = lines[static_cast<size_t>(idx)];
      if (idx == dst || w.has_outgoing || w.level > x.level) continue;
      if (rng.chance(1, 3))
        c.d[static_cast<size_t>(x.degree)].at(pos[static_cast<size_t>(idx)],
                                              pos[static_cast<size_t>(src)]) = rng.rational(2, 1);
    }
  }

  c.W.resize(static_cast<size_t>(ndeg));
  for (int k = 0; k < ndeg; ++k) {
    std::vector<std::pair<int, Subspace<Rational>>> chain;
    for (int lvl = 0; lvl <= 4; ++lvl) {
      std::vector<std::vector<Rational>> span;
      for (int idx : per_degree[static_cast<size_t>(k)])
        if (lines[static_cast<size_t>(idx)].level <= lvl) {
          std::vector<Rational> v(static_cast<size_t>(c.dims[static_cast<size_t>(k)]));
          v[static_cast<size_t>(pos[static_cast<size_t>(idx)])] = Rational(1);
          span.push_back(std::move(v));
        }
      auto sub = Subspace<Rational>::span(c.dims[static_cast<size_t>(k)], span);
      bool record = chain.empty() ? sub.dim() > 0 : sub.dim() > chain.back().second.dim();
      if (record || (lvl == 4 && chain.empty()))
        chain.emplace_back(lvl, std::move(sub));
    }
    if (chain.empty() || chain.back().second.dim() != c.dims[static_cast<size_t>(k)])
      chain.emplace_back(4, Subspace<Rational>::full(c.dims[static_cast<size_t>(k)]));
    c.W[static_cast<size_t>(k)] = std::move(chain);
  }
  c.validate();
  return c;
}

}  // namespace repgerm::testfix
