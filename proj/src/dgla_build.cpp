#include "repgerm/dgla_build.hpp"

#include <algorithm>
#include <map>

namespace repgerm {

const SparseVec& GradedAlgebra::product_coeffs(int i, int j) const {
  static const SparseVec empty;
  auto it = product.find({i, j});
  return it == product.end() ? empty : it->second;
}

std::vector<Rational> GradedAlgebra::multiply(const std::vector<Rational>& x,
                                              const std::vector<Rational>& y) const {
  std::vector<Rational> out(static_cast<size_t>(dim()));
  for (const auto& [ij, coeffs] : product) {
    const Rational& a = x[static_cast<size_t>(ij.first)];
    const Rational& b = y[static_cast<size_t>(ij.second)];
    if (a.is_zero() || b.is_zero()) continue;
    Rational f = a * b;
    for (const auto& [k, c] : coeffs) out[static_cast<size_t>(k)] += f * c;
  }
  return out;
}

namespace {

std::vector<Rational> unit_vec(int n, int i) {
  std::vector<Rational> v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = Rational(1);
  return v;
}

}  // namespace

AxiomReport GradedAlgebra::check() const {
  AxiomReport rep;
  const int n = dim();
  auto add = [&](const std::string& ax, const std::string& det) {
    rep.violations.push_back({ax, det});
  };
  if (d.rows() != n || d.cols() != n) {
    add("shape", "differential matrix shape");
    return rep;
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!d.at(i, j).is_zero() &&
          (basis[static_cast<size_t>(i)].degree != basis[static_cast<size_t>(j)].degree + 1 ||
           basis[static_cast<size_t>(i)].weight != basis[static_cast<size_t>(j)].weight))
        add("grading", "d(" + basis[static_cast<size_t>(j)].name + ")");
  if (!(d * d).is_zero()) add("d_squared", "d^2 != 0");
  for (const auto& [ij, coeffs] : product) {
    const auto& bi = basis[static_cast<size_t>(ij.first)];
    const auto& bj = basis[static_cast<size_t>(ij.second)];
    for (const auto& [k, c] : coeffs)
      if (basis[static_cast<size_t>(k)].degree != bi.degree + bj.degree ||
          basis[static_cast<size_t>(k)].weight != bi.weight + bj.weight)
        add("grading", "product (" + bi.name + "," + bj.name + ")");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto ab = multiply(unit_vec(n, i), unit_vec(n, j));
      auto ba = multiply(unit_vec(n, j), unit_vec(n, i));
      int sign =
          (basis[static_cast<size_t>(i)].degree * basis[static_cast<size_t>(j)].degree) % 2 ? -1
                                                                                            : 1;
      for (int k = 0; k < n; ++k)
        if (ab[static_cast<size_t>(k)] != Rational(sign) * ba[static_cast<size_t>(k)]) {
          add("commutativity", "(" + basis[static_cast<size_t>(i)].name + "," +
                                   basis[static_cast<size_t>(j)].name + ")");
          break;
        }
      auto lhs = d.apply(ab);
      auto rhs = multiply(d.apply(unit_vec(n, i)), unit_vec(n, j));
      auto second = multiply(unit_vec(n, i), d.apply(unit_vec(n, j)));
      int lsign = basis[static_cast<size_t>(i)].degree % 2 ? -1 : 1;
      for (int k = 0; k < n; ++k)
        rhs[static_cast<size_t>(k)] += Rational(lsign) * second[static_cast<size_t>(k)];
      if (lhs != rhs)
        add("leibniz", "(" + basis[static_cast<size_t>(i)].name + "," +
                           basis[static_cast<size_t>(j)].name + ")");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto lhs = multiply(multiply(unit_vec(n, i), unit_vec(n, j)), unit_vec(n, k));
        auto rhs = multiply(unit_vec(n, i), multiply(unit_vec(n, j), unit_vec(n, k)));
        if (lhs != rhs) {
          add("associativity", "(" + basis[static_cast<size_t>(i)].name + "," +
                                   basis[static_cast<size_t>(j)].name + "," +
                                   basis[static_cast<size_t>(k)].name + ")");
        }
      }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Word calculus for the free graded-commutative algebra: a monomial is a
// sorted list of generator indices; odd generators square to zero and
// anticommute.
struct FreeWord {
  std::vector<int> letters;  // ascending
  int sign = 1;              // 0 marks the zero monomial
};

FreeWord canonicalize(std::vector<int> letters, const std::vector<DGAGenerator>& gens) {
  // Insertion sort counting transpositions of odd-degree letters.
  int sign = 1;
  for (size_t i = 1; i < letters.size(); ++i) {
    int x = letters[i];
    size_t j = i;
    while (j > 0 && letters[j - 1] > x) {
      if (gens[static_cast<size_t>(letters[j - 1])].degree % 2 &&
          gens[static_cast<size_t>(x)].degree % 2)
        sign = -sign;
      letters[j] = letters[j - 1];
      --j;
    }
    letters[j] = x;
  }
  for (size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1] && gens[static_cast<size_t>(letters[i])].degree % 2)
      return {{}, 0};
  return {std::move(letters), sign};
}

int word_degree(const std::vector<int>& letters, const std::vector<DGAGenerator>& gens) {
  int d = 0;
  for (int g : letters) d += gens[static_cast<size_t>(g)].degree;
  return d;
}

int word_weight(const std::vector<int>& letters, const std::vector<DGAGenerator>& gens) {
  int w = 0;
  for (int g : letters) w += gens[static_cast<size_t>(g)].weight;
  return w;
}

std::string word_name(const std::vector<int>& letters, const std::vector<DGAGenerator>& gens) {
  if (letters.empty()) return "1";
  std::string s;
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!s.empty()) s += "*";
    s += gens[static_cast<size_t>(letters[i])].name;
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

GradedAlgebra free_dga(const std::vector<DGAGenerator>& gens, int max_degree) {
  for (const auto& g : gens) {
    if (g.degree < 1) throw ValidationError("free_dga: generators must have positive degree");
    if (!g.d_word.empty()) {
      int deg = 0, wt = 0;
      for (int t : g.d_word) {
        deg += gens[static_cast<size_t>(t)].degree;
        wt += gens[static_cast<size_t>(t)].weight;
      }
      if (deg != g.degree + 1 || wt != g.weight)
        throw ValidationError("free_dga: d word of " + g.name + " has wrong bidegree");
    }
  }
  // Enumerate monomials of degree <= max_degree by extension.
  std::vector<std::vector<int>> words{{}};
  for (size_t head = 0; head < words.size(); ++head) {
    std::vector<int> w = words[head];
    int last = w.empty() ? 0 : w.back();
    for (int g = last; g < static_cast<int>(gens.size()); ++g) {
      if (gens[static_cast<size_t>(g)].degree % 2 && !w.empty() && w.back() == g) continue;
      std::vector<int> ext = w;
      ext.push_back(g);
      if (word_degree(ext, gens) > max_degree) continue;
      words.push_back(std::move(ext));
    }
  }
  std::sort(words.begin(), words.end(), [&](const auto& a, const auto& b) {
    int da = word_degree(a, gens), db = word_degree(b, gens);
    if (da != db) return da < db;
    return a < b;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());

  std::map<std::vector<int>, int> index;
  GradedAlgebra alg;
  for (const auto& w : words) {
    index[w] = alg.dim();
    alg.basis.push_back({word_name(w, gens), word_degree(w, gens), word_weight(w, gens)});
  }
  const int n = alg.dim();

  // Products.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> cat = words[static_cast<size_t>(i)];
      cat.insert(cat.end(), words[static_cast<size_t>(j)].begin(),
                 words[static_cast<size_t>(j)].end());
      auto canon = canonicalize(std::move(cat), gens);
      if (canon.sign == 0) continue;
      if (word_degree(canon.letters, gens) > max_degree) continue;  // truncation ideal
      auto it = index.find(canon.letters);
      if (it == index.end()) continue;
      alg.product[{i, j}] = {{it->second, Rational(canon.sign)}};
    }

  // Differential by the Leibniz rule over letters.
  alg.d = Mat<Rational>(n, n);
  for (int col = 0; col < n; ++col) {
    const auto& w = words[static_cast<size_t>(col)];
    int prefix_degree = 0;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      int g = w[pos];
      const auto& dword = gens[static_cast<size_t>(g)].d_word;
      if (!dword.empty()) {
        std::vector<int> img(w.begin(), w.begin() + static_cast<long>(pos));
        img.insert(img.end(), dword.begin(), dword.end());
        img.insert(img.end(), w.begin() + static_cast<long>(pos) + 1, w.end());
        auto canon = canonicalize(std::move(img), gens);
        if (canon.sign != 0 && word_degree(canon.letters, gens) <= max_degree) {
          auto it = index.find(canon.letters);
          if (it != index.end()) {
            Rational c(prefix_degree % 2 ? -canon.sign : canon.sign);
            alg.d.at(it->second, col) += c;
          }
        }
      }
      prefix_degree += gens[static_cast<size_t>(g)].degree;
    }
  }
  return alg;
}

GradedAlgebra functions_algebra(int npoints) {
  GradedAlgebra alg;
  for (int s = 0; s < npoints; ++s) alg.basis.push_back({"e" + std::to_string(s), 0, 0});
  for (int s = 0; s < npoints; ++s) alg.product[{s, s}] = {{s, Rational(1)}};
  alg.d = Mat<Rational>(npoints, npoints);
  return alg;
}


GradedAlgebra positive_part(const GradedAlgebra& a) {
  GradedAlgebra out;
  std::vector<int> remap(static_cast<size_t>(a.dim()), -1);
  for (int i = 0; i < a.dim(); ++i)
    if (a.basis[static_cast<size_t>(i)].degree > 0) {
      remap[static_cast<size_t>(i)] = out.dim();
      out.basis.push_back(a.basis[static_cast<size_t>(i)]);
    }
  const int n = out.dim();
  for (const auto& [ij, coeffs] : a.product) {
    int i = remap[static_cast<size_t>(ij.first)];
    int j = remap[static_cast<size_t>(ij.second)];
    if (i < 0 || j < 0) continue;
    SparseVec targets;
    for (const auto& [k, c] : coeffs)
      if (remap[static_cast<size_t>(k)] >= 0) targets.emplace_back(remap[static_cast<size_t>(k)], c);
    if (!targets.empty()) out.product[{i, j}] = std::move(targets);
  }
  out.d = Mat<Rational>(n, n);
  for (int col = 0; col < a.dim(); ++col) {
    if (remap[static_cast<size_t>(col)] < 0) continue;
    for (int row = 0; row < a.dim(); ++row)
      if (remap[static_cast<size_t>(row)] >= 0 && !a.d.at(row, col).is_zero())
        out.d.at(remap[static_cast<size_t>(row)], remap[static_cast<size_t>(col)]) = a.d.at(row, col);
  }
  return out;
}

GradedAlgebra algebra_tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
  GradedAlgebra out;
  const int nb = b.dim();
  auto idx = [&](int i, int j) { return i * nb + j; };
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < nb; ++j)
      out.basis.push_back(
          {a.basis[static_cast<size_t>(i)].name + "." + b.basis[static_cast<size_t>(j)].name,
           a.basis[static_cast<size_t>(i)].degree + b.basis[static_cast<size_t>(j)].degree,
           a.basis[static_cast<size_t>(i)].weight + b.basis[static_cast<size_t>(j)].weight});
  const int n = out.dim();
  // (x (x) y)(x' (x) y') = (-1)^{|y||x'|} xx' (x) yy'
  for (const auto& [ij_a, ca] : a.product)
    for (const auto& [ij_b, cb] : b.product) {
      int sign = (b.basis[static_cast<size_t>(ij_b.first)].degree *
                  a.basis[static_cast<size_t>(ij_a.second)].degree) %
                         2
                     ? -1
                     : 1;
      SparseVec targets;
      for (const auto& [ka, va] : ca)
        for (const auto& [kb, vb] : cb) {
          Rational c = Rational(sign) * va * vb;
          if (!c.is_zero()) targets.emplace_back(idx(ka, kb), c);
        }
      if (!targets.empty()) out.product[{idx(ij_a.first, ij_b.first), idx(ij_a.second, ij_b.second)}] = targets;
    }
  // d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy
  out.d = Mat<Rational>(n, n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < nb; ++j) {
      int col = idx(i, j);
      for (int r = 0; r < a.dim(); ++r)
        if (!a.d.at(r, i).is_zero()) out.d.at(idx(r, j), col) += a.d.at(r, i);
      int sign = a.basis[static_cast<size_t>(i)].degree % 2 ? -1 : 1;
      for (int r = 0; r < nb; ++r)
        if (!b.d.at(r, j).is_zero()) out.d.at(idx(i, r), col) += Rational(sign) * b.d.at(r, j);
    }
  return out;
}

WDGLA tensor_dgla(const GradedAlgebra& a, const AbstractLie& g) {
  auto algrep = a.check();
  if (!algrep.pass())
    throw ValidationError("tensor_dgla: algebra fails axioms (" +
                          algrep.violations.front().axiom + ": " +
                          algrep.violations.front().detail + ")");
  if (!g.check_structure()) throw ValidationError("tensor_dgla: Lie algebra fails axioms");

  std::vector<WBasisElement> basis;
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < g.dim; ++k)
      basis.push_back({a.basis[static_cast<size_t>(i)].name + "#" + std::to_string(k),
                       a.basis[static_cast<size_t>(i)].degree,
                       a.basis[static_cast<size_t>(i)].weight});
  const int n = static_cast<int>(basis.size());
  Mat<Rational> d(n, n);
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < g.dim; ++k)
      for (int r = 0; r < a.dim(); ++r)
        if (!a.d.at(r, i).is_zero())
          d.at(tensor_index(a, g, r, k), tensor_index(a, g, i, k)) = a.d.at(r, i);

  std::map<std::pair<int, int>, SparseVec> bracket;
  for (const auto& [ij, prods] : a.product)
    for (const auto& [uv, lies] : g.bracket) {
      SparseVec targets;
      for (const auto& [pk, pc] : prods)
        for (const auto& [lk, lc] : lies) {
          Rational c = pc * lc;
          if (!c.is_zero()) targets.emplace_back(tensor_index(a, g, pk, lk), c);
        }
      if (targets.empty()) continue;
      std::sort(targets.begin(), targets.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      bracket[{tensor_index(a, g, ij.first, uv.first),
               tensor_index(a, g, ij.second, uv.second)}] = std::move(targets);
    }
  return WDGLA(std::move(basis), std::move(d), std::move(bracket));
}

}  // namespace repgerm
