#pragma once

// Sparse multivariate polynomials with exact coefficients, ordered
// degree-lexicographically for deterministic printing.

#include "repgerm/artin.hpp"
#include "repgerm/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repgerm {

struct DegLexLess {
  // Graded lexicographic with x1 > x2 > ...: lower total degree first, then
  // lexicographically larger exponent vectors first within a degree.
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a > b;
  }
};

template <class K>
class Poly {
public:
  using Monomial = std::vector<int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, K c) {
    Poly p(nvars);
    p.add_term(Monomial(static_cast<size_t>(nvars), 0), std::move(c));
    return p;
  }
  static Poly variable(int nvars, int v) {
    Poly p(nvars);
    Monomial m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(v)] = 1;
    p.add_term(std::move(m), K(1));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, K, DegLexLess>& terms() const { return terms_; }

  void add_term(Monomial m, K c) {
    if (is_zero_scalar(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.nvars_);
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) {
        Monomial m = m1;
        for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
        r.add_term(std::move(m), c1 * c2);
      }
    return r;
  }
  friend Poly operator*(const K& s, Poly p) {
    if (is_zero_scalar(s)) return Poly(p.nvars_);
    for (auto& [m, c] : p.terms_) c = s * c;
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int e : m) s += e;
      if (s > d) d = s;
    }
    return d;
  }

  /// Weighted degree when homogeneous; otherwise the first offending monomial.
  struct Homogeneity {
    bool homogeneous;
    long degree;        // -1 for the zero polynomial
    Monomial offender;  // only when !homogeneous
  };
  Homogeneity weighted_homogeneity(const std::vector<int>& weights) const {
    Homogeneity h{true, -1, {}};
    for (const auto& [m, c] : terms_) {
      long d = 0;
      for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * weights[i];
      if (h.degree == -1) {
        h.degree = d;
      } else if (d != h.degree) {
        h.homogeneous = false;
        h.offender = m;
        return h;
      }
    }
    return h;
  }

  template <class R, class Embed>
  R eval_generic(const std::vector<R>& values, Embed&& embed) const {
    R sum{};
    for (const auto& [m, c] : terms_) {
      R term = embed(c);
      for (size_t v = 0; v < m.size(); ++v)
        for (int e = 0; e < m[v]; ++e) term = term * values[v];
      sum += term;
    }
    return sum;
  }

  K eval(const std::vector<K>& values) const {
    return eval_generic(values, [](const K& c) { return c; });
  }

  /// Substitute each variable by a polynomial (possibly in other variables).
  Poly substitute(const std::vector<Poly>& images) const {
    if (images.size() != static_cast<size_t>(nvars_))
      throw std::invalid_argument("Poly::substitute: wrong image count");
    int target_vars = images.empty() ? 0 : images[0].nvars();
    Poly r(target_vars);
    for (const auto& [m, c] : terms_) {
      Poly term = Poly::constant(target_vars, c);
      for (size_t v = 0; v < m.size(); ++v)
        for (int e = 0; e < m[v]; ++e) term = term * images[v];
      r += term;
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names) const;

  static Poly parse(const std::string& text, const std::vector<std::string>& names);

private:
  static bool is_zero_scalar(const K& x) {
    using repgerm::is_zero;
    return is_zero(x);
  }
  void check(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  }

  int nvars_;
  std::map<Monomial, K, DegLexLess> terms_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

using QPoly = Poly<Rational>;
using GPoly = Poly<GaussianRational>;

// String forms live in poly.cpp for the two concrete coefficient fields.
template <>
std::string QPoly::str(const std::vector<std::string>& names) const;
template <>
std::string GPoly::str(const std::vector<std::string>& names) const;
template <>
QPoly QPoly::parse(const std::string& text, const std::vector<std::string>& names);
template <>
GPoly GPoly::parse(const std::string& text, const std::vector<std::string>& names);

}  // namespace repgerm
