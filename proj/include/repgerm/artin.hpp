#pragma once

// Truncated polynomial algebras k[t1..ts]/m^c, the coefficient rings of all
// deformation functors here. Elements are sparse maps monomial -> scalar;
// monomials of total degree >= c are identically zero.

#include "repgerm/exact.hpp"
#include "repgerm/linalg.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <vector>

namespace repgerm {

class ArtinAlgebra {
public:
  ArtinAlgebra(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 0 || order < 1) throw std::invalid_argument("ArtinAlgebra: need nvars >= 0, order >= 1");
    std::vector<int> expo(nvars, 0);
    for (int deg = 0; deg < order; ++deg) emit_degree(expo, 0, deg);
    for (size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = static_cast<int>(i);
  }

  static std::shared_ptr<const ArtinAlgebra> make(int nvars, int order) {
    return std::make_shared<const ArtinAlgebra>(nvars, order);
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  /// Number of exponent tuples of total degree < c.
  int dim() const { return static_cast<int>(monomials_.size()); }

  const std::vector<int>& monomial(int i) const { return monomials_[static_cast<size_t>(i)]; }
  int total_degree(int i) const {
    const auto& m = monomial(i);
    return std::accumulate(m.begin(), m.end(), 0);
  }

  /// Index of an exponent tuple; -1 when it falls at or beyond the cut.
  int mono_index(const std::vector<int>& expo) const {
    auto it = index_.find(expo);
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of the product of two monomials; -1 when truncated away.
  int mul_index(int i, int j) const {
    std::vector<int> e = monomial(i);
    const auto& f = monomial(j);
    int deg = 0;
    for (int k = 0; k < nvars_; ++k) {
      e[k] += f[k];
      deg += e[k];
    }
    if (deg >= order_) return -1;
    return index_.at(e);
  }

  std::string var_name(int v) const {
    if (nvars_ == 1) return "t";
    return "t" + std::to_string(v + 1);
  }

  std::string mono_str(int i) const {
    const auto& e = monomial(i);
    std::string s;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!s.empty()) s += "*";
      s += var_name(v);
      if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
  }

private:
  // Degree-lexicographic enumeration: by total degree, then lex on exponents.
  void emit_degree(std::vector<int>& expo, int pos, int remaining) {
    if (nvars_ == 0) {
      if (remaining == 0) monomials_.push_back(expo);
      return;
    }
    if (pos == nvars_ - 1) {
      expo[pos] = remaining;
      monomials_.push_back(expo);
      expo[pos] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      expo[pos] = k;
      emit_degree(expo, pos + 1, remaining - k);
    }
    expo[pos] = 0;
  }

  int nvars_;
  int order_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, int> index_;
};

using ArtinPtr = std::shared_ptr<const ArtinAlgebra>;

template <class K>
K scalar_from_rational(const Rational& r) {
  return K(r);
}
template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) {
  return r;
}

/// Element of an Artin algebra. A default-constructed element is the zero of
/// an unspecified algebra; arithmetic adopts the other operand's algebra.
template <class K>
class ArtinElem {
public:
  ArtinElem() = default;
  explicit ArtinElem(ArtinPtr alg) : alg_(std::move(alg)) {}
  ArtinElem(int n) {
    if (n != 0) throw std::invalid_argument("ArtinElem: only 0 constructible without an algebra");
  }

  static ArtinElem constant(ArtinPtr alg, K value) {
    ArtinElem e(std::move(alg));
    if (!repgerm::is_zero(value)) e.c_[0] = std::move(value);
    return e;
  }
  static ArtinElem variable(ArtinPtr alg, int v) {
    std::vector<int> expo(alg->nvars(), 0);
    expo[v] = 1;
    int idx = alg->mono_index(expo);
    ArtinElem e(std::move(alg));
    if (idx >= 0) e.c_[idx] = K(1);
    return e;
  }
  static ArtinElem monomial_term(ArtinPtr alg, int mono_index, K value) {
    ArtinElem e(std::move(alg));
    if (!repgerm::is_zero(value)) e.c_[mono_index] = std::move(value);
    return e;
  }

  const ArtinPtr& algebra() const { return alg_; }
  bool is_zero() const { return c_.empty(); }
  bool in_maximal_ideal() const { return c_.find(0) == c_.end(); }
  K constant_term() const {
    auto it = c_.find(0);
    return it == c_.end() ? K() : it->second;
  }
  K coeff(int mono_index) const {
    auto it = c_.find(mono_index);
    return it == c_.end() ? K() : it->second;
  }
  const std::map<int, K>& coeffs() const { return c_; }

  ArtinElem operator-() const {
    ArtinElem r = *this;
    for (auto& [i, v] : r.c_) v = -v;
    return r;
  }

  ArtinElem& operator+=(const ArtinElem& o) {
    merge_algebra(o);
    for (const auto& [i, v] : o.c_) {
      auto it = c_.find(i);
      if (it == c_.end()) {
        c_[i] = v;
      } else {
        it->second += v;
        if (repgerm::is_zero(it->second)) c_.erase(it);
      }
    }
    return *this;
  }
  ArtinElem& operator-=(const ArtinElem& o) { return *this += -o; }

  friend ArtinElem operator+(ArtinElem a, const ArtinElem& b) { return a += b; }
  friend ArtinElem operator-(ArtinElem a, const ArtinElem& b) { return a -= b; }

  friend ArtinElem operator*(const ArtinElem& a, const ArtinElem& b) {
    ArtinElem r(a.alg_ ? a.alg_ : b.alg_);
    if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
      throw std::invalid_argument("ArtinElem: mismatched algebras");
    if (!r.alg_) return r;
    for (const auto& [i, x] : a.c_)
      for (const auto& [j, y] : b.c_) {
        int k = r.alg_->mul_index(i, j);
        if (k < 0) continue;
        K prod = x * y;
        auto it = r.c_.find(k);
        if (it == r.c_.end()) {
          if (!repgerm::is_zero(prod)) r.c_[k] = std::move(prod);
        } else {
          it->second += prod;
          if (repgerm::is_zero(it->second)) r.c_.erase(it);
        }
      }
    return r;
  }

  ArtinElem& scale(const K& s) {
    if (repgerm::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& [i, v] : c_) v = s * v;
    return *this;
  }
  friend ArtinElem operator*(const K& s, ArtinElem e) { return e.scale(s); }

  friend bool operator==(const ArtinElem& a, const ArtinElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ArtinElem& a, const ArtinElem& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : c_) {
      std::string coeff = scalar_str(v);
      bool neg = !coeff.empty() && coeff[0] == '-';
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (neg) coeff = coeff.substr(1);
      std::string mono = alg_->mono_str(i);
      bool unit_coeff = (coeff == "1");
      if (mono == "1") {
        os << coeff;
      } else if (unit_coeff) {
        os << mono;
      } else {
        os << coeff << "*" << mono;
      }
      first = false;
    }
    return os.str();
  }

private:
  void merge_algebra(const ArtinElem& o) {
    if (!alg_) {
      alg_ = o.alg_;
    } else if (o.alg_ && o.alg_ != alg_) {
      throw std::invalid_argument("ArtinElem: mismatched algebras");
    }
  }

  ArtinPtr alg_;
  std::map<int, K> c_;
};

template <class K>
bool is_zero(const ArtinElem<K>& e) {
  return e.is_zero();
}
template <class K>
std::string scalar_str(const ArtinElem<K>& e) {
  return e.str();
}

template <class K>
using ArtinMat = Mat<ArtinElem<K>>;

template <class K>
ArtinMat<K> artin_identity(const ArtinPtr& alg, int n) {
  ArtinMat<K> m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ArtinElem<K>::constant(alg, K(1));
  return m;
}

template <class K>
ArtinMat<K> artin_embed(const ArtinPtr& alg, const Mat<K>& m) {
  ArtinMat<K> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m.at(i, j))) r.at(i, j) = ArtinElem<K>::constant(alg, m.at(i, j));
  return r;
}

template <class K>
Mat<K> artin_reduce_mod_m(const ArtinMat<K>& m) {
  Mat<K> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).constant_term();
  return r;
}

template <class K>
bool artin_in_maximal_ideal(const ArtinMat<K>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).in_maximal_ideal()) return false;
  return true;
}

/// exp of a square matrix with entries in m: a finite sum, = I mod m.
template <class K>
ArtinMat<K> artin_exp(const ArtinPtr& alg, const ArtinMat<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("artin_exp: not square");
  if (!artin_in_maximal_ideal(m))
    throw std::invalid_argument("artin_exp: entry with nonzero constant term");
  ArtinMat<K> result = artin_identity<K>(alg, m.rows());
  ArtinMat<K> power = m;
  Rational fact(1);
  for (int k = 1; k < alg->order(); ++k) {
    fact *= Rational(k);
    if (power.is_zero()) break;
    K inv = scalar_from_rational<K>(fact.inverse());
    ArtinMat<K> term = power;
    for (int i = 0; i < term.rows(); ++i)
      for (int j = 0; j < term.cols(); ++j) term.at(i, j).scale(inv);
    result += term;
    power = power * m;
  }
  return result;
}

/// log of a square matrix = I mod m; exact inverse of artin_exp.
template <class K>
ArtinMat<K> artin_log(const ArtinPtr& alg, const ArtinMat<K>& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("artin_log: not square");
  ArtinMat<K> n = u - artin_identity<K>(alg, u.rows());
  if (!artin_in_maximal_ideal(n))
    throw std::invalid_argument("artin_log: matrix is not congruent to I mod m");
  ArtinMat<K> result(u.rows(), u.cols());
  ArtinMat<K> power = n;
  for (int k = 1; k < alg->order(); ++k) {
    if (power.is_zero()) break;
    Rational c = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    K coeff = scalar_from_rational<K>(c);
    ArtinMat<K> term = power;
    for (int i = 0; i < term.rows(); ++i)
      for (int j = 0; j < term.cols(); ++j) term.at(i, j).scale(coeff);
    result += term;
    power = power * n;
  }
  return result;
}

}  // namespace repgerm
