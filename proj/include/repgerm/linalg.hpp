#pragma once

// Dense exact linear algebra over a field (Rational or GaussianRational),
// plus generic ring matrices used with Artin-algebra entries.

#include "repgerm/exact.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace repgerm {

template <class K>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }
  static Mat from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols_)
        throw std::invalid_argument("Mat: ragged rows");
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<K> row(int i) const {
    std::vector<K> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  std::vector<K> col(int j) const {
    std::vector<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!is_zero_scalar(x)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a.at(i, k);
        if (is_zero_scalar(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  friend Mat operator*(const K& s, Mat m) {
    for (auto& x : m.a_) x = s * x;
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat: apply size mismatch");
    std::vector<K> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero_scalar(v[j])) r[i] += at(i, j) * v[j];
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << scalar_str(at(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

private:
  static bool is_zero_scalar(const K& x) {
    using repgerm::is_zero;
    return is_zero(x);
  }
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: dimension mismatch");
  }

  int rows_, cols_;
  std::vector<K> a_;
};

// ---------------------------------------------------------------------------
// Field-only routines (exact Gauss-Jordan elimination).

template <class K>
struct Rref {
  Mat<K> mat;               // reduced row echelon form, zero rows removed
  std::vector<int> pivots;  // pivot column per retained row, strictly increasing
};

template <class K>
Rref<K> rref(Mat<K> m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    K inv = field_inverse(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      K f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Mat<K> out(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return {std::move(out), std::move(pivots)};
}

template <class K>
int rank(const Mat<K>& m) {
  return rref(m).mat.rows();
}

/// Null space of x -> Mx, canonical basis from the RREF free columns.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Mat<K>& m) {
  Rref<K> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<K> v(m.cols());
    v[j] = K(1);
    for (int i = 0; i < r.mat.rows(); ++i) v[r.pivots[i]] = -r.mat.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
struct LinearSolution {
  std::vector<K> particular;          // one solution (free variables set to 0)
  std::vector<std::vector<K>> kernel; // basis of the homogeneous solutions
};

/// Solve Mx = b; std::nullopt when inconsistent.
template <class K>
std::optional<LinearSolution<K>> solve_linear(const Mat<K>& m, const std::vector<K>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  Mat<K> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref<K> r = rref(std::move(aug));
  for (size_t i = 0; i < r.pivots.size(); ++i)
    if (r.pivots[i] == m.cols()) return std::nullopt;  // pivot in the rhs column
  LinearSolution<K> sol;
  sol.particular.assign(m.cols(), K());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    sol.particular[r.pivots[i]] = r.mat.at(static_cast<int>(i), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<K> v(m.cols());
    v[j] = K(1);
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(static_cast<int>(i), j);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

/// Solve AX = B for all columns of B in one elimination; particular
/// solutions only (free variables zero). std::nullopt if any column is
/// inconsistent.
template <class K>
std::optional<Mat<K>> solve_linear_multi(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear_multi: shape mismatch");
  Mat<K> aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  Rref<K> r = rref(std::move(aug));
  std::vector<int> row_of_col(static_cast<size_t>(a.cols()), -1);
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return std::nullopt;  // pivot in a rhs column
    row_of_col[static_cast<size_t>(r.pivots[i])] = static_cast<int>(i);
  }
  Mat<K> x(a.cols(), b.cols());
  for (int j = 0; j < a.cols(); ++j) {
    int row = row_of_col[static_cast<size_t>(j)];
    if (row < 0) continue;
    for (int c = 0; c < b.cols(); ++c) x.at(j, c) = r.mat.at(row, a.cols() + c);
  }
  return x;
}

template <class K>
std::optional<Mat<K>> try_inverse(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  Mat<K> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = K(1);
  }
  Rref<K> r = rref(std::move(aug));
  if (static_cast<int>(r.pivots.size()) < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Mat<K> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Canonical subspaces: rows of a reduced row echelon basis. Equal subspaces
// have identical representations.

template <class K>
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(int ambient, const std::vector<std::vector<K>>& vectors) {
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != ambient)
        throw std::invalid_argument("Subspace: vector has wrong ambient dimension");
    Subspace s(ambient);
    if (!vectors.empty()) {
      Rref<K> r = rref(Mat<K>::from_rows(vectors));
      s.basis_ = std::move(r.mat);
      s.pivots_ = std::move(r.pivots);
    }
    return s;
  }
  static Subspace full(int ambient) {
    Subspace s(ambient);
    s.basis_ = Mat<K>::identity(ambient);
    s.pivots_.resize(ambient);
    for (int i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat<K>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<K> basis_vector(int i) const { return basis_.row(i); }

  /// Residual of v after elimination against the echelon basis; zero iff v is
  /// in the subspace, otherwise supported away from the pivot columns.
  std::vector<K> reduce(std::vector<K> v) const {
    check_ambient(v);
    for (int i = 0; i < basis_.rows(); ++i) {
      const K& c = v[pivots_[i]];
      if (is_zero(c)) continue;
      K f = c;
      for (int j = 0; j < ambient_; ++j) v[j] -= f * basis_.at(i, j);
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }
  bool contains(const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i))) return false;
    return true;
  }

  /// Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<std::vector<K>> coordinates(const std::vector<K>& v) const {
    check_ambient(v);
    std::vector<K> coords(basis_.rows());
    std::vector<K> w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
      coords[i] = w[pivots_[i]];
      if (is_zero(coords[i])) continue;
      for (int j = 0; j < ambient_; ++j) w[j] -= coords[i] * basis_.at(i, j);
    }
    for (const auto& x : w)
      if (!is_zero(x)) return std::nullopt;
    return coords;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    std::vector<std::vector<K>> rows;
    for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return span(a.ambient_, rows);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
    // Kernel of (alpha, beta) -> alpha*A - beta*B gives the intersection.
    Mat<K> m(a.ambient_, a.dim() + b.dim());
    for (int j = 0; j < a.dim(); ++j)
      for (int i = 0; i < a.ambient_; ++i) m.at(i, j) = a.basis_.at(j, i);
    for (int j = 0; j < b.dim(); ++j)
      for (int i = 0; i < a.ambient_; ++i) m.at(i, a.dim() + j) = -b.basis_.at(j, i);
    std::vector<std::vector<K>> vecs;
    for (const auto& k : kernel_basis(m)) {
      std::vector<K> v(a.ambient_);
      for (int j = 0; j < a.dim(); ++j)
        for (int i = 0; i < a.ambient_; ++i) v[i] += k[j] * a.basis_.at(j, i);
      vecs.push_back(std::move(v));
    }
    return span(a.ambient_, vecs);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Image under a linear map (columns act on ambient coordinates).
  Subspace map_by(const Mat<K>& m) const {
    if (m.cols() != ambient_) throw std::invalid_argument("Subspace: map dimension mismatch");
    std::vector<std::vector<K>> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(m.apply(basis_vector(i)));
    return span(m.rows(), rows);
  }

private:
  void check_ambient(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }
  void check_compatible(const Subspace& o) const {
    if (ambient_ != o.ambient_)
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  int ambient_;
  Mat<K> basis_;
  std::vector<int> pivots_;
};

/// dim(U) - dim(U ∩ V); equals dim U/V when V ⊆ U.
template <class K>
int quotient_dim(const Subspace<K>& u, const Subspace<K>& v) {
  return u.dim() - intersect(u, v).dim();
}

template <class K>
Subspace<K> column_space(const Mat<K>& m) {
  std::vector<std::vector<K>> rows;
  for (int j = 0; j < m.cols(); ++j) rows.push_back(m.col(j));
  return Subspace<K>::span(m.rows(), rows);
}

template <class K>
Subspace<K> kernel_space(const Mat<K>& m) {
  return Subspace<K>::span(m.cols(), kernel_basis(m));
}

inline Mat<GaussianRational> complexify(const Mat<Rational>& m) {
  Mat<GaussianRational> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = GaussianRational(m.at(i, j));
  return r;
}

inline Subspace<GaussianRational> complexify(const Subspace<Rational>& s) {
  std::vector<std::vector<GaussianRational>> rows;
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<GaussianRational> v;
    for (const auto& x : s.basis_vector(i)) v.emplace_back(x);
    rows.push_back(std::move(v));
  }
  return Subspace<GaussianRational>::span(s.ambient(), rows);
}

inline Subspace<GaussianRational> conj(const Subspace<GaussianRational>& s) {
  std::vector<std::vector<GaussianRational>> rows;
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<GaussianRational> v;
    for (const auto& x : s.basis_vector(i)) v.push_back(x.conj());
    rows.push_back(std::move(v));
  }
  return Subspace<GaussianRational>::span(s.ambient(), rows);
}

}  // namespace repgerm
