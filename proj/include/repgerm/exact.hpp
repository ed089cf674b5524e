#pragma once

// Exact scalar arithmetic: rationals and Gaussian rationals.
// All computation in this project is exact; there is no floating point.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace repgerm {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line = 0, int column = 0)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// Arbitrary-precision rational, always reduced with positive denominator.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  static Rational parse(std::string_view s);

  const mpz_class num() const { return v_.get_num(); }
  const mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// "p/q", with "/q" omitted when q = 1.
  std::string str() const;

private:
  mpq_class v_;
};

/// Element of Q(i); conjugation is an involution, re/im extraction exact.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int n) : re_(n) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
  static GaussianRational parse(std::string_view s);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
    GaussianRational c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::invalid_argument("GaussianRational: inverse of zero");
    GaussianRational c = conj();
    return {c.re() / n, c.im() / n};
  }

  /// "p/q", "r/s*i", or "p/q+r/s*i" (sign folded into the imaginary term).
  std::string str() const;

private:
  Rational re_;
  Rational im_;
};

// Field shims used by the generic linear algebra.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline Rational field_inverse(const Rational& x) { return x.inverse(); }
inline GaussianRational field_inverse(const GaussianRational& x) { return x.inverse(); }
inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const GaussianRational& x) { return x.str(); }
inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }
inline Rational conj(const Rational& x) { return x; }

}  // namespace repgerm
