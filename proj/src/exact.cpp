#include "repgerm/exact.hpp"

#include <cctype>

namespace repgerm {

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += "/";
    s += v_.get_den().get_str();
  }
  return s;
}

Rational Rational::parse(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.empty()) throw ParseError("empty rational literal");
  auto check_int = [](std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!check_int(s)) throw ParseError("bad rational literal '" + std::string(s) + "'");
    return Rational(mpz_class(std::string(s)));
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw ParseError("bad rational literal '" + std::string(s) + "'");
  mpz_class dz{std::string(den)};
  if (dz == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  mpq_class q(mpz_class(std::string(num)), dz);
  q.canonicalize();
  return Rational(q);
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_.is_one())
    imag = "i";
  else if (im_ == Rational(-1))
    imag = "-i";
  else
    imag = im_.str() + "*i";
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) return re_.str() + "+" + imag;
  return re_.str() + imag;  // imag already carries the minus sign
}

GaussianRational GaussianRational::parse(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.empty()) throw ParseError("empty scalar literal");

  // Split at the last top-level '+'/'-' (not the leading sign) if any.
  size_t split = std::string_view::npos;
  for (size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-')
      split = i;

  auto parse_part = [](std::string_view t) -> GaussianRational {
    // A part is "rat", "rat*i", "i", "-i", or "rat i" is not accepted.
    if (t == "i") return GaussianRational::i();
    if (t == "-i") return -GaussianRational::i();
    if (t == "+i") return GaussianRational::i();
    if (!t.empty() && t.back() == 'i') {
      std::string_view head = t.substr(0, t.size() - 1);
      if (!head.empty() && head.back() == '*') head = head.substr(0, head.size() - 1);
      return GaussianRational(Rational(0), Rational::parse(head));
    }
    return GaussianRational(Rational::parse(t));
  };

  if (split == std::string_view::npos) return parse_part(s);
  GaussianRational lhs = parse_part(s.substr(0, split));
  std::string_view rest = s.substr(split);  // keeps the sign
  GaussianRational rhs = parse_part(rest);
  return lhs + rhs;
}

}  // namespace repgerm
