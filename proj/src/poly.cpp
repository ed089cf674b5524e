#include "repgerm/poly.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace repgerm {

namespace {

// Shared printer; the coefficient is rendered by `coeff_str` and a leading
// '-' is pulled out when the whole coefficient is a negated real.
template <class K>
std::string poly_str(const std::map<std::vector<int>, K, DegLexLess>& terms, int nvars,
                     const std::vector<std::string>& names,
                     const std::function<std::string(const K&)>& coeff_str) {
  if (terms.empty()) return "0";
  if (static_cast<int>(names.size()) != nvars)
    throw std::invalid_argument("Poly::str: wrong number of names");
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string cs = coeff_str(c);
    bool neg = !cs.empty() && cs[0] == '-' && cs.find('+') == std::string::npos &&
               cs.find('(') == std::string::npos;
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (int v = 0; v < nvars; ++v) {
      if (m[static_cast<size_t>(v)] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<size_t>(v)];
      if (m[static_cast<size_t>(v)] > 1) mono += "^" + std::to_string(m[static_cast<size_t>(v)]);
    }
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      os << cs << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

std::string gaussian_coeff_str(const GaussianRational& c) {
  if (c.is_real()) return c.re().str();
  if (c.re().is_zero()) {
    if (c.im().is_one()) return "i";
    if (c.im() == Rational(-1)) return "-i";
    return c.im().str() + "*i";
  }
  return "(" + c.str() + ")";
}

// Recursive-descent parser over +,-,*,^, rational literals, 'i',
// parenthesized Gaussian literals, and variable names.
template <class K>
class PolyParser {
public:
  PolyParser(const std::string& text, const std::vector<std::string>& names)
      : s_(text), names_(names) {}

  Poly<K> run() {
    Poly<K> p = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial: " + msg, 1, static_cast<int>(pos_) + 1);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<K> parse_sum() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly<K> acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> parse_term() {
    Poly<K> acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  Poly<K> parse_factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const int n = static_cast<int>(names_.size());
    char c = s_[pos_];
    if (c == '(') {
      size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      std::string inner = s_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return Poly<K>::constant(n, scalar_of(GaussianRational::parse(inner)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      return Poly<K>::constant(n, scalar_of(GaussianRational(Rational::parse(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      Poly<K> base;
      if (name == "i") {
        base = Poly<K>::constant(n, scalar_of(GaussianRational::i()));
      } else {
        int v = -1;
        for (size_t k = 0; k < names_.size(); ++k)
          if (names_[k] == name) v = static_cast<int>(k);
        if (v < 0) fail("unknown variable '" + name + "'");
        base = Poly<K>::variable(n, v);
      }
      if (eat('^')) {
        skip_ws();
        size_t es = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (es == pos_) fail("missing exponent");
        int e = std::stoi(s_.substr(es, pos_ - es));
        Poly<K> r = Poly<K>::constant(n, scalar_of(GaussianRational(Rational(1))));
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
      }
      return base;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  K scalar_of(const GaussianRational& g);

  std::string s_;
  size_t pos_ = 0;
  const std::vector<std::string>& names_;
};

template <>
Rational PolyParser<Rational>::scalar_of(const GaussianRational& g) {
  if (!g.is_real()) throw ParseError("polynomial: complex coefficient in a rational polynomial");
  return g.re();
}
template <>
GaussianRational PolyParser<GaussianRational>::scalar_of(const GaussianRational& g) {
  return g;
}

}  // namespace

template <>
std::string QPoly::str(const std::vector<std::string>& names) const {
  return poly_str<Rational>(terms_, nvars_, names, [](const Rational& c) { return c.str(); });
}

template <>
std::string GPoly::str(const std::vector<std::string>& names) const {
  return poly_str<GaussianRational>(terms_, nvars_, names, gaussian_coeff_str);
}

template <>
QPoly QPoly::parse(const std::string& text, const std::vector<std::string>& names) {
  return PolyParser<Rational>(text, names).run();
}

template <>
GPoly GPoly::parse(const std::string& text, const std::vector<std::string>& names) {
  return PolyParser<GaussianRational>(text, names).run();
}

}  // namespace repgerm
