#include "repgerm/group.hpp"

#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace repgerm {

std::string Word::str(const std::vector<std::string>& names) const {
  if (ls_.empty()) return "1";
  std::string s;
  for (const Letter& l : ls_) {
    if (!s.empty()) s += " ";
    s += names[static_cast<size_t>(l.gen)];
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != '#')
        ++j;
      toks.push_back({raw.substr(i, j - i), lineno, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

// "a", "a^-1", "a^3": a generator with an exponent.
std::pair<std::string, long> split_exponent(const Token& tok) {
  const std::string& t = tok.text;
  size_t caret = t.find('^');
  if (caret == std::string::npos) return {t, 1};
  std::string name = t.substr(0, caret);
  std::string exp = t.substr(caret + 1);
  if (name.empty() || exp.empty() || exp == "-" || exp == "+")
    throw ParseError("bad generator token '" + t + "'", tok.line, tok.column);
  try {
    size_t pos = 0;
    long e = std::stol(exp, &pos);
    if (pos != exp.size() || e == 0)
      throw std::invalid_argument("");
    return {name, e};
  } catch (const std::exception&) {
    throw ParseError("bad exponent in token '" + t + "'", tok.line, tok.column);
  }
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_gens = false;
  for (const auto& line : tokenize_lines(text)) {
    const Token& head = line[0];
    if (head.text == "gens") {
      if (have_gens) throw ParseError("duplicate gens line", head.line, head.column);
      if (line.size() == 1) throw ParseError("gens line lists no generators", head.line, head.column);
      for (size_t i = 1; i < line.size(); ++i) {
        if (p.gen_index(line[i].text) >= 0)
          throw ParseError("duplicate generator '" + line[i].text + "'", line[i].line, line[i].column);
        p.gens.push_back(line[i].text);
      }
      have_gens = true;
    } else if (head.text == "rel") {
      if (!have_gens) throw ParseError("rel before gens line", head.line, head.column);
      std::vector<Letter> letters;
      for (size_t i = 1; i < line.size(); ++i) {
        auto [name, exp] = split_exponent(line[i]);
        int g = p.gen_index(name);
        if (g < 0)
          throw ParseError("unknown identifier '" + name + "' in relator", line[i].line, line[i].column);
        int sign = exp > 0 ? 1 : -1;
        for (long k = 0; k < (exp > 0 ? exp : -exp); ++k) letters.push_back({g, sign});
      }
      p.relators.emplace_back(std::move(letters));
    } else {
      throw ParseError("unknown directive '" + head.text + "'", head.line, head.column);
    }
  }
  if (!have_gens) throw ParseError("missing gens line");
  return p;
}

WordCombination fox_derivative(const Word& w, int g) {
  WordCombination out;
  auto add = [&out](const Word& word, long c) {
    auto it = out.find(word);
    if (it == out.end()) {
      if (c != 0) out[word] = c;
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  const auto& ls = w.letters();
  for (size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].gen != g) continue;
    if (ls[i].sign > 0)
      add(w.prefix(i), 1);  // d g/d g = 1 against the prefix
    else
      add(w.prefix(i + 1), -1);  // d(g^-1)/dg = -g^-1
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> vectorize(const Mat<Rational>& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Mat<Rational> commutator(const Mat<Rational>& a, const Mat<Rational>& b) {
  return a * b - b * a;
}

}  // namespace

LieAlgebraData::LieAlgebraData(std::string name, int mat_dim, std::vector<Mat<Rational>> basis)
    : name_(std::move(name)), mat_dim_(mat_dim), basis_(std::move(basis)) {
  const int l = static_cast<int>(basis_.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : basis_) {
    if (b.rows() != mat_dim_ || b.cols() != mat_dim_)
      throw ValidationError("Lie basis matrix has wrong dimension");
    rows.push_back(vectorize(b));
  }
  span_ = Subspace<Rational>::span(mat_dim_ * mat_dim_, rows);
  if (span_.dim() != l) throw ValidationError("Lie basis is linearly dependent");

  bracket_.resize(static_cast<size_t>(l) * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Mat<Rational> c = commutator(basis_[static_cast<size_t>(i)], basis_[static_cast<size_t>(j)]);
      auto coords = span_.coordinates(vectorize(c));
      if (!coords)
        throw ValidationError("Lie basis is not bracket-closed at pair (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
      // The echelon coordinates are w.r.t. the canonical span basis; convert
      // to coordinates in the user basis by solving against it.
      Mat<Rational> bt(mat_dim_ * mat_dim_, l);
      for (int k = 0; k < l; ++k) {
        auto vk = vectorize(basis_[static_cast<size_t>(k)]);
        for (int r = 0; r < mat_dim_ * mat_dim_; ++r) bt.at(r, k) = vk[static_cast<size_t>(r)];
      }
      auto sol = solve_linear(bt, vectorize(c));
      if (!sol) throw ValidationError("internal: bracket not solvable in basis");
      std::vector<std::pair<int, Rational>> sparse;
      for (int k = 0; k < l; ++k)
        if (!sol->particular[static_cast<size_t>(k)].is_zero())
          sparse.emplace_back(k, sol->particular[static_cast<size_t>(k)]);
      bracket_[static_cast<size_t>(i) * l + j] = std::move(sparse);
    }
  if (!check_structure()) throw ValidationError("Lie structure constants fail antisymmetry/Jacobi");
}

std::vector<Rational> LieAlgebraData::bracket_vec(const std::vector<Rational>& u,
                                                  const std::vector<Rational>& v) const {
  const int l = dim();
  std::vector<Rational> out(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) {
    if (u[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < l; ++j) {
      if (v[static_cast<size_t>(j)].is_zero()) continue;
      Rational f = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
      for (const auto& [k, c] : bracket_coeffs(i, j)) out[static_cast<size_t>(k)] += f * c;
    }
  }
  return out;
}

Mat<Rational> LieAlgebraData::matrix_from_coords(const std::vector<Rational>& u) const {
  Mat<Rational> m(mat_dim_, mat_dim_);
  for (int k = 0; k < dim(); ++k) {
    if (u[static_cast<size_t>(k)].is_zero()) continue;
    m += u[static_cast<size_t>(k)] * basis_[static_cast<size_t>(k)];
  }
  return m;
}

std::optional<std::vector<Rational>> LieAlgebraData::coords_from_matrix(const Mat<Rational>& m) const {
  const int l = dim();
  Mat<Rational> bt(mat_dim_ * mat_dim_, l);
  for (int k = 0; k < l; ++k) {
    auto vk = vectorize(basis_[static_cast<size_t>(k)]);
    for (int r = 0; r < mat_dim_ * mat_dim_; ++r) bt.at(r, k) = vk[static_cast<size_t>(r)];
  }
  auto sol = solve_linear(bt, vectorize(m));
  if (!sol) return std::nullopt;
  return sol->particular;
}

bool LieAlgebraData::check_structure() const {
  const int l = dim();
  auto coords = [&](int i, int j) {
    std::vector<Rational> v(static_cast<size_t>(l));
    for (const auto& [k, c] : bracket_coeffs(i, j)) v[static_cast<size_t>(k)] = c;
    return v;
  };
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      auto cij = coords(i, j);
      auto cji = coords(j, i);
      for (int k = 0; k < l; ++k)
        if (cij[static_cast<size_t>(k)] != -cji[static_cast<size_t>(k)]) return false;
    }
  // Jacobi: [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on basis triples.
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) {
        std::vector<Rational> ei(static_cast<size_t>(l)), ej(static_cast<size_t>(l)),
            ek(static_cast<size_t>(l));
        ei[static_cast<size_t>(i)] = Rational(1);
        ej[static_cast<size_t>(j)] = Rational(1);
        ek[static_cast<size_t>(k)] = Rational(1);
        auto s = bracket_vec(ei, bracket_vec(ej, ek));
        auto t = bracket_vec(ej, bracket_vec(ek, ei));
        auto u = bracket_vec(ek, bracket_vec(ei, ej));
        for (int r = 0; r < l; ++r)
          if (!(s[static_cast<size_t>(r)] + t[static_cast<size_t>(r)] + u[static_cast<size_t>(r)])
                   .is_zero())
            return false;
      }
  return true;
}

LieAlgebraData LieAlgebraData::gl(int d) {
  std::vector<Mat<Rational>> basis;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat<Rational> e(d, d);
      e.at(i, j) = Rational(1);
      basis.push_back(e);
    }
  return LieAlgebraData("gl" + std::to_string(d), d, std::move(basis));
}

LieAlgebraData LieAlgebraData::sl(int d) {
  std::vector<Mat<Rational>> basis;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      Mat<Rational> e(d, d);
      e.at(i, j) = Rational(1);
      basis.push_back(e);
    }
  for (int i = 0; i + 1 < d; ++i) {
    Mat<Rational> h(d, d);
    h.at(i, i) = Rational(1);
    h.at(i + 1, i + 1) = Rational(-1);
    basis.push_back(h);
  }
  return LieAlgebraData("sl" + std::to_string(d), d, std::move(basis));
}

std::optional<LieAlgebraData> LieAlgebraData::by_name(const std::string& name) {
  for (int d = 2; d <= 4; ++d) {
    if (name == "gl" + std::to_string(d)) return gl(d);
    if (name == "sl" + std::to_string(d)) return sl(d);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Representation::Representation(Presentation pres, LieAlgebraData lie,
                               std::vector<Mat<Rational>> images)
    : pres_(std::move(pres)), lie_(std::move(lie)), images_(std::move(images)) {
  if (images_.size() != pres_.gens.size())
    throw ValidationError("representation: image count does not match generator count");
  for (size_t g = 0; g < images_.size(); ++g) {
    if (images_[g].rows() != lie_.mat_dim() || images_[g].cols() != lie_.mat_dim())
      throw ValidationError("representation: image of '" + pres_.gens[g] + "' has wrong size");
    auto inv = try_inverse(images_[g]);
    if (!inv) throw ValidationError("representation: image of '" + pres_.gens[g] + "' is singular");
    inverses_.push_back(std::move(*inv));
  }
  // Ad matrices, checking the Lie span is preserved by conjugation.
  const int l = lie_.dim();
  for (size_t g = 0; g < images_.size(); ++g) {
    Mat<Rational> ad(l, l);
    for (int j = 0; j < l; ++j) {
      Mat<Rational> conj = images_[g] * lie_.basis_matrix(j) * inverses_[g];
      auto coords = lie_.coords_from_matrix(conj);
      if (!coords)
        throw ValidationError("representation: conjugation by '" + pres_.gens[g] +
                              "' leaves the Lie algebra span");
      for (int i = 0; i < l; ++i) ad.at(i, j) = (*coords)[static_cast<size_t>(i)];
    }
    auto adinv = try_inverse(ad);
    if (!adinv) throw ValidationError("internal: Ad matrix singular");
    ad_.push_back(std::move(ad));
    ad_inv_.push_back(std::move(*adinv));
  }
  for (int r = 0; r < pres_.nrels(); ++r) {
    if (evaluate(pres_.relators[static_cast<size_t>(r)]) != Mat<Rational>::identity(lie_.mat_dim()))
      throw ValidationError("representation: relator '" +
                            pres_.relators[static_cast<size_t>(r)].str(pres_.gens) +
                            "' does not evaluate to the identity");
  }
}

Mat<Rational> Representation::evaluate(const Word& w) const {
  Mat<Rational> m = Mat<Rational>::identity(lie_.mat_dim());
  for (const Letter& l : w.letters())
    m = m * (l.sign > 0 ? image(l.gen) : image_inverse(l.gen));
  return m;
}

Mat<Rational> Representation::ad_word(const Word& w) const {
  Mat<Rational> m = Mat<Rational>::identity(lie_.dim());
  for (const Letter& l : w.letters())
    m = m * (l.sign > 0 ? ad_gen(l.gen) : ad_gen_inverse(l.gen));
  return m;
}

ArtinMat<Rational> Representation::evaluate_artin(
    const Word& w, const ArtinPtr& alg,
    const std::map<int, std::vector<ArtinElem<Rational>>>& perturbation) const {
  const int d = lie_.mat_dim();
  // Perturbed letters: g -> exp(u_g) rho(g), g^-1 -> rho(g)^-1 exp(-u_g).
  std::map<int, std::pair<ArtinMat<Rational>, ArtinMat<Rational>>> cache;
  auto letter_matrix = [&](const Letter& l) -> const ArtinMat<Rational>& {
    auto it = cache.find(l.gen);
    if (it == cache.end()) {
      auto pit = perturbation.find(l.gen);
      ArtinMat<Rational> u(d, d);
      if (pit != perturbation.end()) {
        const auto& coords = pit->second;
        if (static_cast<int>(coords.size()) != lie_.dim())
          throw std::invalid_argument("perturbation has wrong Lie dimension");
        for (int k = 0; k < lie_.dim(); ++k) {
          const auto& c = coords[static_cast<size_t>(k)];
          if (c.is_zero()) continue;
          if (!c.in_maximal_ideal())
            throw std::invalid_argument("perturbation coefficient not in the maximal ideal");
          const auto& b = lie_.basis_matrix(k);
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              if (!b.at(i, j).is_zero()) u.at(i, j) += b.at(i, j) * c;
        }
      }
      ArtinMat<Rational> pos = artin_exp(alg, u) * artin_embed(alg, image(l.gen));
      ArtinMat<Rational> neg = artin_embed(alg, image_inverse(l.gen)) * artin_exp(alg, -u);
      it = cache.emplace(l.gen, std::make_pair(std::move(pos), std::move(neg))).first;
    }
    return l.sign > 0 ? it->second.first : it->second.second;
  };
  ArtinMat<Rational> m = artin_identity<Rational>(alg, d);
  for (const Letter& l : w.letters()) m = m * letter_matrix(l);
  return m;
}

RepReport check_representation(const Presentation& pres, const LieAlgebraData& lie,
                               const std::vector<Mat<Rational>>& images,
                               long finite_image_bound) {
  RepReport rep;
  const int d = lie.mat_dim();
  std::vector<Mat<Rational>> inverses;
  bool all_invertible = true;
  for (const auto& m : images) {
    auto inv = try_inverse(m);
    if (!inv) {
      all_invertible = false;
      break;
    }
    inverses.push_back(std::move(*inv));
  }
  if (!all_invertible) {
    for (int r = 0; r < pres.nrels(); ++r) rep.relator_ok.emplace_back(r, false);
    for (int g = 0; g < pres.ngens(); ++g) rep.ad_ok.emplace_back(g, false);
    return rep;
  }
  auto evaluate = [&](const Word& w) {
    Mat<Rational> m = Mat<Rational>::identity(d);
    for (const Letter& l : w.letters())
      m = m * (l.sign > 0 ? images[static_cast<size_t>(l.gen)]
                          : inverses[static_cast<size_t>(l.gen)]);
    return m;
  };
  for (int r = 0; r < pres.nrels(); ++r)
    rep.relator_ok.emplace_back(
        r, evaluate(pres.relators[static_cast<size_t>(r)]) == Mat<Rational>::identity(d));
  for (int g = 0; g < pres.ngens(); ++g) {
    bool ok = true;
    for (int j = 0; j < lie.dim(); ++j) {
      Mat<Rational> conj =
          images[static_cast<size_t>(g)] * lie.basis_matrix(j) * inverses[static_cast<size_t>(g)];
      if (!lie.coords_from_matrix(conj)) {
        ok = false;
        break;
      }
    }
    rep.ad_ok.emplace_back(g, ok);
  }
  if (finite_image_bound > 0 && rep.valid()) {
    std::set<std::string> seen;
    std::deque<Mat<Rational>> queue;
    auto push = [&](const Mat<Rational>& m) {
      std::string key = m.str();
      if (seen.insert(std::move(key)).second) queue.push_back(m);
    };
    push(Mat<Rational>::identity(d));
    bool bounded_out = false;
    while (!queue.empty()) {
      Mat<Rational> m = queue.front();
      queue.pop_front();
      for (size_t g = 0; g < images.size(); ++g) {
        push(m * images[g]);
        push(m * inverses[g]);
      }
      if (static_cast<long>(seen.size()) > finite_image_bound) {
        bounded_out = true;
        break;
      }
    }
    if (bounded_out)
      rep.closure_bounded_out = true;
    else
      rep.image_order = static_cast<long>(seen.size());
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// "[[a,b],[c,d]]" with rational entries; whitespace tolerated.
Mat<Rational> parse_matrix_literal(const std::string& text, int line) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "' in matrix literal", line,
                       static_cast<int>(pos) + 1);
    ++pos;
  };
  std::vector<std::vector<Rational>> rows;
  expect('[');
  while (true) {
    expect('[');
    std::vector<Rational> row;
    while (true) {
      size_t start = pos;
      while (pos < s.size() && s[pos] != ',' && s[pos] != ']') ++pos;
      row.push_back(Rational::parse(s.substr(start, pos - start)));
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    rows.push_back(std::move(row));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  if (pos != s.size()) throw ParseError("trailing characters after matrix literal", line, 1);
  return Mat<Rational>::from_rows(rows);
}

}  // namespace

Representation parse_representation(const std::string& text, const Presentation& pres) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int dim = -1;
  std::optional<LieAlgebraData> lie;
  bool inline_lie = false;
  std::vector<Mat<Rational>> inline_basis;
  std::map<int, Mat<Rational>> images;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string lineText = raw;
    size_t hash = lineText.find('#');
    if (hash != std::string::npos) lineText = lineText.substr(0, hash);
    std::istringstream ls(lineText);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "dim") {
      if (!(ls >> dim) || dim < 1) throw ParseError("bad dim line", lineno, 1);
    } else if (head == "liealg") {
      std::string name;
      if (!(ls >> name)) throw ParseError("liealg line missing name", lineno, 1);
      if (name == "inline") {
        inline_lie = true;
      } else {
        lie = LieAlgebraData::by_name(name);
        if (!lie) throw ParseError("unknown Lie algebra '" + name + "'", lineno, 1);
      }
    } else if (head == "basis") {
      if (!inline_lie) throw ParseError("basis line without 'liealg inline'", lineno, 1);
      std::string rest;
      std::getline(ls, rest);
      inline_basis.push_back(parse_matrix_literal(rest, lineno));
    } else if (head == "gen") {
      std::string name, eq;
      if (!(ls >> name >> eq) || eq != "=")
        throw ParseError("gen line must be 'gen <id> = [[..],..]'", lineno, 1);
      int g = pres.gen_index(name);
      if (g < 0) throw ParseError("unknown generator '" + name + "'", lineno, 1);
      if (images.count(g)) throw ParseError("duplicate image for generator '" + name + "'", lineno, 1);
      std::string rest;
      std::getline(ls, rest);
      images[g] = parse_matrix_literal(rest, lineno);
    } else {
      throw ParseError("unknown directive '" + head + "'", lineno, 1);
    }
  }
  if (dim < 1) throw ParseError("missing dim line");
  if (inline_lie) {
    if (inline_basis.empty()) throw ParseError("liealg inline with no basis lines");
    lie = LieAlgebraData("inline", dim, inline_basis);
  }
  if (!lie) throw ParseError("missing liealg line");
  if (lie->mat_dim() != dim) throw ParseError("liealg dimension disagrees with dim line");
  std::vector<Mat<Rational>> ordered;
  for (int g = 0; g < pres.ngens(); ++g) {
    auto it = images.find(g);
    if (it == images.end())
      throw ParseError("no image given for generator '" + pres.gens[static_cast<size_t>(g)] + "'");
    ordered.push_back(it->second);
  }
  return Representation(pres, *lie, std::move(ordered));
}

}  // namespace repgerm
