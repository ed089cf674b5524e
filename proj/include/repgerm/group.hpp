#pragma once

// Finitely presented groups, Fox calculus, and matrix representations with a
// bracket-closed Lie subalgebra: the inputs (Gamma, G, g, rho).

#include "repgerm/artin.hpp"
#include "repgerm/exact.hpp"
#include "repgerm/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repgerm {

struct Letter {
  int gen;
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators of a presentation.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : ls_(std::move(letters)) { reduce(); }

  static Word generator(int g) { return Word({Letter{g, 1}}); }

  const std::vector<Letter>& letters() const { return ls_; }
  size_t size() const { return ls_.size(); }
  bool is_identity() const { return ls_.empty(); }

  Word inverse() const {
    std::vector<Letter> r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.push_back({it->gen, -it->sign});
    return Word(std::move(r));
  }
  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> r = a.ls_;
    r.insert(r.end(), b.ls_.begin(), b.ls_.end());
    return Word(std::move(r));
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    if (a.ls_.size() != b.ls_.size()) return a.ls_.size() < b.ls_.size();
    for (size_t i = 0; i < a.ls_.size(); ++i) {
      if (a.ls_[i].gen != b.ls_[i].gen) return a.ls_[i].gen < b.ls_[i].gen;
      if (a.ls_[i].sign != b.ls_[i].sign) return a.ls_[i].sign < b.ls_[i].sign;
    }
    return false;
  }

  Word prefix(size_t len) const {
    return Word(std::vector<Letter>(ls_.begin(), ls_.begin() + static_cast<long>(len)));
  }

  std::string str(const std::vector<std::string>& names) const;

private:
  void reduce() {
    std::vector<Letter> out;
    for (const Letter& l : ls_) {
      if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
        out.pop_back();
      else
        out.push_back(l);
    }
    ls_ = std::move(out);
  }
  std::vector<Letter> ls_;
};

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;

  int gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name) return static_cast<int>(i);
    return -1;
  }
  int ngens() const { return static_cast<int>(gens.size()); }
  int nrels() const { return static_cast<int>(relators.size()); }
};

/// Grammar: a `gens <id>...` line, then `rel <id|id^k>...` lines; '#' comments.
Presentation parse_presentation(const std::string& text);

/// Formal integer combination of words: the free-derivative value.
using WordCombination = std::map<Word, long>;

/// Fox derivative of w with respect to generator g:
/// d(uv) = du + u dv, dg/dg = 1, d(g^-1)/dg = -g^-1, dh/dg = 0.
WordCombination fox_derivative(const Word& w, int g);

// ---------------------------------------------------------------------------

/// Matrix Lie algebra data: basis b_1..b_l of d x d matrices, closed under
/// commutators, with structure constants [b_i, b_j] = sum_k c^k_ij b_k.
class LieAlgebraData {
public:
  LieAlgebraData() = default;
  /// Builds structure constants; throws if the basis is dependent or not
  /// bracket-closed.
  LieAlgebraData(std::string name, int mat_dim, std::vector<Mat<Rational>> basis);

  static LieAlgebraData gl(int d);
  static LieAlgebraData sl(int d);
  /// "gl2".."gl4", "sl2".."sl4"
  static std::optional<LieAlgebraData> by_name(const std::string& name);

  const std::string& name() const { return name_; }
  int mat_dim() const { return mat_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Mat<Rational>& basis_matrix(int i) const { return basis_[static_cast<size_t>(i)]; }

  /// Sparse structure constants of [b_i, b_j].
  const std::vector<std::pair<int, Rational>>& bracket_coeffs(int i, int j) const {
    return bracket_[static_cast<size_t>(i) * basis_.size() + static_cast<size_t>(j)];
  }
  /// Bracket of coordinate vectors.
  std::vector<Rational> bracket_vec(const std::vector<Rational>& u,
                                    const std::vector<Rational>& v) const;

  Mat<Rational> matrix_from_coords(const std::vector<Rational>& u) const;
  std::optional<std::vector<Rational>> coords_from_matrix(const Mat<Rational>& m) const;

  /// Structure constants are antisymmetric and satisfy Jacobi (verified at
  /// construction; re-checkable for tests).
  bool check_structure() const;

private:
  std::string name_;
  int mat_dim_ = 0;
  std::vector<Mat<Rational>> basis_;
  // Flattened [i*l + j] -> sparse coefficients.
  std::vector<std::vector<std::pair<int, Rational>>> bracket_;
  Subspace<Rational> span_;  // of vectorized basis matrices
};

// ---------------------------------------------------------------------------

struct RepReport {
  std::vector<std::pair<int, bool>> relator_ok;  // relator index -> holds
  std::vector<std::pair<int, bool>> ad_ok;       // generator index -> basis span preserved
  std::optional<long> image_order;               // when closure terminated under the bound
  bool closure_bounded_out = false;
  bool valid() const {
    for (auto& [i, ok] : relator_ok)
      if (!ok) return false;
    for (auto& [i, ok] : ad_ok)
      if (!ok) return false;
    return true;
  }
};

/// rho: Gamma -> G with G given by (matrix size, Lie basis, generator images).
class Representation {
public:
  /// Validates: images invertible, Ad-closure of the Lie span, relators map
  /// to the identity. Throws ValidationError naming the failure.
  Representation(Presentation pres, LieAlgebraData lie, std::vector<Mat<Rational>> images);

  const Presentation& presentation() const { return pres_; }
  const LieAlgebraData& lie() const { return lie_; }
  int mat_dim() const { return lie_.mat_dim(); }
  int lie_dim() const { return lie_.dim(); }

  const Mat<Rational>& image(int g) const { return images_[static_cast<size_t>(g)]; }
  const Mat<Rational>& image_inverse(int g) const { return inverses_[static_cast<size_t>(g)]; }
  /// l x l matrix of v -> rho(g) v rho(g)^-1 on the Lie basis.
  const Mat<Rational>& ad_gen(int g) const { return ad_[static_cast<size_t>(g)]; }
  const Mat<Rational>& ad_gen_inverse(int g) const { return ad_inv_[static_cast<size_t>(g)]; }

  Mat<Rational> evaluate(const Word& w) const;
  /// Ad(rho(w)): multiplicative in w.
  Mat<Rational> ad_word(const Word& w) const;

  /// Evaluate w with perturbed generators g -> exp(u_g) rho(g) over an Artin
  /// algebra; u_g is given by Lie-basis coordinates with m-valued entries.
  /// An empty perturbation map evaluates the plain rho over the algebra.
  ArtinMat<Rational> evaluate_artin(
      const Word& w, const ArtinPtr& alg,
      const std::map<int, std::vector<ArtinElem<Rational>>>& perturbation) const;

private:
  Presentation pres_;
  LieAlgebraData lie_;
  std::vector<Mat<Rational>> images_, inverses_;
  std::vector<Mat<Rational>> ad_, ad_inv_;
};

/// Non-throwing validity report; optionally enumerates the image group up to
/// `finite_image_bound` elements (0 = skip).
RepReport check_representation(const Presentation& pres, const LieAlgebraData& lie,
                               const std::vector<Mat<Rational>>& images,
                               long finite_image_bound = 0);

/// Representation file: `dim d`, `liealg <name>|inline` (+ `basis [[..],..]`
/// lines), `gen <id> = [[..],[..]]` per generator.
Representation parse_representation(const std::string& text, const Presentation& pres);

}  // namespace repgerm
