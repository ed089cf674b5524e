#pragma once

// Shared fixtures and deterministic generators for the test suites.

#include "repgerm/group.hpp"

#include <random>

namespace repgerm::testfix {

// Deterministic small rationals built on raw engine outputs only; the
// standard distributions are implementation-defined.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}
  long integer(long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<unsigned long long>(hi - lo + 1));
  }
  Rational rational(long span = 3, long maxden = 2) {
    return Rational(integer(-span, span), integer(1, maxden));
  }
  bool chance(long num, long den) { return integer(0, den - 1) < num; }
};

inline Presentation free_group(int rank) {
  Presentation p;
  for (int i = 0; i < rank; ++i) p.gens.push_back(std::string(1, static_cast<char>('a' + i)));
  return p;
}

inline Presentation z2_presentation() {
  return parse_presentation("gens a b\nrel a b a^-1 b^-1\n");
}

inline Presentation genus2_presentation() {
  return parse_presentation(
      "gens a1 b1 a2 b2\n"
      "rel a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1\n");
}

inline Presentation heisenberg_presentation() {
  return parse_presentation(
      "gens a b c\n"
      "rel a b a^-1 b^-1 c^-1\n"
      "rel a c a^-1 c^-1\n"
      "rel b c b^-1 c^-1\n");
}

inline Presentation zmod2_presentation() { return parse_presentation("gens a\nrel a a\n"); }

inline Presentation s3_presentation() {
  return parse_presentation("gens s t\nrel s s\nrel t t\nrel s t s t s t\n");
}

inline Representation trivial_rep(const Presentation& pres, LieAlgebraData lie) {
  std::vector<Mat<Rational>> images(pres.gens.size(), Mat<Rational>::identity(lie.mat_dim()));
  return Representation(pres, std::move(lie), std::move(images));
}

inline Mat<Rational> diag2(long a, long b) {
  Mat<Rational> m(2, 2);
  m.at(0, 0) = Rational(a);
  m.at(1, 1) = Rational(b);
  return m;
}

inline Mat<Rational> permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Mat<Rational> m(n, n);
  for (int j = 0; j < n; ++j) m.at(perm[static_cast<size_t>(j)], j) = Rational(1);
  return m;
}

inline Representation s3_permutation_rep() {
  Presentation p = s3_presentation();
  std::vector<Mat<Rational>> images{permutation_matrix({1, 0, 2}),
                                    permutation_matrix({0, 2, 1})};
  return Representation(p, LieAlgebraData::gl(3), std::move(images));
}

}  // namespace repgerm::testfix
