#include "doctest.h"

#include "repgerm/artin.hpp"
#include "repgerm/exact.hpp"
#include "repgerm/linalg.hpp"

#include <random>

using namespace repgerm;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

// Deterministic small rationals; avoids distribution portability issues.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}
  long integer(long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<unsigned long long>(hi - lo + 1));
  }
  Rational rational(long span = 4, long maxden = 3) {
    return Rational(integer(-span, span), integer(1, maxden));
  }
};

}  // namespace

TEST_CASE("rational arithmetic and canonical form") {
  CHECK(rq(2, 4) == rq(1, 2));
  CHECK(rq(-2, -4) == rq(1, 2));
  CHECK(rq(2, -4).str() == "-1/2");
  CHECK((rq(1, 3) + rq(1, 6)) == rq(1, 2));
  CHECK((rq(3, 7) * rq(7, 3)).is_one());
  CHECK(Rational::parse("22/7") == rq(22, 7));
  CHECK(Rational::parse("-6/4") == rq(-3, 2));
  CHECK(Rational::parse("5") == rq(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK(rq(7, 2).str() == "7/2");
  CHECK(rq(-3).str() == "-3");
}

TEST_CASE("gaussian rationals: conjugation involution, exact division") {
  GaussianRational z(rq(1, 2), rq(-3, 4));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()) == GaussianRational(z.norm()));
  GaussianRational w(rq(2), rq(1));
  CHECK((z / w) * w == z);
  CHECK(GaussianRational::parse("1/2-3/4*i") == z);
  CHECK(GaussianRational::parse("i") == GaussianRational::i());
  CHECK(GaussianRational::parse("-2*i") == GaussianRational(rq(0), rq(-2)));
  CHECK(GaussianRational::parse("3") == GaussianRational(rq(3)));
  CHECK(z.str() == "1/2-3/4*i");
  CHECK(GaussianRational(rq(0), rq(1)).str() == "i");
}

TEST_CASE("rref and kernel are canonical") {
  auto m = Mat<Rational>::from_rows({{rq(1), rq(2), rq(3)}, {rq(2), rq(4), rq(6)}, {rq(1), rq(0), rq(1)}});
  auto r = rref(m);
  CHECK(r.mat.rows() == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  // Kernel vector with free coordinate normalized to 1.
  CHECK(ker[0][2] == rq(1));
  CHECK(m.apply(ker[0]) == std::vector<Rational>{rq(0), rq(0), rq(0)});
}

TEST_CASE("solve_linear: unique, none, and affine families") {
  // M = I, b = v -> unique solution v.
  auto id = Mat<Rational>::identity(3);
  std::vector<Rational> v{rq(1), rq(-2), rq(5, 3)};
  auto s = solve_linear(id, v);
  REQUIRE(s.has_value());
  CHECK(s->particular == v);
  CHECK(s->kernel.empty());

  // M = 0, b != 0 -> none.
  Mat<Rational> zero(2, 2);
  CHECK_FALSE(solve_linear(zero, {rq(1), rq(0)}).has_value());

  // M = [[1,1]], b = [1] -> particular (1,0), kernel span{(1,-1)}.
  auto m = Mat<Rational>::from_rows({{rq(1), rq(1)}});
  auto t = solve_linear(m, {rq(1)});
  REQUIRE(t.has_value());
  CHECK(t->particular == std::vector<Rational>{rq(1), rq(0)});
  REQUIRE(t->kernel.size() == 1);
  auto k = t->kernel[0];
  CHECK(k[0] == -k[1]);
  CHECK_FALSE(k[0].is_zero());
}

TEST_CASE("subspace calculus on coordinate spans") {
  auto e1 = std::vector<Rational>{rq(1), rq(0)};
  auto e2 = std::vector<Rational>{rq(0), rq(1)};
  auto U = Subspace<Rational>::span(2, {e1});
  auto V = Subspace<Rational>::span(2, {e2});
  CHECK(intersect(U, V).dim() == 0);
  CHECK((U + V) == Subspace<Rational>::full(2));
  auto q3 = Subspace<Rational>::full(3);
  auto ue1 = Subspace<Rational>::span(3, {{rq(1), rq(0), rq(0)}});
  CHECK(quotient_dim(q3, ue1) == 2);
}

TEST_CASE("subspace canonical form: equal sets, identical bases") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Rational>> gen;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> v;
      for (int j = 0; j < 5; ++j) v.push_back(rng.rational());
      gen.push_back(v);
    }
    auto U = Subspace<Rational>::span(5, gen);
    // Same span, different generators: random invertible recombination.
    std::vector<std::vector<Rational>> gen2;
    for (int i = 0; i < 4; ++i) {
      std::vector<Rational> v(5);
      for (const auto& g : gen) {
        Rational c = rng.rational();
        for (int j = 0; j < 5; ++j) v[j] += c * g[j];
      }
      gen2.push_back(v);
    }
    auto W = Subspace<Rational>::span(5, gen2);
    CHECK(U.contains(W));
    if (U.dim() == W.dim()) CHECK(U == W);
  }
}

TEST_CASE("artin algebra dimension is the binomial count") {
  // dim k[t1..ts]/m^c = C(s + c - 1, s)
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int s = 1; s <= 3; ++s)
    for (int c = 1; c <= 5; ++c) {
      auto alg = ArtinAlgebra::make(s, c);
      CHECK(alg->dim() == binom(s + c - 1, s));
    }
}

TEST_CASE("artin multiplication truncates at the cut") {
  auto a2 = ArtinAlgebra::make(1, 2);
  auto t = ArtinElem<Rational>::variable(a2, 0);
  CHECK((t * t).is_zero());  // t*t in Q[t]/t^2 -> 0

  auto a3 = ArtinAlgebra::make(1, 3);
  auto one = ArtinElem<Rational>::constant(a3, rq(1));
  auto t3 = ArtinElem<Rational>::variable(a3, 0);
  auto prod = (one + t3) * (one - t3);  // (1+t)(1-t) in Q[t]/t^3 -> 1 - t^2
  CHECK(prod == one - t3 * t3);
  CHECK(prod.str() == "1 - t^2");

  auto m3 = ArtinAlgebra::make(2, 3);
  auto t1 = ArtinElem<Rational>::variable(m3, 0);
  auto t2 = ArtinElem<Rational>::variable(m3, 1);
  auto sq = (t1 + t2) * (t1 + t2);  // t1^2 + 2 t1 t2 + t2^2
  CHECK(sq == t1 * t1 + rq(2) * (t1 * t2) + t2 * t2);
  CHECK_THROWS_AS((void)(ArtinElem<Rational>::variable(a3, 0) * t1), std::invalid_argument);
}

TEST_CASE("artin ring axioms hold exactly on random triples") {
  Rng rng(11);
  auto alg = ArtinAlgebra::make(2, 4);
  auto random_elem = [&] {
    ArtinElem<Rational> e(alg);
    for (int i = 0; i < alg->dim(); ++i)
      if (rng.integer(0, 2) == 0)
        e += ArtinElem<Rational>::monomial_term(alg, i, rng.rational());
    return e;
  };
  for (int trial = 0; trial < 25; ++trial) {
    auto x = random_elem(), y = random_elem(), z = random_elem();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
  }
}

TEST_CASE("matrix exp/log over artin algebras") {
  SUBCASE("exp(0) = I, log(I) = 0") {
    auto alg = ArtinAlgebra::make(1, 4);
    ArtinMat<Rational> z(2, 2);
    CHECK(artin_exp(alg, z) == artin_identity<Rational>(alg, 2));
    CHECK(artin_log(alg, artin_identity<Rational>(alg, 2)).is_zero());
  }
  SUBCASE("square-zero N: exp(tN) = I + tN, log(I + tN) = tN") {
    auto alg = ArtinAlgebra::make(1, 3);
    auto t = ArtinElem<Rational>::variable(alg, 0);
    ArtinMat<Rational> n(2, 2);
    n.at(0, 1) = t;  // N = E12 scaled by t, N^2 = 0
    auto e = artin_exp(alg, n);
    CHECK(e == artin_identity<Rational>(alg, 2) + n);
    CHECK(artin_log(alg, e) == n);
  }
  SUBCASE("exp(tX) exp(-tX) = I and log(exp(tX)) = tX for random X") {
    Rng rng(13);
    for (int c : {4, 5}) {
      auto alg = ArtinAlgebra::make(1, c);
      auto t = ArtinElem<Rational>::variable(alg, 0);
      for (int trial = 0; trial < 6; ++trial) {
        ArtinMat<Rational> x(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            x.at(i, j) = rng.rational() * t;
        auto e = artin_exp(alg, x);
        auto einv = artin_exp(alg, -x);
        CHECK(e * einv == artin_identity<Rational>(alg, 3));
        CHECK(artin_log(alg, e) == x);
        CHECK(artin_exp(alg, artin_log(alg, e)) == e);
      }
    }
  }
  SUBCASE("rejects entries outside the maximal ideal") {
    auto alg = ArtinAlgebra::make(1, 3);
    ArtinMat<Rational> m(1, 1);
    m.at(0, 0) = ArtinElem<Rational>::constant(alg, rq(1));
    CHECK_THROWS_AS(artin_exp(alg, m), std::invalid_argument);
    ArtinMat<Rational> u(1, 1);
    u.at(0, 0) = ArtinElem<Rational>::constant(alg, rq(2));
    CHECK_THROWS_AS(artin_log(alg, u), std::invalid_argument);
  }
}

TEST_CASE("exp/log mutually inverse for every order c <= 6") {
  Rng rng(17);
  for (int c = 1; c <= 6; ++c) {
    auto alg = ArtinAlgebra::make(1, c);
    auto t = ArtinElem<Rational>::variable(alg, 0);
    ArtinMat<Rational> x(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) x.at(i, j) = rng.rational(2, 2) * t;
    auto e = artin_exp(alg, x);
    CHECK(artin_log(alg, e) == x);
  }
}
