#include "doctest.h"

#include "repgerm/group.hpp"
#include "support/fixtures.hpp"

using namespace repgerm;
using namespace repgerm::testfix;

TEST_CASE("presentation parsing") {
  auto p = parse_presentation("gens a b\nrel a b a^-1 b^-1\n");
  CHECK(p.gens == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 4);

  auto free2 = parse_presentation("gens a b\n");
  CHECK(free2.gens.size() == 2);
  CHECK(free2.relators.empty());

  CHECK_THROWS_AS(parse_presentation("rel a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a\nrel b\n"), ParseError);
  try {
    parse_presentation("gens a\nrel a q\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 7);
  }

  // comments and exponent expansion
  auto q = parse_presentation("# heading\ngens a\nrel a^2  # square\n");
  CHECK(q.relators[0].size() == 2);
}

TEST_CASE("free reduction is idempotent and word algebra behaves") {
  Word w({{0, 1}, {0, -1}, {1, 1}});
  CHECK(w.size() == 1);
  Word again(w.letters());
  CHECK(again == w);
  CHECK((w * w.inverse()).is_identity());
  Word aa({{0, 1}, {0, 1}});
  CHECK((aa * aa.inverse()).is_identity());
}

TEST_CASE("fox derivatives") {
  // d(aba^-1b^-1)/da = 1 - aba^-1
  Word r({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
  auto d = fox_derivative(r, 0);
  WordCombination expect;
  expect[Word()] = 1;
  expect[Word({{0, 1}, {1, 1}, {0, -1}})] = -1;
  CHECK(d == expect);

  // da/db = 0
  CHECK(fox_derivative(Word::generator(0), 1).empty());

  // d(a^2)/da = 1 + a
  Word a2({{0, 1}, {0, 1}});
  auto d2 = fox_derivative(a2, 0);
  WordCombination expect2;
  expect2[Word()] = 1;
  expect2[Word::generator(0)] = 1;
  CHECK(d2 == expect2);
}

TEST_CASE("fox fundamental identity on fixture relators") {
  // sum_g (dr/dg)(g - 1) = r - 1 in the group ring
  auto check_identity = [](const Presentation& p) {
    for (const Word& r : p.relators) {
      WordCombination sum;
      auto add = [&sum](const Word& w, long c) {
        sum[w] += c;
        if (sum[w] == 0) sum.erase(w);
      };
      for (int g = 0; g < p.ngens(); ++g)
        for (const auto& [w, c] : fox_derivative(r, g)) {
          add(w * Word::generator(g), c);
          add(w, -c);
        }
      WordCombination expect;
      expect[r] = 1;
      expect[Word()] = -1;
      if (r.is_identity()) expect.clear();
      CHECK(sum == expect);
    }
  };
  check_identity(z2_presentation());
  check_identity(genus2_presentation());
  check_identity(heisenberg_presentation());
  check_identity(zmod2_presentation());
  check_identity(s3_presentation());
}

TEST_CASE("lie algebra data: builtins verified, bad basis rejected") {
  auto sl2 = LieAlgebraData::sl(2);
  CHECK(sl2.dim() == 3);
  CHECK(sl2.check_structure());
  auto gl3 = LieAlgebraData::gl(3);
  CHECK(gl3.dim() == 9);
  CHECK(LieAlgebraData::by_name("sl4").has_value());
  CHECK(LieAlgebraData::by_name("so3") == std::nullopt);

  // Not bracket-closed: span{E12} misses [E12, E21].
  Mat<Rational> e12(2, 2), e21(2, 2);
  e12.at(0, 1) = Rational(1);
  e21.at(1, 0) = Rational(1);
  CHECK_THROWS_AS(LieAlgebraData("bad", 2, {e12, e21}), ValidationError);
  // A single nilpotent line is fine (abelian).
  CHECK_NOTHROW(LieAlgebraData("n1", 2, {e12}));
}

TEST_CASE("word evaluation") {
  auto pres = z2_presentation();
  auto rep = trivial_rep(pres, LieAlgebraData::sl(2));
  CHECK(rep.evaluate(pres.relators[0]) == Mat<Rational>::identity(2));
  CHECK(rep.evaluate(Word({{0, 1}, {0, -1}})) == Mat<Rational>::identity(2));

  auto z2p = zmod2_presentation();
  Representation mod2(z2p, LieAlgebraData::gl(2), {diag2(1, -1)});
  CHECK(mod2.evaluate(Word({{0, 1}, {0, 1}})) == Mat<Rational>::identity(2));
}

TEST_CASE("ad action") {
  auto pres = z2_presentation();
  auto rep = trivial_rep(pres, LieAlgebraData::sl(2));
  CHECK(rep.ad_word(Word({{0, 1}, {1, -1}})) == Mat<Rational>::identity(3));

  // a -> diag(1,-1) on sl2 basis {e, f, h}: e -> -e, f -> -f, h -> h.
  auto z2p = zmod2_presentation();
  Representation mod2(z2p, LieAlgebraData::sl(2), {diag2(1, -1)});
  auto ad = mod2.ad_gen(0);
  Mat<Rational> expect(3, 3);
  expect.at(0, 0) = Rational(-1);
  expect.at(1, 1) = Rational(-1);
  expect.at(2, 2) = Rational(1);
  CHECK(ad == expect);

  // Ad(uv) = Ad(u) Ad(v) on random words.
  auto s3 = s3_permutation_rep();
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Letter> lu, lv;
    for (int i = 0; i < 4; ++i) {
      lu.push_back({static_cast<int>(rng.integer(0, 1)), rng.chance(1, 2) ? 1 : -1});
      lv.push_back({static_cast<int>(rng.integer(0, 1)), rng.chance(1, 2) ? 1 : -1});
    }
    Word u(lu), v(lv);
    CHECK(s3.ad_word(u * v) == s3.ad_word(u) * s3.ad_word(v));
  }
}

TEST_CASE("check_representation and finite image enumeration") {
  auto z2p = zmod2_presentation();
  auto triv = check_representation(z2p, LieAlgebraData::sl(2),
                                   {Mat<Rational>::identity(2)}, 100);
  CHECK(triv.valid());
  CHECK(triv.image_order == 1);

  auto good = check_representation(z2p, LieAlgebraData::gl(2), {diag2(1, -1)}, 100);
  CHECK(good.valid());
  CHECK(good.image_order == 2);

  auto bad = check_representation(z2p, LieAlgebraData::gl(2), {diag2(2, 1)}, 0);
  CHECK_FALSE(bad.valid());
  CHECK_FALSE(bad.relator_ok[0].second);

  auto s3rep = check_representation(s3_presentation(), LieAlgebraData::gl(3),
                                    {permutation_matrix({1, 0, 2}), permutation_matrix({0, 2, 1})},
                                    100);
  CHECK(s3rep.valid());
  CHECK(s3rep.image_order == 6);

  // Infinite image runs into the bound.
  Mat<Rational> shear(2, 2);
  shear.at(0, 0) = Rational(1);
  shear.at(0, 1) = Rational(1);
  shear.at(1, 1) = Rational(1);
  auto unbounded = check_representation(free_group(1), LieAlgebraData::gl(2), {shear}, 50);
  CHECK(unbounded.valid());
  CHECK(unbounded.closure_bounded_out);
  CHECK_FALSE(unbounded.image_order.has_value());
}

TEST_CASE("representation constructor rejects invalid data") {
  auto z2p = zmod2_presentation();
  CHECK_THROWS_AS(Representation(z2p, LieAlgebraData::gl(2), {diag2(2, 1)}), ValidationError);
  Mat<Rational> singular(2, 2);
  singular.at(0, 0) = Rational(1);
  CHECK_THROWS_AS(Representation(free_group(1), LieAlgebraData::gl(2), {singular}),
                  ValidationError);
  // Conjugation leaving the span: diag(2,1) acting on span{E12} scales it,
  // fine; but a rotation-like image on span{E11} leaves it.
  Mat<Rational> swap(2, 2);
  swap.at(0, 1) = Rational(1);
  swap.at(1, 0) = Rational(1);
  Mat<Rational> e11(2, 2);
  e11.at(0, 0) = Rational(1);
  CHECK_THROWS_AS(Representation(free_group(1), LieAlgebraData("line", 2, {e11}), {swap}),
                  ValidationError);
}

TEST_CASE("artin word evaluation reduces mod m to the plain evaluation") {
  auto pres = s3_presentation();
  auto rep = s3_permutation_rep();
  auto alg = ArtinAlgebra::make(1, 3);
  auto t = ArtinElem<Rational>::variable(alg, 0);

  std::map<int, std::vector<ArtinElem<Rational>>> pert;
  std::vector<ArtinElem<Rational>> u(static_cast<size_t>(rep.lie_dim()));
  u[0] = t;
  u[4] = Rational(-2) * t;
  pert[0] = u;

  Word w({{0, 1}, {1, 1}, {0, -1}, {1, 1}});
  auto over_artin = rep.evaluate_artin(w, alg, pert);
  CHECK(artin_reduce_mod_m(over_artin) == rep.evaluate(w));

  // Perturbation with a constant term is rejected.
  std::map<int, std::vector<ArtinElem<Rational>>> badpert;
  std::vector<ArtinElem<Rational>> v(static_cast<size_t>(rep.lie_dim()));
  v[0] = ArtinElem<Rational>::constant(alg, Rational(1));
  badpert[0] = v;
  CHECK_THROWS_AS(rep.evaluate_artin(w, alg, badpert), std::invalid_argument);
}

TEST_CASE("representation file parsing") {
  auto pres = zmod2_presentation();
  auto rep = parse_representation("dim 2\nliealg gl2\ngen a = [[1,0],[0,-1]]\n", pres);
  CHECK(rep.image(0) == diag2(1, -1));
  CHECK_THROWS_AS(parse_representation("dim 2\nliealg gl2\n", pres), ParseError);
  CHECK_THROWS_AS(parse_representation("liealg gl2\ngen a = [[1,0],[0,-1]]\n", pres), ParseError);
  CHECK_THROWS_AS(
      parse_representation("dim 2\nliealg nope\ngen a = [[1,0],[0,-1]]\n", pres), ParseError);

  // Inline Lie algebra: the diagonal torus of gl2.
  auto rep2 = parse_representation(
      "dim 2\nliealg inline\nbasis [[1,0],[0,0]]\nbasis [[0,0],[0,1]]\n"
      "gen a = [[1,0],[0,-1]]\n",
      pres);
  CHECK(rep2.lie_dim() == 2);
}
