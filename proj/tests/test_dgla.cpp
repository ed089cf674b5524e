#include "doctest.h"

#include "repgerm/bch.hpp"
#include "repgerm/equivariant.hpp"
#include "repgerm/io.hpp"
#include "repgerm/mc.hpp"
#include "repgerm/truncation.hpp"
#include "support/dgla_fixtures.hpp"

#include <set>

using namespace repgerm;
using namespace repgerm::testfix;

namespace {

/// sl2 placed in degree 0, weight 0 (d = 0), directly from the constants.
WDGLA sl2_degree0() {
  auto g = AbstractLie::sl2();
  std::vector<WBasisElement> basis;
  for (int i = 0; i < g.dim; ++i) basis.push_back({"u" + std::to_string(i), 0, 0});
  std::map<std::pair<int, int>, SparseVec> br(g.bracket.begin(), g.bracket.end());
  return WDGLA(std::move(basis), Mat<Rational>(g.dim, g.dim), std::move(br));
}

WDGLA abelian_line(int degree, int weight) {
  return WDGLA({{"z", degree, weight}}, Mat<Rational>(1, 1), {});
}

}  // namespace

TEST_CASE("dgla axiom checks") {
  SUBCASE("abelian passes") {
    auto rep = check_dgla_axioms(abelian_line(1, 1));
    CHECK(rep.pass());
  }
  SUBCASE("sl2 in degree 0 passes") {
    CHECK(check_dgla_axioms(sl2_degree0()).pass());
  }
  SUBCASE("corrupted Jacobi is reported") {
    auto g = AbstractLie::sl2();
    std::map<std::pair<int, int>, SparseVec> br(g.bracket.begin(), g.bracket.end());
    br[{1, 2}] = {{1, Rational(2)}, {2, Rational(1)}};  // corrupt [f,h]
    br.erase({2, 1});  // let the constructor refill the mirror consistently
    std::vector<WBasisElement> basis{{"e", 0, 0}, {"f", 0, 0}, {"h", 0, 0}};
    WDGLA bad(std::move(basis), Mat<Rational>(3, 3), std::move(br));
    auto rep = check_dgla_axioms(bad);
    CHECK_FALSE(rep.pass());
    bool jacobi = false;
    for (const auto& v : rep.violations) jacobi = jacobi || v.axiom == "jacobi";
    CHECK(jacobi);
  }
}

TEST_CASE("tensor construction") {
  SUBCASE("ground field in degree 0 gives back g") {
    auto A = free_dga({}, 0);  // just the unit
    auto L = tensor_dgla(A, AbstractLie::sl2());
    CHECK(L.dim() == 3);
    CHECK(check_dgla_axioms(L).pass());
    // bracket of (1 (x) e) and (1 (x) f) is (1 (x) h)
    std::vector<Rational> e{Rational(1), Rational(0), Rational(0)};
    std::vector<Rational> f{Rational(0), Rational(1), Rational(0)};
    auto h = L.bracket_vec(e, f);
    CHECK(h == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
  }
  SUBCASE("torus cohomology tensor sl2: degrees (0,1,2) with dims (3,6,3)") {
    auto L = torus_sl2();
    CHECK(L.dim() == 12);
    CHECK(static_cast<int>(L.degree_indices(0).size()) == 3);
    CHECK(static_cast<int>(L.degree_indices(1).size()) == 6);
    CHECK(static_cast<int>(L.degree_indices(2).size()) == 3);
    CHECK(check_dgla_axioms(L).pass());
  }
  SUBCASE("Koszul sign: degree-1 lines commute symmetrically") {
    auto L = torus_sl2();
    // [x1 (x) e, x2 (x) f] = +[x2 (x) f, x1 (x) e] for odd-degree elements.
    int i = L.index_of("x1#0");
    int j = L.index_of("x2#1");
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    std::vector<Rational> vi(static_cast<size_t>(L.dim())), vj(static_cast<size_t>(L.dim()));
    vi[static_cast<size_t>(i)] = Rational(1);
    vj[static_cast<size_t>(j)] = Rational(1);
    CHECK(L.bracket_vec(vi, vj) == L.bracket_vec(vj, vi));
    bool nonzero = false;
    for (const auto& c : L.bracket_vec(vi, vj)) nonzero = nonzero || !c.is_zero();
    CHECK(nonzero);
  }
}

TEST_CASE("cohomology") {
  SUBCASE("zero differential: H = L componentwise") {
    auto L = torus_sl2();
    auto h = cohomology(L);
    CHECK(h.dim_degree(0) == 3);
    CHECK(h.dim_degree(1) == 6);
    CHECK(h.dim_degree(2) == 3);
  }
  SUBCASE("acyclic two-term complex: H = 0") {
    Mat<Rational> d(2, 2);
    d.at(1, 0) = Rational(1);
    WDGLA L({{"x", 1, 1}, {"y", 2, 1}}, std::move(d), {});
    auto h = cohomology(L);
    CHECK(h.dim_degree(1) == 0);
    CHECK(h.dim_degree(2) == 0);
  }
}

TEST_CASE("invariants and the averaging lemma") {
  SUBCASE("trivial action returns everything") {
    auto L = torus_sl2();
    L.action["id"] = Mat<Rational>::identity(L.dim());
    CHECK(invariants(L).dim() == L.dim());
  }
  SUBCASE("Z/2 negating one line excludes it") {
    WDGLA L({{"x", 1, 1}, {"y", 1, 1}}, Mat<Rational>(2, 2), {});
    Mat<Rational> s = Mat<Rational>::identity(2);
    s.at(1, 1) = Rational(-1);
    L.action["s"] = s;
    auto inv = invariants(L);
    CHECK(inv.dim() == 1);
    CHECK(inv.elem(0).weight == 1);
  }
  SUBCASE("dim H(L^Phi) = dim H(L)^Phi on seeded equivariant instances") {
    for (unsigned long long seed = 1; seed <= 12; ++seed) {
      auto L = random_equivariant_wdgla(seed);
      REQUIRE(check_dgla_axioms(L).pass());
      auto inv = invariants(L);
      auto h_inv = cohomology(inv);
      auto fixed = fixed_cohomology_dims(L);
      std::set<std::pair<int, int>> keys;
      for (const auto& [k, v] : fixed) keys.insert(k);
      for (const auto& [k, v] : h_inv.dims) keys.insert(k);
      for (const auto& k : keys) {
        int lhs = h_inv.dim_at(k.first, k.second);
        auto it = fixed.find(k);
        int rhs = it == fixed.end() ? 0 : it->second;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("augmentation kernels") {
  SUBCASE("L = g in degree 0 with identity augmentation") {
    auto A = free_dga({}, 0);
    auto g = AbstractLie::sl2();
    auto L = tensor_dgla(A, g);
    L.augmentation = tensor_augmentation(A, g, {Rational(1)});
    auto res = augmentation_kernel(L);
    CHECK(res.surjective);
    CHECK(res.kernel.dim() == 0);
    CHECK(res.h0_dim == 0);
  }
  SUBCASE("averaged evaluation over a free Z/2 orbit") {
    // Two-point cover: the augmentation on the invariants is the average of
    // the two evaluation functionals, which is multiplicative there.
    auto base = mixed_dga({1}, {}, 2);
    auto g = AbstractLie::sl2();
    auto Lfull = permutation_equivariant(base, g, 2, {{1, 0}});
    auto [L, incl] = invariants_with_inclusion(Lfull);
    REQUIRE(check_dgla_axioms(L).pass());
    // eps(invariant v) = (1/2)(eval_0 + eval_1)(v): evaluation at point s of
    // (e_s . a0 # u) is phi(a0) u with phi the unit character of the base.
    const int nb = base.dim();
    WDGLA::Augmentation aug;
    aug.target = g;
    aug.matrix = Mat<Rational>(g.dim, L.dim());
    for (int col = 0; col < L.dim(); ++col)
      for (int row = 0; row < Lfull.dim(); ++row) {
        const Rational& c = incl.at(row, col);
        if (c.is_zero()) continue;
        int u = row % g.dim;
        int ab = (row / g.dim) % nb;        // base line
        if (Lfull.elem(row).degree != 0) continue;
        if (base.basis[static_cast<size_t>(ab)].degree != 0) continue;
        // average of the two point evaluations
        aug.matrix.at(u, col) += Rational(1, 2) * c;
      }
    aug.declared_surjective = true;
    L.augmentation = std::move(aug);
    auto res = augmentation_kernel(L);
    CHECK(res.surjective);
    CHECK(res.h0_dim == 0);  // Lemma: surjective augmentation kills H^0
    CHECK(check_dgla_axioms(res.kernel).pass());
    CHECK(res.kernel.degree_indices(0).size() ==
          L.degree_indices(0).size() - static_cast<size_t>(g.dim));
  }
  SUBCASE("non-surjective augmentation withholds the conclusion") {
    auto A = free_dga({}, 0);
    auto g = AbstractLie::sl2();
    auto L = tensor_dgla(A, g);
    auto aug = tensor_augmentation(A, g, {Rational(1)});
    aug.matrix = Mat<Rational>(g.dim, L.dim());  // zero map
    L.augmentation = aug;
    auto res = augmentation_kernel(L);
    CHECK_FALSE(res.surjective);
    CHECK(res.h0_dim == 3);  // kernel is everything, H^0 = g
  }
}

TEST_CASE("maurer-cartan predicate") {
  SUBCASE("eta = 0 is MC") {
    auto L = torus_sl2();
    auto alg = ArtinAlgebra::make(1, 3);
    CHECK(is_mc(L, MCElement{alg, {}}));
  }
  SUBCASE("abelian algebra: MC iff closed") {
    Mat<Rational> d(2, 2);
    d.at(1, 0) = Rational(1);
    WDGLA L({{"x", 1, 1}, {"y", 2, 1}}, std::move(d), {});
    auto alg = ArtinAlgebra::make(1, 3);
    auto t = ArtinElem<Rational>::variable(alg, 0);
    MCElement bad{alg, {{0, t}}};
    CHECK_FALSE(is_mc(L, bad));
    WDGLA flat({{"x", 1, 1}, {"y", 2, 1}}, Mat<Rational>(2, 2), {});
    CHECK(is_mc(flat, bad));
  }
  SUBCASE("toy with [e,e] = h: eta = t e fails at order 3") {
    std::map<std::pair<int, int>, SparseVec> br;
    br[{0, 0}] = {{1, Rational(1)}};
    WDGLA L({{"e", 1, 1}, {"h", 2, 2}}, Mat<Rational>(2, 2), std::move(br));
    REQUIRE(check_dgla_axioms(L).pass());
    auto alg = ArtinAlgebra::make(1, 3);
    auto t = ArtinElem<Rational>::variable(alg, 0);
    MCElement eta{alg, {{0, t}}};
    CHECK_FALSE(is_mc(L, eta));
    // over Q[t]/t^2 the square dies
    auto alg2 = ArtinAlgebra::make(1, 2);
    MCElement eta2{alg2, {{0, ArtinElem<Rational>::variable(alg2, 0)}}};
    CHECK(is_mc(L, eta2));
  }
}

TEST_CASE("gauge action") {
  SUBCASE("alpha = 0 fixes eta; abelian gauge of 0 is -d alpha") {
    auto fix = random_gauge_fixture(3, 4);
    auto moved = gauge(fix.L, {}, fix.eta);
    CHECK(coeff_equal(moved.coeff, fix.eta.coeff));

    // Abelian: L = A (x) Q with zero bracket in degree 0 acting on eta = 0.
    auto A = mixed_dga({1}, {1}, 2);
    auto L = tensor_dgla(A, AbstractLie::abelian(1));
    auto alg = ArtinAlgebra::make(1, 4);
    Rng rng(5);
    std::vector<int> deg0;
    for (int i = 0; i < L.dim(); ++i)
      if (L.elem(i).degree == 0) deg0.push_back(i);
    auto alpha = random_coeffs(rng, alg, deg0);
    auto res = gauge(L, alpha, MCElement{alg, {}});
    auto expect = coeff_scale(Rational(-1), coeff_d(L, alpha));
    CHECK(coeff_equal(res.coeff, expect));
  }
  SUBCASE("gauge preserves MC on seeded fixtures, orders up to 5") {
    int checked = 0;
    for (unsigned long long seed = 1; seed <= 25; ++seed) {
      int order = 3 + static_cast<int>(seed % 3);  // 3..5
      auto fix = random_gauge_fixture(seed, order);
      if (!is_mc(fix.L, fix.eta)) continue;  // only claim the conditional
      ++checked;
      auto moved = gauge(fix.L, fix.alpha, fix.eta);
      CHECK(is_mc(fix.L, moved));
    }
    CHECK(checked >= 20);
  }
  SUBCASE("composition law: exp(a).(exp(b).eta) = exp(BCH(a,b)).eta over Q[t]/t^4") {
    int checked = 0;
    for (unsigned long long seed = 100; seed < 112; ++seed) {
      auto fix = random_gauge_fixture(seed, 4);
      Rng rng(seed * 13 + 1);
      std::vector<int> deg0;
      for (int i = 0; i < fix.L.dim(); ++i)
        if (fix.L.elem(i).degree == 0) deg0.push_back(i);
      auto beta = random_coeffs(rng, fix.alg, deg0, 1, 2);
      auto lhs = gauge(fix.L, fix.alpha, gauge(fix.L, beta, fix.eta));
      auto rhs = gauge(fix.L, bch(fix.L, fix.alg, fix.alpha, beta), fix.eta);
      CHECK(coeff_equal(lhs.coeff, rhs.coeff));
      ++checked;
    }
    CHECK(checked == 12);
  }
}

TEST_CASE("dynkin BCH matches matrix log(exp exp) to order 5") {
  Rng rng(7);
  auto bracket = [](const ArtinMat<Rational>& a, const ArtinMat<Rational>& b) {
    return a * b - b * a;
  };
  for (int c = 2; c <= 6; ++c) {
    auto alg = ArtinAlgebra::make(2, c);
    auto t = ArtinElem<Rational>::variable(alg, 0);
    auto s = ArtinElem<Rational>::variable(alg, 1);
    ArtinMat<Rational> x(3, 3), y(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        x.at(i, j) = rng.rational(2, 2) * t;
        y.at(i, j) = rng.rational(2, 2) * s;
      }
    auto expected = artin_log(alg, artin_exp(alg, x) * artin_exp(alg, y));
    auto axpy = [&alg](ArtinMat<Rational>& acc, const Rational& coeff,
                       const ArtinMat<Rational>& term) {
      if (acc.rows() == 0) acc = ArtinMat<Rational>(term.rows(), term.cols());
      ArtinMat<Rational> scaled = term;
      for (int i = 0; i < scaled.rows(); ++i)
        for (int j = 0; j < scaled.cols(); ++j) scaled.at(i, j).scale(coeff);
      acc += scaled;
    };
    auto got = bch_dynkin<ArtinMat<Rational>>(x, y, c - 1, bracket, axpy);
    CHECK(got == expected);
  }
}

TEST_CASE("weight axioms") {
  SUBCASE("g at (0,0) with no higher part passes vacuously") {
    auto rep = check_weight_axioms(sl2_degree0());
    CHECK(rep.pass());
    CHECK(rep.h1_support.empty());
  }
  SUBCASE("a closed non-exact class at (1,3) fails with location") {
    auto L = abelian_line(1, 3);
    auto rep = check_weight_axioms(L);
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].degree == 1);
    CHECK(rep.violations[0].weight == 3);
  }
  SUBCASE("seeded conforming fixtures pass") {
    for (unsigned long long seed = 1; seed <= 8; ++seed) {
      auto L = random_conforming_wdgla(seed);
      REQUIRE(check_dgla_axioms(L).pass());
      CHECK(check_weight_axioms(L).pass());
      CHECK(L.degree_indices(0).empty());
      CHECK(L.weight_indices(0).empty());
    }
  }
  SUBCASE("decomposable differentials keep the (1,1) part closed") {
    // dx = a1 a2 with closed weight-1 generators is decomposable, so every
    // (degree 1, weight 1) basis vector must be d-closed.
    std::vector<DGAGenerator> gens{{"a1", 1, 1, {}}, {"a2", 1, 1, {}}, {"x", 1, 2, {0, 1}}};
    auto A = positive_part(free_dga(gens, 3));
    auto L = tensor_dgla(A, AbstractLie::sl2());
    REQUIRE(check_dgla_axioms(L).pass());
    for (int i : L.component(1, 1)) {
      std::vector<Rational> v(static_cast<size_t>(L.dim()));
      v[static_cast<size_t>(i)] = Rational(1);
      bool closed = true;
      for (const auto& c : L.d_apply(v)) closed = closed && c.is_zero();
      CHECK(closed);
    }
  }
}

TEST_CASE("truncation") {
  SUBCASE("nothing above weight 3: Q = L") {
    auto A = positive_part(mixed_dga({1, 2}, {}, 2));
    auto L = tensor_dgla(A, AbstractLie::sl2());
    auto res = truncate(L);
    CHECK(res.Q.dim() == L.dim());
    CHECK(res.pi_is_one_quasi_iso);
  }
  SUBCASE("a weight-5 line is dropped") {
    auto A = positive_part(mixed_dga({1}, {5}, 3));
    auto L = tensor_dgla(A, AbstractLie::abelian(1));
    auto res = truncate(L);
    for (const auto& b : res.Q.basis()) CHECK(b.weight < 5);
    CHECK(res.pi_is_one_quasi_iso);
  }
  SUBCASE("seeded conforming fixtures: shape and 1-quasi-isomorphism") {
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
      auto L = random_conforming_wdgla(seed);
      auto res = truncate(L);
      CHECK(res.pi_is_one_quasi_iso);
      CHECK(res.Q.component(1, 4).empty());
      for (const auto& b : res.Q.basis()) CHECK(b.weight <= 4);
      CHECK(check_dgla_axioms(res.Q).pass());
    }
  }
  SUBCASE("preconditions enforced") {
    CHECK_THROWS_AS(truncate(sl2_degree0()), ValidationError);
    CHECK_THROWS_AS(truncate(abelian_line(1, 3)), ValidationError);
  }
}

TEST_CASE("is_one_quasi_iso basics") {
  auto L = torus_sl2();
  DGLAMorphism id{L, L, Mat<Rational>::identity(L.dim())};
  CHECK(is_one_quasi_iso(id));

  WDGLA zero({}, Mat<Rational>(0, 0), {});
  DGLAMorphism tozero{L, zero, Mat<Rational>(0, L.dim())};
  CHECK_FALSE(is_one_quasi_iso(tozero));  // H^1(L) = 6 does not inject
}

TEST_CASE("quadratic reduction") {
  SUBCASE("abelian Q: cone is Z with no relations") {
    auto A = positive_part(mixed_dga({2, 2}, {}, 3));
    auto L = tensor_dgla(A, AbstractLie::abelian(2));
    auto Q = truncate(L).Q;
    auto red = reduce_to_quadratic(Q);
    CHECK(red.cone.relations.empty());
    CHECK(static_cast<int>(red.cone.variables.size()) == static_cast<int>(red.z21_basis.size()));
    CHECK(red.q11_zero);
    CHECK(red.eta3_forced_zero);
  }
  SUBCASE("toy Q with [x,y] = z gives the relation v1*v2") {
    // Q^1_2 = {x, y}, Q^2_4 = {z}, d = 0, [x,y] = z.
    std::map<std::pair<int, int>, SparseVec> br;
    br[{0, 1}] = {{2, Rational(1)}};
    WDGLA Q({{"x", 1, 2}, {"y", 1, 2}, {"z", 2, 4}}, Mat<Rational>(3, 3), std::move(br));
    REQUIRE(check_dgla_axioms(Q).pass());
    auto red = reduce_to_quadratic(Q);
    REQUIRE(red.cone.relations.size() == 1);
    CHECK(red.cone.relations[0] == GPoly::parse("v1*v2", red.cone.variables));
    CHECK(is_quadratic(red.cone));
    CHECK(red.cone.weights == std::vector<int>{1, 1});
  }
  SUBCASE("purity violation refuses with a located witness") {
    auto L = purity_violating_wdgla(5);
    auto Q = truncate(L).Q;
    try {
      reduce_to_quadratic(Q);
      FAIL("expected refusal");
    } catch (const ReduceRefusal& e) {
      CHECK(!e.witness.empty());
      bool nonzero = false;
      for (const auto& c : e.witness) nonzero = nonzero || !c.is_zero();
      CHECK(nonzero);
    }
  }
  SUBCASE("functor match: MC points coincide with cone points on grids") {
    for (unsigned long long seed : {2ULL, 4ULL, 9ULL}) {
      auto L = random_reduction_input(seed);
      auto Q = truncate(L).Q;
      auto red = reduce_to_quadratic(Q);
      auto alg = ArtinAlgebra::make(1, 3);
      int checked = 0, members = 0, mismatches = 0;
      for_each_grid_eta(Q, alg, grid_layer_sets(Q, 3, 30000), [&](const MCElement& eta) {
        bool mc = is_mc(Q, eta);
        bool cone = cone_side_membership(Q, red, alg, eta);
        if (mc != cone) ++mismatches;
        ++checked;
        members += mc;
      });
      CHECK(mismatches == 0);
      CHECK(checked > 0);
      CHECK(members > 0);
    }
  }
}

TEST_CASE("wdgla json round trip") {
  auto L = random_equivariant_wdgla(3);
  auto A = mixed_dga({1}, {}, 2);
  auto g = AbstractLie::sl2();
  auto L2 = tensor_dgla(A, g);
  L2.augmentation = tensor_augmentation(A, g, {Rational(1)});
  for (WDGLA* Lp : {&L, &L2}) {
    auto text = wdgla_to_json(*Lp);
    auto back = wdgla_from_json(text);
    CHECK(back.dim() == Lp->dim());
    CHECK(back.d() == Lp->d());
    CHECK(back.bracket() == Lp->bracket());
    CHECK(back.action.size() == Lp->action.size());
    CHECK(wdgla_to_json(back) == text);
  }
}

TEST_CASE("cone json round trip") {
  auto c = make_cone({"x", "y"}, {1, 1},
                     {GPoly::parse("x^2 + y^2", {"x", "y"}),
                      GPoly::parse("(1-i)*x*y", {"x", "y"})});
  auto text = cone_to_json(c);
  auto back = cone_from_json(text);
  CHECK(back.variables == c.variables);
  CHECK(back.weights == c.weights);
  CHECK(back.relations == c.relations);
  CHECK(cone_to_json(back) == text);
}
