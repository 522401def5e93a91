#include <doctest.h>

#include <algorithm>

#include "dgaut/catalog.hpp"
#include "dgaut/hopf_oracle.hpp"
#include "dgaut/quadruple.hpp"

using namespace dgaut;

namespace {

// a nontrivial central PMap on Q8: the isomorphism dual(Z2) = Z2
PMap q8_lambda(const GroupContext &ctx) {
  int z = ctx.group().center().elems[1];
  return PMap::from_dual_gen_images(ctx, {z});
}

int order2_element(const FiniteGroup &g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) return x;
  return -1;
}

}  // namespace

TEST_CASE("double algebra multiplication rules") {
  GroupContext ctx(catalog::s3());
  const FiniteGroup &g = ctx.group();
  // (e_g # 1)(e_g # 1) = e_g # 1
  for (int x = 0; x < g.order(); ++x) {
    auto b = DoubleElement::basis(ctx, x, 0);
    CHECK(b * b == b);
  }
  // (e_g # x)(e_h # y) = 0 when h != x^-1 g x
  int t = order2_element(g);
  int s = -1;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 3) s = x;
  auto a = DoubleElement::basis(ctx, s, t);
  auto b = DoubleElement::basis(ctx, s, t);  // t s t^-1 != s for these picks
  CHECK(g.conj(g.inv(t), s) != s);
  CHECK((a * b).is_zero());
  // counit and unit
  CHECK(DoubleElement::basis(ctx, 0, t).counit() == CycScalar::one(ctx.cyc()));
  CHECK(DoubleElement::basis(ctx, s, t).counit().is_zero());
  auto one = DoubleElement::unit(ctx);
  auto x = DoubleElement::basis(ctx, s, t);
  CHECK(one * x == x);
  CHECK(x * one == x);
}

TEST_CASE("bialgebra and integral axioms hold exhaustively") {
  for (auto g : {catalog::cyclic(4), catalog::s3(), catalog::q8()}) {
    GroupContext ctx(g);
    validate_double_axioms(ctx);
    validate_integral(ctx);
  }
}

TEST_CASE("quadruple to linear map: identity, bicharacter, automorphism") {
  GroupContext ctx(catalog::s3());
  const FiniteGroup &g = ctx.group();
  int n = g.order();

  auto idq = MorphQuadruple::identity(ctx);
  CHECK(idq.to_linear_map() == DoubleLinearMap::identity_map(ctx));

  // bicharacter: e_g # h -> zeta^(omega(h,g)) e_g # h
  const BicharacterGroup &bch = ctx.bch();
  REQUIRE(bch.size() == 2);
  auto b = bch.at(1);
  auto bq = MorphQuadruple::from_bicharacter(ctx, b);
  auto bm = bq.to_linear_map();
  for (int gg = 0; gg < n; ++gg)
    for (int h = 0; h < n; ++h) {
      const auto &col = bm.column(gg, h);
      REQUIRE(col.size() == 1);
      CHECK(col[0].first == gg * n + h);
      CHECK(col[0].second == CycScalar::root(ctx.cyc(), b.value(h, gg)));
    }

  // sigma-diagonal: e_g # h -> e_sigma(g) # sigma(h)
  const AutGroup &aut = ctx.aut();
  for (int a = 0; a < aut.size(); ++a) {
    auto q = MorphQuadruple::from_aut(ctx, a);
    auto m = q.to_linear_map();
    for (int gg = 0; gg < n; ++gg)
      for (int h = 0; h < n; ++h) {
        const auto &col = m.column(gg, h);
        REQUIRE(col.size() == 1);
        CHECK(col[0].first == aut.apply(a, gg) * n + aut.apply(a, h));
        CHECK(col[0].second == CycScalar::one(ctx.cyc()));
      }
  }
}

TEST_CASE("check_compatibility: constructed generators pass") {
  GroupContext q8(catalog::q8());
  CHECK(MorphQuadruple::identity(q8).check_compatibility().ok);
  CHECK(MorphQuadruple::from_lambda(q8, q8_lambda(q8)).check_compatibility().ok);
  for (unsigned long long i = 0; i < q8.bch().size(); ++i)
    CHECK(MorphQuadruple::from_bicharacter(q8, q8.bch().at(i)).check_compatibility().ok);
  const AutGroup &aut = q8.aut();
  for (int w : aut.central())
    for (int v = 0; v < aut.size(); v += 5)
      CHECK(MorphQuadruple::from_spautc_pair(q8, aut.compose(w, v), v)
                .check_compatibility()
                .ok);
}

TEST_CASE("check_compatibility: eq5 counterexample with non-central support") {
  // A = <i>, B = <j> in Q8 with a perfect Z4 pairing; v = id breaks eq5
  GroupContext ctx(catalog::q8());
  const FiniteGroup &g = ctx.group();
  int i4 = -1;
  for (int x = 0; x < 8 && i4 < 0; ++x)
    if (g.element_order(x) == 4) i4 = x;
  REQUIRE(i4 >= 0);
  int j4 = -1;
  for (int x = 0; x < 8 && j4 < 0; ++x)
    if (g.element_order(x) == 4 && g.generated_subgroup({x}).elems !=
                                       g.generated_subgroup({i4}).elems)
      j4 = x;
  REQUIRE(j4 >= 0);
  auto asub = g.generated_subgroup({i4});
  auto bsub = g.generated_subgroup({j4});
  // pairing m(i4^a, j4^b) = ab/4
  std::vector<std::vector<QMod1>> m(4, std::vector<QMod1>(4));
  auto log_of = [&g](const Subgroup &s, int gen, int x) {
    int cur = 0;
    for (int k = 0; k < 4; ++k) {
      if (cur == x) return k;
      cur = g.mul(cur, gen);
    }
    return -1;
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int ea = log_of(asub, i4, asub.elems[a]);
      int eb = log_of(bsub, j4, bsub.elems[b]);
      m[a][b] = QMod1(ea * eb, 4);
    }
  PMap p = PMap::from_pairing(ctx, asub.elems, bsub.elems, m);
  CHECK_FALSE(p.is_central());
  std::vector<int> id(8), triv(8, 0), trivend(8, 0);
  for (int x = 0; x < 8; ++x) id[x] = x;
  // ustar trivial keeps eq1 and eq6 satisfied; conjugation then breaks eq5
  MorphQuadruple q(ctx, p, trivend, triv, id);
  auto rep = q.check_compatibility();
  CHECK_FALSE(rep.ok);
  CHECK(rep.failed == "eq5");
}

TEST_CASE("check_compatibility: eq6 counterexample") {
  // p trivial, ustar = id, v = conjugation by a transposition on S3:
  // ustar o v = v is not a normal endomorphism
  GroupContext ctx(catalog::s3());
  const FiniteGroup &g = ctx.group();
  int t = order2_element(g);
  std::vector<int> id(6), triv(6, 0), conj(6);
  for (int x = 0; x < 6; ++x) {
    id[x] = x;
    conj[x] = g.conj(t, x);
  }
  MorphQuadruple q(ctx, PMap::trivial(ctx), id, triv, conj);
  auto rep = q.check_compatibility();
  CHECK_FALSE(rep.ok);
  CHECK(rep.failed == "eq6");
  // agreement with the normal-endomorphism characterization
  GroupHom uv{&g, &g, conj};
  CHECK_FALSE(is_normal_endomorphism(uv));
}

TEST_CASE("hopf oracle on structured and broken maps") {
  GroupContext ctx(catalog::s3());
  const FiniteGroup &g = ctx.group();
  int n = g.order();
  CHECK(is_hopf_morphism(DoubleLinearMap::identity_map(ctx)).ok);

  // compatibility implies the oracle passes
  auto bq = MorphQuadruple::from_bicharacter(ctx, ctx.bch().at(1));
  REQUIRE(bq.check_compatibility().ok);
  CHECK(is_hopf_morphism(bq.to_linear_map()).ok);
  CHECK(is_hopf_morphism(bq.to_linear_map(), OracleDepth::generating).ok);

  // e_g # h -> e_g # 1 breaks multiplicativity
  DoubleLinearMap broken(ctx);
  for (int gg = 0; gg < n; ++gg)
    for (int h = 0; h < n; ++h)
      broken.set_column(gg * n + h, {{gg * n, CycScalar::one(ctx.cyc())}});
  auto rep = is_hopf_morphism(broken);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure.find("multiplicativity") != std::string::npos);
  auto rep2 = is_hopf_morphism(broken, OracleDepth::generating);
  CHECK_FALSE(rep2.ok);
}

TEST_CASE("compose: closed form against linear-map composition") {
  GroupContext ctx(catalog::q8());
  const AutGroup &aut = ctx.aut();
  std::vector<MorphQuadruple> sample{
      MorphQuadruple::identity(ctx),
      MorphQuadruple::from_lambda(ctx, q8_lambda(ctx)),
      MorphQuadruple::from_bicharacter(ctx, ctx.bch().at(1)),
      MorphQuadruple::from_bicharacter(ctx, ctx.bch().at(7)),
      MorphQuadruple::from_aut(ctx, 3),
      MorphQuadruple::from_spautc_pair(ctx, aut.compose(aut.central()[1], 2), 2),
  };
  for (const auto &q2 : sample)
    for (const auto &q1 : sample) {
      auto c = compose(q2, q1);
      CHECK(c.check_compatibility().ok);
      CHECK(c.to_linear_map() == compose(q2.to_linear_map(), q1.to_linear_map()));
    }
  // compose(q, identity) = q
  for (const auto &q : sample) {
    CHECK(compose(q, MorphQuadruple::identity(ctx)) == q);
    CHECK(compose(MorphQuadruple::identity(ctx), q) == q);
  }
}

TEST_CASE("compose: bicharacters add, conjugation action w* r v") {
  GroupContext ctx(catalog::d8());
  const BicharacterGroup &bch = ctx.bch();
  REQUIRE(bch.size() == 16);
  for (unsigned long long i = 0; i < 16; i += 3)
    for (unsigned long long j = 0; j < 16; j += 5) {
      auto b1 = bch.at(i), b2 = bch.at(j);
      auto q = compose(MorphQuadruple::from_bicharacter(ctx, b1),
                       MorphQuadruple::from_bicharacter(ctx, b2));
      Bicharacter sum{&ctx.dual(), b1.m};
      for (size_t r = 0; r < sum.m.size(); ++r)
        for (size_t c = 0; c < sum.m.size(); ++c) sum.m[r][c] = b1.m[r][c] + b2.m[r][c];
      CHECK(q == MorphQuadruple::from_bicharacter(ctx, sum));
    }

  const AutGroup &aut = ctx.aut();
  const FiniteGroup &g = ctx.group();
  for (int w : aut.central())
    for (int v = 0; v < aut.size(); ++v) {
      auto sp = MorphQuadruple::from_spautc_pair(ctx, aut.compose(w, v), v);
      auto spinv = MorphQuadruple::from_spautc_pair(
          ctx, aut.inverse(aut.compose(w, v)), aut.inverse(v));
      auto r = MorphQuadruple::from_bicharacter(ctx, bch.at(9));
      auto conj = compose(spinv, compose(r, sp));
      // expect pure bicharacter with omega'(x, y) = omega(v(x), w(y))
      CHECK(conj.p().is_trivial());
      int wa = aut.compose(w, v);
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          CHECK(conj.omega(x, y) ==
                bch.at(9).value(aut.apply(v, x), aut.apply(wa, y)));
    }
}

TEST_CASE("flip: involution, transpose on bicharacters, anti-homomorphism") {
  GroupContext ctx(catalog::q8());
  auto idq = MorphQuadruple::identity(ctx);
  CHECK(idq.flip() == idq);

  auto b = ctx.bch().at(11);
  auto bq = MorphQuadruple::from_bicharacter(ctx, b);
  CHECK(bq.flip() == MorphQuadruple::from_bicharacter(ctx, b.transpose()));

  const AutGroup &aut = ctx.aut();
  std::vector<MorphQuadruple> sample{
      MorphQuadruple::from_lambda(ctx, q8_lambda(ctx)),
      MorphQuadruple::from_bicharacter(ctx, ctx.bch().at(5)),
      MorphQuadruple::from_aut(ctx, 7),
      MorphQuadruple::from_spautc_pair(ctx, aut.compose(aut.central()[2], 4), 4),
  };
  for (const auto &q : sample) {
    CHECK(q.flip().flip() == q);
    CHECK(q.flip().check_compatibility().ok);
  }
  for (const auto &a : sample)
    for (const auto &b2 : sample)
      CHECK(compose(a, b2).flip() == compose(b2.flip(), a.flip()));
}

TEST_CASE("restriction to group-likes") {
  GroupContext ctx(catalog::s3());
  const FiniteGroup &g = ctx.group();
  const DualGroup &dual = ctx.dual();
  int n = g.order();
  CHECK(MorphQuadruple::identity(ctx).restrict_grouplikes().is_identity());

  // bicharacter: (chi, g) -> (chi + omega(g, .), g)
  auto b = ctx.bch().at(1);
  auto gm = MorphQuadruple::from_bicharacter(ctx, b).restrict_grouplikes();
  for (int chi = 0; chi < dual.size(); ++chi)
    for (int x = 0; x < n; ++x) {
      int expect_chi = dual.add(chi, b.hom_index(x));
      CHECK(gm.img[chi * n + x] == expect_chi * n + x);
    }

  // lambda: (chi, g) -> (chi, p(chi) g)
  GroupContext q8(catalog::q8());
  auto lam = MorphQuadruple::from_lambda(q8, q8_lambda(q8));
  auto gml = lam.restrict_grouplikes();
  const DualGroup &dq = q8.dual();
  int nq = q8.group().order();
  for (int chi = 0; chi < dq.size(); ++chi)
    for (int x = 0; x < nq; ++x)
      CHECK(gml.img[chi * nq + x] ==
            chi * nq + q8.group().mul(lam.p().on_gchar(chi), x));
}

TEST_CASE("extraction round trip") {
  GroupContext ctx(catalog::q8());
  const AutGroup &aut = ctx.aut();
  std::vector<MorphQuadruple> sample{
      MorphQuadruple::identity(ctx),
      MorphQuadruple::from_lambda(ctx, q8_lambda(ctx)),
      MorphQuadruple::from_bicharacter(ctx, ctx.bch().at(3)),
      MorphQuadruple::from_spautc_pair(ctx, aut.compose(aut.central()[1], 9), 9),
      compose(MorphQuadruple::from_lambda(ctx, q8_lambda(ctx)),
              MorphQuadruple::from_bicharacter(ctx, ctx.bch().at(3))),
  };
  for (const auto &q : sample) {
    auto back = extract_quadruple(q.to_linear_map());
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
}

TEST_CASE("bijectivity and the integral") {
  GroupContext ctx(catalog::q8());
  auto idq = MorphQuadruple::identity(ctx);
  CHECK(quadruple_is_bijective(idq));
  CHECK(preserves_integral(idq));

  auto lam = MorphQuadruple::from_lambda(ctx, q8_lambda(ctx));
  CHECK(quadruple_is_bijective(lam));
  CHECK(preserves_integral(lam));

  // degenerate endomorphism (u r; p v) = (0 0; p 0) on an abelian group:
  // psi(e_g # h) = eps # p(e_g); not bijective (its rank is |A|)
  GroupContext za(catalog::abelian({2, 2}));
  const SubgroupDual &zd = za.zdual();
  // p = an isomorphism dual(A) = A: phi from dual-basis images
  PMap piso = PMap::from_dual_gen_images(za, {za.zstruct().gens[0], za.zstruct().gens[1]});
  std::vector<int> trivend(4, 0), trivchar(4, 0);
  MorphQuadruple degen(za, piso, trivend, trivchar, trivend);
  CHECK(degen.check_compatibility().ok);  // a valid endomorphism datum
  CHECK_FALSE(quadruple_is_bijective(degen));
  CHECK_FALSE(map_is_bijective(degen.to_linear_map()));
  (void)zd;

  // raw-map rank: the broken projection is singular
  GroupContext s3(catalog::s3());
  int n = s3.group().order();
  DoubleLinearMap proj(s3);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      proj.set_column(g * n + h, {{g * n, CycScalar::one(s3.cyc())}});
  CHECK_FALSE(map_is_bijective(proj));
  CHECK(map_is_bijective(DoubleLinearMap::identity_map(s3)));
}

TEST_CASE("quadruple json round trip") {
  GroupContext ctx(catalog::q8());
  auto q = compose(MorphQuadruple::from_lambda(ctx, q8_lambda(ctx)),
                   MorphQuadruple::from_bicharacter(ctx, ctx.bch().at(6)));
  auto j = q.to_json();
  auto q2 = MorphQuadruple::from_json(ctx, j);
  CHECK(q2 == q);
}
