#include <doctest.h>

#include <algorithm>

#include "dgaut/catalog.hpp"
#include "dgaut/chartab.hpp"
#include "dgaut/context.hpp"

using namespace dgaut;

TEST_CASE("cyclotomic arithmetic basics") {
  CycContext c4(4);
  CHECK(c4.degree() == 2);
  auto i = CycScalar::root(c4, 1);
  CHECK(i * i == CycScalar::from_rational(c4, Rational(-1)));
  CHECK((i * i * i * i) == CycScalar::one(c4));

  CycContext c6(6);
  // sum of all primitive 6th roots of unity is the Moebius value mu(6) = 1
  auto s = CycScalar::root(c6, 1) + CycScalar::root(c6, 5);
  CHECK(s == CycScalar::one(c6));
  // full root sum vanishes
  CycScalar t = CycScalar::zero(c6);
  for (int k = 0; k < 6; ++k) t += CycScalar::root(c6, k);
  CHECK(t.is_zero());

  // galois: conjugation inverts roots
  auto z = CycScalar::root(c6, 1);
  CHECK(z.conj() == CycScalar::root(c6, 5));
  CHECK((z * z.conj()) == CycScalar::one(c6));
  CHECK(CycScalar::root(c6, 2).is_rational() == false);
  CHECK(CycScalar::from_rational(c6, Rational(7, 3)).as_rational() == Rational(7, 3));
}

TEST_CASE("character table: Z2") {
  GroupContext ctx(catalog::cyclic(2));
  const CharacterTable &t = ctx.character_table();
  CHECK(t.degrees == std::vector<int>{1, 1});
  CHECK(t.value(0, 0) == CycScalar::one(ctx.cyc()));
  CHECK(t.value(0, 1) == CycScalar::one(ctx.cyc()));
  CHECK(t.value(1, 0) == CycScalar::one(ctx.cyc()));
  CHECK(t.value(1, 1) == CycScalar::from_rational(ctx.cyc(), Rational(-1)));
}

TEST_CASE("character table: S3 and Q8 degrees via Dixon") {
  GroupContext s3(catalog::s3());
  const CharacterTable &ts = s3.character_table();
  CHECK(ts.degrees == std::vector<int>{1, 1, 2});

  GroupContext q8(catalog::q8());
  const CharacterTable &tq = q8.character_table();
  CHECK(tq.degrees == std::vector<int>{1, 1, 1, 1, 2});

  GroupContext a5(catalog::a5());
  const CharacterTable &ta = a5.character_table();
  CHECK(ta.degrees == std::vector<int>{1, 3, 3, 4, 5});
}

TEST_CASE("abelian table equals the dual group") {
  auto g = catalog::abelian({2, 4});
  GroupContext ctx(g);
  const CharacterTable &t = ctx.character_table();
  const DualGroup &d = ctx.dual();
  CHECK(t.irr_count() == d.size());
  // every dual character appears as a row
  for (int chi = 0; chi < d.size(); ++chi) {
    std::vector<CycScalar> values;
    for (int c = 0; c < g->class_count(); ++c)
      values.push_back(CycScalar::root(ctx.cyc(), d.value(chi, g->class_rep(c))));
    CHECK(t.row_matching(values) >= 0);
  }
}

TEST_CASE("central characters") {
  GroupContext q8(catalog::q8());
  const CharacterTable &t = q8.character_table();
  // trivial character: trivial mu
  auto mu0 = central_character(t, 0);
  for (auto v : mu0.on_center) CHECK(v.is_zero());
  // the 2-dim character at the central involution: mu(-1) = -1
  int irr2 = -1;
  for (int i = 0; i < t.irr_count(); ++i)
    if (t.degrees[i] == 2) irr2 = i;
  REQUIRE(irr2 >= 0);
  auto mu = central_character(t, irr2);
  const auto &zelems = q8.group().center().elems;
  REQUIRE(zelems.size() == 2);
  CHECK(mu.at(zelems[1]) == QMod1(1, 2));
  // and eta(-1) = -2
  CHECK(t.value_at(irr2, zelems[1]) ==
        CycScalar::from_rational(q8.cyc(), Rational(-2)));
}

TEST_CASE("character table json round trip with validation") {
  GroupContext s3(catalog::s3());
  const CharacterTable &t = s3.character_table();
  auto j = character_table_to_json(t);
  CharacterTable t2 = character_table_from_json(s3.group(), s3.cyc(), j);
  for (int i = 0; i < t.irr_count(); ++i)
    for (int c = 0; c < s3.group().class_count(); ++c)
      CHECK(t.value(i, c) == t2.value(i, c));
  // corrupting a value must fail re-validation
  auto bad = j;
  bad["values"][1][1][0] = "5";
  CHECK_THROWS(character_table_from_json(s3.group(), s3.cyc(), bad));
}

TEST_CASE("centralizer tables share the ambient conductor") {
  GroupContext q8(catalog::q8());
  // class of i has centralizer Z4
  int cls = -1;
  for (int c = 0; c < q8.group().class_count(); ++c)
    if (q8.group().element_order(q8.group().class_rep(c)) == 4) cls = c;
  REQUIRE(cls >= 0);
  const auto &info = q8.centralizer_info(cls);
  CHECK(info.sub.group->order() == 4);
  CHECK(&info.ctx->cyc() == &q8.cyc());
  const CharacterTable &t = info.ctx->character_table();
  CHECK(t.degrees == std::vector<int>{1, 1, 1, 1});
}
