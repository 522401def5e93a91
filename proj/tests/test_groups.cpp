#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "dgaut/abelian.hpp"
#include "dgaut/catalog.hpp"
#include "dgaut/characters.hpp"
#include "dgaut/group.hpp"

using namespace dgaut;

namespace {

// brute-force oracle: conjugacy orbit of g
std::set<int> conj_orbit(const FiniteGroup &g, int x) {
  std::set<int> out;
  for (int y = 0; y < g.order(); ++y) out.insert(g.conj(y, x));
  return out;
}

}  // namespace

TEST_CASE("permutation closure: S3, trivial, Q8") {
  auto s3 = FiniteGroup::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
  CHECK(s3->order() == 6);

  auto triv = FiniteGroup::from_permutation_generators(1, {}, "1");
  CHECK(triv->order() == 1);

  // the two standard Q8 generators inside S8 (1-indexed cycles (1,2,4,7)(3,6,8,5)
  // and (1,3,4,8)(2,5,7,6)), written 0-based
  Perm i_gen{1, 3, 5, 6, 2, 7, 0, 4};
  Perm j_gen{2, 4, 3, 7, 6, 1, 5, 0};
  auto q8 = FiniteGroup::from_permutation_generators(8, {i_gen, j_gen}, "Q8");
  CHECK(q8->order() == 8);
  CHECK(are_isomorphic(*q8, *catalog::q8()));

  CHECK_THROWS_AS(
      FiniteGroup::from_permutation_generators(5, {{1, 2, 3, 4, 0}}, "Z5", 4),
      size_limit_error);
}

TEST_CASE("center") {
  CHECK(catalog::q8()->center().order() == 2);
  auto z6 = catalog::cyclic(6);
  CHECK(z6->center().order() == 6);
  CHECK(catalog::s3()->center().order() == 1);
}

TEST_CASE("derived subgroup") {
  auto q8 = catalog::q8();
  CHECK(q8->derived_subgroup().order() == 2);
  CHECK(q8->derived_subgroup().elems == q8->center().elems);
  CHECK(catalog::cyclic(12)->derived_subgroup().order() == 1);
  auto a5 = catalog::a5();
  CHECK(a5->order() == 60);
  CHECK(a5->is_perfect());
}

TEST_CASE("conjugacy classes and centralizers") {
  auto s3 = catalog::s3();
  std::vector<int> sizes;
  for (int c = 0; c < s3->class_count(); ++c) sizes.push_back(s3->class_size(c));
  CHECK(sizes == std::vector<int>{1, 2, 3});  // identity first, then by size
  for (int x = 0; x < s3->order(); ++x) {
    auto orb = conj_orbit(*s3, x);
    CHECK(static_cast<int>(orb.size()) == s3->class_size(s3->class_of(x)));
    CHECK(s3->class_size(s3->class_of(x)) * s3->centralizer(x).order() == s3->order());
  }

  auto q8 = catalog::q8();
  CHECK(q8->class_count() == 5);
  // centralizer of any order-4 element has order 4
  for (int x = 0; x < 8; ++x)
    if (q8->element_order(x) == 4) CHECK(q8->centralizer(x).order() == 4);

  auto z4 = catalog::cyclic(4);
  CHECK(z4->class_count() == 4);
  for (int c = 0; c < 4; ++c) CHECK(z4->class_size(c) == 1);
}

TEST_CASE("abelianization via smith decomposition") {
  auto s3 = catalog::s3();
  auto q = quotient_group(*s3, s3->derived_subgroup(), "S3ab");
  auto st = smith_decompose(q.group->full_subgroup());
  CHECK(st.factors == std::vector<int>{2});

  auto q8 = catalog::q8();
  auto q2 = quotient_group(*q8, q8->derived_subgroup(), "Q8ab");
  auto st2 = smith_decompose(q2.group->full_subgroup());
  CHECK(st2.factors == std::vector<int>{2, 2});

  auto z6 = catalog::cyclic(6);
  auto st3 = smith_decompose(z6->full_subgroup());
  CHECK(st3.factors == std::vector<int>{6});

  // round-trip invariant: coords -> element -> coords
  for (int x = 0; x < 6; ++x) {
    auto c = st3.coords(x);
    CHECK(st3.element_of(c) == x);
  }
}

TEST_CASE("smith decomposition of centers") {
  auto q8 = catalog::q8();
  CHECK(smith_decompose(q8->center()).factors == std::vector<int>{2});
  auto s3 = catalog::s3();
  CHECK(smith_decompose(s3->trivial_subgroup()).factors.empty());
  auto g32 = catalog::smallgroup_32_2();
  CHECK(smith_decompose(g32->center()).factors == std::vector<int>{2, 2, 2});
  CHECK(g32->derived_subgroup().order() == 2);
}

TEST_CASE("hom enumeration") {
  auto z2g = catalog::cyclic(2);
  auto v4g = catalog::abelian({2, 2});
  auto z8g = catalog::cyclic(8);
  auto e8g = catalog::abelian({2, 2, 2});
  auto z2 = smith_decompose(z2g->full_subgroup());
  CHECK(enumerate_homs(z2, z2).size() == 2);

  auto v4 = smith_decompose(v4g->full_subgroup());
  CHECK(enumerate_homs(v4, v4).size() == 16);  // 2x2 matrices over F2

  auto z8 = smith_decompose(z8g->full_subgroup());
  CHECK(enumerate_homs(z2, z8).size() == 2);  // image of order dividing 2
  auto e8 = smith_decompose(e8g->full_subgroup());
  CHECK(enumerate_homs(z2, e8).size() == 8);

  // every enumerated map is a homomorphism (exhaustive)
  auto g = catalog::abelian({4, 2});
  auto st = smith_decompose(g->full_subgroup());
  for (const auto &h : enumerate_homs(st, st))
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y)
        CHECK(apply_hom(st, st, h, g->mul(x, y)) ==
              g->mul(apply_hom(st, st, h, x), apply_hom(st, st, h, y)));
}

TEST_CASE("dual group and bicharacters") {
  auto d8 = catalog::d8();
  DualGroup dual(*d8);
  CHECK(dual.size() == 4);
  BicharacterGroup bch(dual);
  CHECK(bch.size() == 16);

  auto a4 = catalog::a4();
  DualGroup da4(*a4);
  CHECK(da4.size() == 3);
  BicharacterGroup bch4(da4);
  CHECK(bch4.size() == 3);

  auto a5 = catalog::a5();
  DualGroup da5(*a5);
  CHECK(da5.size() == 1);
  BicharacterGroup bch5(da5);
  CHECK(bch5.size() == 1);

  // |dual| = |G/G'|; bicharacter count equals hom-enumeration count
  auto s3 = catalog::s3();
  DualGroup ds3(*s3);
  CHECK(ds3.size() == 2);
  auto gab = smith_decompose(ds3.ab_quotient().full_subgroup());
  BicharacterGroup bs3(ds3);
  CHECK(bs3.size() == enumerate_homs(gab, gab).size());

  // characters are multiplicative and vanish on G'
  for (int chi = 0; chi < ds3.size(); ++chi) {
    for (int x = 0; x < s3->order(); ++x)
      for (int y = 0; y < s3->order(); ++y)
        CHECK(ds3.value(chi, s3->mul(x, y)) == ds3.value(chi, x) + ds3.value(chi, y));
    for (int x : s3->derived_subgroup().elems) CHECK(ds3.value(chi, x).is_zero());
  }

  // bicharacters: biadditive, vanish when either slot is in G'
  auto bd8 = BicharacterGroup(dual);
  for (unsigned long long i = 0; i < bd8.size(); ++i) {
    auto b = bd8.at(i);
    for (int x = 0; x < d8->order(); ++x) {
      for (int y = 0; y < d8->order(); ++y) {
        for (int z = 0; z < d8->order(); ++z)
          CHECK(b.value(d8->mul(x, y), z) == b.value(x, z) + b.value(y, z));
      }
      for (int c : d8->derived_subgroup().elems) {
        CHECK(b.value(x, c).is_zero());
        CHECK(b.value(c, x).is_zero());
      }
    }
    CHECK(bd8.index_of(b) == i);
  }
}

TEST_CASE("purely nonabelian detection") {
  CHECK(purely_nonabelian(*catalog::q8()).purely_nonabelian);
  CHECK(purely_nonabelian(*catalog::s3()).purely_nonabelian);
  CHECK(purely_nonabelian(*catalog::smallgroup_32_2()).purely_nonabelian);

  auto d12 = catalog::dihedral(6);  // Z2 x S3
  auto res = purely_nonabelian(*d12);
  CHECK_FALSE(res.purely_nonabelian);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->a.order() == 2);

  CHECK_FALSE(purely_nonabelian(*catalog::cyclic(5)).purely_nonabelian);
  CHECK_FALSE(purely_nonabelian(*catalog::abelian({2, 4})).purely_nonabelian);

  // randomized-construction invariant: A x H never purely non-abelian
  std::vector<GroupPtr> abelians{catalog::cyclic(2), catalog::cyclic(3),
                                 catalog::abelian({2, 2})};
  std::vector<GroupPtr> others{catalog::s3(), catalog::q8(), catalog::cyclic(4)};
  for (const auto &a : abelians)
    for (const auto &h : others) {
      auto prod = catalog::direct_product(a, h);
      CHECK_FALSE(purely_nonabelian(*prod).purely_nonabelian);
    }

  auto split = strip_abelian_factors(*catalog::direct_product(
      catalog::abelian({2, 2}), catalog::s3(), "V4xS3"));
  CHECK(split.abelian_part.order() == 4);
  CHECK(split.nonabelian_part.order() == 6);
}

TEST_CASE("stem groups") {
  CHECK(catalog::q8()->is_stem());
  CHECK(catalog::d8()->is_stem());
  CHECK(catalog::dihedral(8)->is_stem());     // D16, n = 8 divisible by 4
  CHECK_FALSE(catalog::cyclic(4)->is_stem());
  CHECK_FALSE(catalog::smallgroup_32_2()->is_stem());
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(are_isomorphic(*catalog::q8(), *catalog::d8()));
  auto s3 = catalog::s3();
  auto iso = find_isomorphism(*s3, *s3);
  REQUIRE(iso.has_value());
  CHECK(iso->is_valid());
  CHECK(are_isomorphic(*catalog::cyclic(6),
                       *catalog::direct_product(catalog::cyclic(2), catalog::cyclic(3))));
  CHECK_FALSE(are_isomorphic(*catalog::dihedral(6), *catalog::a4()));
  CHECK(are_isomorphic(*catalog::dihedral(6),
                       *catalog::direct_product(catalog::cyclic(2), catalog::s3())));
}

TEST_CASE("catalog: 42 isomorphism types up to order 16") {
  auto groups = catalog::all_groups_up_to_16();
  CHECK(groups.size() == 42);
  std::map<int, int> per_order;
  for (const auto &g : groups) per_order[g->order()]++;
  CHECK(per_order[16] == 14);
  CHECK(per_order[12] == 5);
  CHECK(per_order[8] == 5);
  // pairwise non-isomorphic
  for (size_t i = 0; i < groups.size(); ++i)
    for (size_t j = i + 1; j < groups.size(); ++j) {
      if (groups[i]->order() != groups[j]->order()) continue;
      CAPTURE(groups[i]->name());
      CAPTURE(groups[j]->name());
      CHECK_FALSE(are_isomorphic(*groups[i], *groups[j]));
    }
}

TEST_CASE("abelian automorphism order formula vs direct search") {
  CHECK(abelian_aut_order({2, 2}).as_u64() == 6);
  CHECK(abelian_aut_order({3, 3}).as_u64() == 48);
  CHECK(abelian_aut_order({4, 4}).as_u64() == 96);
  CHECK(abelian_aut_order({2}).as_u64() == 1);
  for (auto factors : std::vector<std::vector<int>>{{2}, {4}, {2, 2}, {2, 4}, {3}, {2, 2, 2}, {6}, {8, 2}}) {
    auto g = catalog::abelian(factors);
    CHECK(abelian_aut_order(factors).as_u64() == all_automorphisms(*g).size());
  }
}

TEST_CASE("complement search in abelian groups") {
  auto z = catalog::abelian({2, 4});
  // <(0,2)> = the square of the Z4 part: not a direct factor
  int sq = -1;
  for (int x = 0; x < 8; ++x)
    if (z->element_order(x) == 2) {
      // find the element that is a square of an order-4 element
      for (int y = 0; y < 8; ++y)
        if (z->element_order(y) == 4 && z->mul(y, y) == x) sq = x;
    }
  REQUIRE(sq >= 0);
  auto s = z->generated_subgroup({sq});
  CHECK_FALSE(complement_in_abelian(z->full_subgroup(), s).has_value());

  // but any order-2 subgroup of Z2 x Z2 is a factor
  auto v4 = catalog::abelian({2, 2});
  auto s2 = v4->generated_subgroup({1});
  CHECK(complement_in_abelian(v4->full_subgroup(), s2).has_value());
}
