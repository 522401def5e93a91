#include <doctest.h>

#include "dgaut/autgrp.hpp"
#include "dgaut/catalog.hpp"

using namespace dgaut;

TEST_CASE("automorphism group orders") {
  auto q8 = catalog::q8();
  AutGroup aq8(*q8);
  CHECK(aq8.size() == 24);  // Aut(Q8) = S4

  auto d8 = catalog::d8();
  AutGroup ad8(*d8);
  CHECK(ad8.size() == 8);

  auto z2 = catalog::cyclic(2);
  CHECK(AutGroup(*z2).size() == 1);
}

TEST_CASE("central automorphisms") {
  auto q8 = catalog::q8();
  AutGroup a(*q8);
  CHECK(a.central().size() == 4);
  CHECK(a.central() == a.centralizer_of_inner());

  auto d8 = catalog::d8();
  AutGroup ad(*d8);
  CHECK(ad.central().size() == 4);
  CHECK(ad.central() == ad.centralizer_of_inner());

  auto s3 = catalog::s3();  // centerless
  AutGroup as(*s3);
  CHECK(as.central().size() == 1);
  CHECK(as.central() == as.centralizer_of_inner());
}

TEST_CASE("central-prime automorphisms") {
  auto q8 = catalog::q8();
  AutGroup a(*q8);
  // Z(Q8) = Q8' so Aut_c' = Aut_c
  CHECK(a.central_prime() == a.central());

  // Z(G) meet G' = 1 forces the trivial subgroup
  auto z12 = catalog::cyclic(12);
  AutGroup az(*z12);
  CHECK(az.central_prime().size() == 1);

  auto g32 = catalog::smallgroup_32_2();
  AutGroup a32(*g32);
  CHECK(a32.central_prime().size() > 1);
  // |Aut_c'| = |Hom(G, Z meet G')| = |Hom(Z4 x Z4, Z2)| = 4 candidates that
  // stay bijective; all z*id with z into a central subgroup are bijective
  // here since Z meet G' avoids the generators' images detection; checked
  // against the kernel theorem in the autdouble tests

  // normality of Aut_c' in Aut
  for (int x = 0; x < a.size(); ++x)
    for (int c : a.central_prime()) {
      int conj = a.compose(a.compose(x, c), a.inverse(x));
      bool found = false;
      for (int d : a.central_prime()) found = found || d == conj;
      CHECK(found);
    }
}

TEST_CASE("split central automorphism pairs") {
  auto q8 = catalog::q8();
  AutGroup a(*q8);
  SpAutcGroup sp(a);
  CHECK(sp.size() == 96);  // 4 * 24

  // semidirect structure: H = {(w,1)} normal, K = {(v,v)}, H meet K = 1
  std::vector<std::pair<int, int>> elems;
  for (long long i = 0; i < sp.size(); ++i) elems.push_back(sp.at(i));
  int id = a.identity_index();
  int h_count = 0, k_count = 0, meet = 0;
  for (auto [w, v] : elems) {
    if (v == id) ++h_count;
    if (w == v) ++k_count;
    if (v == id && w == v) ++meet;
  }
  CHECK(h_count == 4);
  CHECK(k_count == 24);
  CHECK(meet == 1);
  // closure under the componentwise product
  for (long long i = 0; i < sp.size(); i += 7)
    for (long long j = 0; j < sp.size(); j += 11) {
      auto [w1, v1] = sp.at(i);
      auto [w2, v2] = sp.at(j);
      CHECK(sp.is_member(a.compose(w1, w2), a.compose(v1, v2)));
    }

  // centerless: SpAut_c = {(v,v)} only
  auto s3 = catalog::s3();
  AutGroup as(*s3);
  SpAutcGroup sps(as);
  CHECK(sps.size() == as.size());
  for (long long i = 0; i < sps.size(); ++i) {
    auto [w, v] = sps.at(i);
    CHECK(w == v);
  }

  auto triv = catalog::trivial();
  AutGroup at(*triv);
  CHECK(SpAutcGroup(at).size() == 1);
}

TEST_CASE("normal endomorphisms") {
  auto q8 = catalog::q8();
  std::vector<int> id(8);
  for (int i = 0; i < 8; ++i) id[i] = i;
  CHECK(is_normal_endomorphism(GroupHom{q8.get(), q8.get(), id}));

  // all endomorphisms of an abelian group are normal
  auto z6 = catalog::cyclic(6);
  for (int k = 0; k < 6; ++k) {
    std::vector<int> img(6);
    for (int x = 0; x < 6; ++x) img[x] = z6->power(z6->mul(x, 0), 1), img[x] = (x * k) % 6;
    GroupHom f{z6.get(), z6.get(), img};
    if (f.is_valid()) CHECK(is_normal_endomorphism(f));
  }

  // inner automorphisms of Q8 are normal endomorphisms (Q8/Z abelian)
  for (int s = 0; s < 8; ++s) {
    std::vector<int> img(8);
    for (int x = 0; x < 8; ++x) img[x] = q8->conj(s, x);
    CHECK(is_normal_endomorphism(GroupHom{q8.get(), q8.get(), img}));
  }

  // a non-normal endomorphism: S3 conjugation is not normal (center trivial)
  auto s3 = catalog::s3();
  int t = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 2) {
      t = x;
      break;
    }
  std::vector<int> img(6);
  for (int x = 0; x < 6; ++x) img[x] = s3->conj(t, x);
  CHECK_FALSE(is_normal_endomorphism(GroupHom{s3.get(), s3.get(), img}));
}

TEST_CASE("Fitting decomposition for normal endomorphisms with abelian image") {
  // for every normal endomorphism f with abelian image:
  // G = Im(f^n) x Ker(f^n) for n = |G|
  std::vector<GroupPtr> groups{catalog::s3(), catalog::q8(), catalog::abelian({2, 4})};
  for (const auto &gp : groups) {
    const FiniteGroup &g = *gp;
    int n = g.order();
    // enumerate endomorphisms via generator images (small groups only)
    auto gens = generating_sequence(g);
    std::vector<std::vector<int>> endos;
    std::vector<int> pick(gens.size(), 0);
    for (;;) {
      // try to extend gens -> pick to a homomorphism via closure
      std::vector<int> m(n, -1);
      std::vector<char> ok{1};
      m[0] = 0;
      std::vector<int> work{0};
      for (size_t i = 0; i < work.size() && ok[0]; ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
          int y = g.mul(work[i], gens[j]);
          int ty = g.mul(m[work[i]], pick[j]);
          if (m[y] < 0) {
            m[y] = ty;
            work.push_back(y);
          } else if (m[y] != ty) {
            ok[0] = 0;
            break;
          }
        }
      if (ok[0] && static_cast<int>(work.size()) == n) endos.push_back(m);
      size_t d = gens.size();
      while (d > 0) {
        --d;
        if (++pick[d] < n) break;
        pick[d] = 0;
        if (d == 0) goto done;
      }
      if (gens.empty()) break;
    }
  done:
    for (const auto &img : endos) {
      GroupHom f{&g, &g, img};
      if (!is_normal_endomorphism(f)) continue;
      // abelian image?
      std::vector<int> image;
      {
        std::vector<char> seen(n, 0);
        for (int x = 0; x < n; ++x)
          if (!seen[f(x)]) {
            seen[f(x)] = 1;
            image.push_back(f(x));
          }
      }
      bool ab = true;
      for (int x : image)
        for (int y : image) ab = ab && g.mul(x, y) == g.mul(y, x);
      if (!ab) continue;
      // f^n
      std::vector<int> fn(n);
      for (int x = 0; x < n; ++x) fn[x] = x;
      for (int it = 0; it < n; ++it)
        for (int x = 0; x < n; ++x) fn[x] = f(fn[x]);
      std::vector<int> im, ker;
      {
        std::vector<char> seen(n, 0);
        for (int x = 0; x < n; ++x) {
          int y = fn[x];
          if (!seen[y]) {
            seen[y] = 1;
            im.push_back(y);
          }
          if (y == 0) ker.push_back(x);
        }
      }
      std::sort(im.begin(), im.end());
      auto a = g.subgroup_from_elements(im);
      auto k = g.subgroup_from_elements(ker);
      CHECK(internal_direct_split(g, a, k).has_value());
    }
  }
}

TEST_CASE("central automorphism displacement identities") {
  // z_phi(g) = phi(g) g^-1; compose and inverse identities
  auto q8 = catalog::q8();
  AutGroup a(*q8);
  const FiniteGroup &g = *q8;
  auto z_of = [&](int phi, int x) { return g.mul(a.apply(phi, x), g.inv(x)); };
  for (int p1 : a.central())
    for (int p2 : a.central()) {
      int comp = a.compose(p1, p2);
      for (int x = 0; x < g.order(); ++x)
        CHECK(z_of(comp, x) == g.mul(z_of(p1, a.apply(p2, x)), z_of(p2, x)));
    }
  for (int p : a.central()) {
    int pinv = a.inverse(p);
    for (int x = 0; x < g.order(); ++x)
      CHECK(z_of(pinv, x) == g.inv(z_of(p, a.apply(pinv, x))));
  }
}
