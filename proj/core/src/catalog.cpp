#include "dgaut/catalog.hpp"

#include <functional>
#include <numeric>

namespace dgaut::catalog {

namespace {
std::vector<std::vector<int>> table_from_op(int n, const std::function<int(int, int)> &op) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = op(a, b);
  return t;
}
}  // namespace

GroupPtr trivial() { return FiniteGroup::from_table({{0}}, "1"); }

GroupPtr cyclic(int n) {
  require(n >= 1, "cyclic: order must be positive");
  return FiniteGroup::from_table(
      table_from_op(n, [n](int a, int b) { return (a + b) % n; }), "Z" + std::to_string(n));
}

GroupPtr abelian(const std::vector<int> &orders, std::string name) {
  int n = 1;
  for (int d : orders) {
    require(d >= 1, "abelian: factor must be positive");
    n *= d;
  }
  if (n == 1) return trivial();
  // mixed-radix coordinates, last factor fastest
  auto op = [&orders, n](int a, int b) {
    int out = 0, place = 1, av = a, bv = b;
    std::vector<int> digs(orders.size());
    for (size_t i = orders.size(); i-- > 0;) {
      int d = orders[i];
      digs[i] = ((av % d) + (bv % d)) % d;
      av /= d;
      bv /= d;
    }
    (void)n;
    for (size_t i = 0; i < orders.size(); ++i) {
      out = out * orders[i] + digs[i];
      place *= orders[i];
    }
    (void)place;
    return out;
  };
  if (name.empty()) {
    for (size_t i = 0; i < orders.size(); ++i)
      name += (i ? "xZ" : "Z") + std::to_string(orders[i]);
  }
  return FiniteGroup::from_table(table_from_op(n, op), std::move(name));
}

GroupPtr direct_product(const GroupPtr &a, const GroupPtr &b, std::string name) {
  int na = a->order(), nb = b->order();
  auto op = [a, b, nb](int x, int y) {
    int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
    return a->mul(xa, ya) * nb + b->mul(xb, yb);
  };
  if (name.empty()) name = a->name() + "x" + b->name();
  return FiniteGroup::from_table(table_from_op(na * nb, op), std::move(name));
}

GroupPtr metacyclic(int m, int k, int t, int r, std::string name) {
  require(m >= 1 && k >= 1, "metacyclic: bad parameters");
  // r^k = 1 (mod m), t*(r-1) = 0 (mod m)
  long long rk = 1;
  for (int i = 0; i < k; ++i) rk = (rk * r) % m;
  require(((rk % m) + m) % m == 1 % m, "metacyclic: r^k != 1 mod m");
  require(((static_cast<long long>(t) * (r - 1)) % m + m) % m == 0,
          "metacyclic: t(r-1) != 0 mod m");
  int n = m * k;
  // element a^i b^j <-> j*m + i
  std::vector<long long> rpow(k);
  rpow[0] = 1;
  for (int j = 1; j < k; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  auto op = [m, k, t, &rpow](int x, int y) {
    int i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
    // b^j1 a^i2 = a^(i2 * r^j1) b^j1
    long long i = (i1 + i2 * rpow[j1]) % m;
    int j = j1 + j2;
    if (j >= k) {
      j -= k;
      i = (i + t) % m;
    }
    return j * m + static_cast<int>(i);
  };
  return FiniteGroup::from_table(table_from_op(n, op), std::move(name));
}

GroupPtr dihedral(int n) {
  require(n >= 1, "dihedral: n >= 1");
  if (n == 1) return cyclic(2);
  return metacyclic(n, 2, 0, n - 1, "D" + std::to_string(2 * n));
}

GroupPtr dicyclic(int n) {
  require(n >= 2, "dicyclic: n >= 2");
  return metacyclic(2 * n, 2, n, 2 * n - 1, "Dic" + std::to_string(n));
}

GroupPtr symmetric(int n) {
  require(n >= 1 && n <= 6, "symmetric: n out of supported range");
  if (n == 1) return trivial();
  std::vector<Perm> gens;
  Perm swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  gens.push_back(swap01);
  if (n > 2) {
    Perm cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(cycle);
  }
  return FiniteGroup::from_permutation_generators(n, gens, "S" + std::to_string(n), 1000);
}

GroupPtr alternating(int n) {
  require(n >= 3 && n <= 6, "alternating: n out of supported range");
  std::vector<Perm> gens;
  Perm c3(n);
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1;
  c3[1] = 2;
  c3[2] = 0;
  gens.push_back(c3);
  if (n > 3) {
    if (n % 2 == 1) {
      Perm cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
      gens.push_back(cyc);
    } else {
      Perm cyc(n);  // (2,3,...,n) fixing 1, an (n-1)-cycle, odd n-1
      cyc[0] = 0;
      for (int i = 1; i < n; ++i) cyc[i] = 1 + (i % (n - 1));
      gens.push_back(cyc);
    }
  }
  return FiniteGroup::from_permutation_generators(n, gens, "A" + std::to_string(n), 1000);
}

GroupPtr s3() { return symmetric(3); }
GroupPtr q8() { return dicyclic(2); }
GroupPtr d8() { return dihedral(4); }
GroupPtr a4() { return alternating(4); }
GroupPtr a5() { return alternating(5); }

GroupPtr semidirect_product(const GroupPtr &n, const GroupPtr &h,
                            const std::vector<std::vector<int>> &action, std::string name) {
  require(static_cast<int>(action.size()) == h->order(), "semidirect: action size mismatch");
  for (const auto &a : action) {
    GroupHom f{n.get(), n.get(), a};
    require(f.is_valid() && f.is_bijective(), "semidirect: action not an automorphism");
  }
  // hom property of the action
  for (int x = 0; x < h->order(); ++x)
    for (int y = 0; y < h->order(); ++y)
      for (int g = 0; g < n->order(); ++g)
        require(action[h->mul(x, y)][g] == action[x][action[y][g]],
                "semidirect: action is not a homomorphism");
  int nn = n->order(), nh = h->order();
  auto op = [n, h, &action, nh](int x, int y) {
    int xn = x / nh, xh = x % nh, yn = y / nh, yh = y % nh;
    // (a,s)(b,t) = (a * s.b, st)
    return n->mul(xn, action[xh][yn]) * nh + h->mul(xh, yh);
  };
  return FiniteGroup::from_table(table_from_op(nn * nh, op), std::move(name));
}

GroupPtr semidihedral16() { return metacyclic(8, 2, 0, 3, "SD16"); }
GroupPtr modular16() { return metacyclic(8, 2, 0, 5, "M4(2)"); }
GroupPtr z4_semi_z4() { return metacyclic(4, 4, 0, 3, "Z4:Z4"); }

GroupPtr central_product_d8_z4() {
  auto prod = direct_product(d8(), cyclic(4), "D8xZ4");
  // identify the central involutions: r^2 in D8 with c^2 in Z4
  int r2 = -1;
  for (int z : prod->center().elems)
    if (z != 0 && prod->element_order(z) == 2) {
      // find the diagonal central element (r^2, c^2): both coordinates nonzero
      int a = z / 4, b = z % 4;
      if (a != 0 && b == 2) {
        r2 = z;
        break;
      }
    }
  require(r2 >= 0, "central product: diagonal involution not found");
  auto q = quotient_group(*prod, prod->generated_subgroup({r2}), "D8oZ4");
  return q.group;
}

GroupPtr smallgroup_16_3() {
  auto base = abelian({4, 2}, "Z4xZ2");
  // c: a -> a*b, b -> b  (a = generator of Z4 at coordinate 0)
  // element x = 2*i + j  for a^i b^j
  std::vector<int> act(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) act[2 * i + j] = 2 * i + ((j + i) % 2);
  GroupHom f{base.get(), base.get(), act};
  require(f.is_valid() && f.is_bijective(), "smallgroup_16_3: bad action");
  std::vector<std::vector<int>> action(2);
  action[0].resize(8);
  std::iota(action[0].begin(), action[0].end(), 0);
  action[1] = act;
  return semidirect_product(base, cyclic(2), action, "(Z4xZ2):Z2");
}

GroupPtr smallgroup_32_2() {
  // x^i y^j z^k, product (i+p, j+q, k+r+j*p) with i,j mod 4 and k mod 2
  auto op = [](int a, int b) {
    int i1 = a / 8, j1 = (a / 2) % 4, k1 = a % 2;
    int i2 = b / 8, j2 = (b / 2) % 4, k2 = b % 2;
    int i = (i1 + i2) % 4, j = (j1 + j2) % 4, k = (k1 + k2 + j1 * i2) % 2;
    return i * 8 + j * 2 + k;
  };
  return FiniteGroup::from_table(table_from_op(32, op), "SmallGroup(32,2)");
}

std::vector<GroupPtr> all_groups_up_to_16() {
  std::vector<GroupPtr> out;
  out.push_back(trivial());
  out.push_back(cyclic(2));
  out.push_back(cyclic(3));
  out.push_back(cyclic(4));
  out.push_back(abelian({2, 2}));
  out.push_back(cyclic(5));
  out.push_back(cyclic(6));
  out.push_back(s3());
  out.push_back(cyclic(7));
  out.push_back(cyclic(8));
  out.push_back(abelian({4, 2}));
  out.push_back(abelian({2, 2, 2}));
  out.push_back(d8());
  out.push_back(q8());
  out.push_back(cyclic(9));
  out.push_back(abelian({3, 3}));
  out.push_back(cyclic(10));
  out.push_back(dihedral(5));
  out.push_back(cyclic(11));
  out.push_back(cyclic(12));
  out.push_back(abelian({6, 2}, "Z6xZ2"));
  out.push_back(a4());
  out.push_back(dihedral(6));
  out.push_back(dicyclic(3));
  out.push_back(cyclic(13));
  out.push_back(cyclic(14));
  out.push_back(dihedral(7));
  out.push_back(cyclic(15));
  // order 16: five abelian, nine non-abelian
  out.push_back(cyclic(16));
  out.push_back(abelian({8, 2}));
  out.push_back(abelian({4, 4}));
  out.push_back(abelian({4, 2, 2}));
  out.push_back(abelian({2, 2, 2, 2}));
  out.push_back(dihedral(8));
  out.push_back(semidihedral16());
  out.push_back(dicyclic(4));
  out.push_back(modular16());
  out.push_back(direct_product(d8(), cyclic(2), "D8xZ2"));
  out.push_back(direct_product(q8(), cyclic(2), "Q8xZ2"));
  out.push_back(z4_semi_z4());
  out.push_back(smallgroup_16_3());
  out.push_back(central_product_d8_z4());
  return out;
}

}  // namespace dgaut::catalog
