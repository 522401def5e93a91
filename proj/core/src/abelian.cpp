#include "dgaut/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dgaut {

const std::vector<int> &AbelianStructure::coords(int parent_elt) const {
  int pos = pos_of_[parent_elt];
  require(pos >= 0, "AbelianStructure: element outside subgroup");
  return coords_list_[pos];
}

int AbelianStructure::tuple_index(const std::vector<int> &c) const {
  int idx = 0;
  for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + c[i];
  return idx;
}

std::vector<int> AbelianStructure::tuple_of_index(int idx) const {
  std::vector<int> c(factors.size());
  for (size_t i = factors.size(); i-- > 0;) {
    c[i] = idx % factors[i];
    idx /= factors[i];
  }
  return c;
}

int AbelianStructure::element_of(const std::vector<int> &c) const {
  return elem_by_tuple_[tuple_index(c)];
}

namespace {

// Smith normal form of M (k x m), column vectors spanning the relation
// lattice. Tracks Uinv with U M W = D, so new generators are columns of Uinv.
void smith_normal_form(std::vector<std::vector<long long>> &m,
                       std::vector<std::vector<long long>> &uinv) {
  int rows = static_cast<int>(m.size());
  int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;

  auto row_add = [&](int dst, int src, long long c) {  // row_dst += c*row_src
    for (int j = 0; j < cols; ++j) m[dst][j] += c * m[src][j];
    // Uinv <- Uinv * E^-1: col_src -= c * col_dst
    for (int i = 0; i < rows; ++i) uinv[i][src] -= c * uinv[i][dst];
  };
  auto row_swap = [&](int a, int b) {
    std::swap(m[a], m[b]);
    for (int i = 0; i < rows; ++i) std::swap(uinv[i][a], uinv[i][b]);
  };
  auto row_neg = [&](int a) {
    for (int j = 0; j < cols; ++j) m[a][j] = -m[a][j];
    for (int i = 0; i < rows; ++i) uinv[i][a] = -uinv[i][a];
  };
  auto col_add = [&](int dst, int src, long long c) {
    for (int i = 0; i < rows; ++i) m[i][dst] += c * m[i][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
  };

  int t = 0;
  int lim = std::min(rows, cols);
  while (t < lim) {
    // find minimal nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        long long v = m[i][j] < 0 ? -m[i][j] : m[i][j];
        if (v != 0 && (pi < 0 || v < best)) {
          pi = i;
          pj = j;
          best = v;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (m[t][t] < 0) row_neg(t);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i)
      if (m[i][t] != 0) {
        long long q = m[i][t] / m[t][t];
        row_add(i, t, -q);
        if (m[i][t] != 0) clean = false;
      }
    for (int j = t + 1; j < cols; ++j)
      if (m[t][j] != 0) {
        long long q = m[t][j] / m[t][t];
        col_add(j, t, -q);
        if (m[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainders appeared; redo pivot choice

    // divisibility: fold any non-multiple into column t and redo
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols && !redo; ++j)
        if (m[i][j] % m[t][t] != 0) {
          col_add(t, j, 1);
          redo = true;
        }
    if (redo) continue;
    ++t;
  }
}

}  // namespace

AbelianStructure smith_decompose(const Subgroup &s) {
  const FiniteGroup &g = *s.parent;
  for (int a : s.elems)
    for (int b : s.elems)
      if (g.mul(a, b) != g.mul(b, a))
        throw invariant_error("smith_decompose: subgroup is not abelian");

  AbelianStructure out;
  out.parent = &g;
  out.elems = s.elems;
  out.pos_of_.assign(g.order(), -1);
  for (size_t i = 0; i < s.elems.size(); ++i) out.pos_of_[s.elems[i]] = static_cast<int>(i);

  // greedy generating set: maximal order first, smallest index on ties
  std::vector<int> gens;
  Subgroup closure = g.generated_subgroup({});
  while (closure.order() < s.order()) {
    int best = -1;
    for (int x : s.elems) {
      if (closure.contains(x)) continue;
      if (best < 0 || g.element_order(x) > g.element_order(best)) best = x;
    }
    gens.push_back(best);
    closure = g.generated_subgroup(gens);
  }
  int k = static_cast<int>(gens.size());
  if (k == 0) {
    out.coords_list_ = {{}};
    out.elem_by_tuple_ = {0};
    return out;
  }

  // relation lattice inside the box prod [0, o_i)
  std::vector<int> ord(k);
  long long box = 1;
  for (int i = 0; i < k; ++i) {
    ord[i] = g.element_order(gens[i]);
    box *= ord[i];
  }
  require(box <= (1 << 22), "smith_decompose: relation box too large");
  std::vector<std::vector<long long>> relations;
  std::vector<int> tup(k, 0);
  for (long long it = 0; it < box; ++it) {
    long long rem = it;
    int x = 0;
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(rem % ord[i]);
      rem /= ord[i];
    }
    for (int i = 0; i < k; ++i) x = g.mul(x, g.power(gens[i], tup[i]));
    if (x == 0) {
      bool allzero = true;
      for (int v : tup) allzero &= v == 0;
      if (!allzero) relations.emplace_back(tup.begin(), tup.end());
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<long long> r(k, 0);
    r[i] = ord[i];
    relations.push_back(std::move(r));
  }

  // columns of M span the lattice: M is k x m
  int mcols = static_cast<int>(relations.size());
  std::vector<std::vector<long long>> m(k, std::vector<long long>(mcols));
  for (int j = 0; j < mcols; ++j)
    for (int i = 0; i < k; ++i) m[i][j] = relations[j][i];
  std::vector<std::vector<long long>> uinv(k, std::vector<long long>(k, 0));
  for (int i = 0; i < k; ++i) uinv[i][i] = 1;
  smith_normal_form(m, uinv);

  long long check = 1;
  for (int i = 0; i < k; ++i) {
    require(m[i][i] > 0, "smith_decompose: degenerate diagonal");
    check *= m[i][i];
  }
  require(check == s.order(), "smith_decompose: diagonal product != subgroup order");

  for (int i = 0; i < k; ++i) {
    long long d = m[i][i];
    if (d == 1) continue;
    int h = 0;
    for (int r = 0; r < k; ++r) {
      long long e = uinv[r][i] % ord[r];
      if (e < 0) e += ord[r];
      h = g.mul(h, g.power(gens[r], e));
    }
    out.factors.push_back(static_cast<int>(d));
    out.gens.push_back(h);
  }

  // coordinate map: enumerate the box of the new generators
  int total = 1;
  for (int d : out.factors) total *= d;
  require(total == s.order(), "smith_decompose: invariant factor product mismatch");
  out.elem_by_tuple_.assign(total, -1);
  out.coords_list_.assign(s.elems.size(), {});
  std::vector<char> seen(g.order(), 0);
  std::vector<int> c(out.factors.size(), 0);
  for (int idx = 0; idx < total; ++idx) {
    int rem = idx;
    for (size_t i = out.factors.size(); i-- > 0;) {
      c[i] = rem % out.factors[i];
      rem /= out.factors[i];
    }
    int x = 0;
    for (size_t i = 0; i < out.gens.size(); ++i) x = g.mul(x, g.power(out.gens[i], c[i]));
    require(!seen[x], "smith_decompose: coordinate map not injective");
    seen[x] = 1;
    out.elem_by_tuple_[idx] = x;
    out.coords_list_[out.pos_of_[x]] = c;
  }
  return out;
}

unsigned long long hom_count(const AbelianStructure &a, const AbelianStructure &b) {
  unsigned long long count = 1;
  for (int d : a.factors)
    for (int e : b.factors) count *= static_cast<unsigned long long>(std::gcd(d, e));
  return count;
}

std::vector<AbelianHom> enumerate_homs(const AbelianStructure &a, const AbelianStructure &b,
                                       long long max_count) {
  unsigned long long count = hom_count(a, b);
  if (count > static_cast<unsigned long long>(max_count))
    throw size_limit_error("enumerate_homs: " + std::to_string(count) + " homomorphisms");
  const FiniteGroup &gb = *b.parent;

  // candidates for the image of a generator of order d: the d-torsion of B
  std::vector<std::vector<int>> pools(a.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i) {
    for (int y : b.elems)
      if (gb.power(y, a.factors[i]) == 0) pools[i].push_back(y);
  }
  std::vector<AbelianHom> out;
  out.reserve(count);
  std::vector<int> pick(a.factors.size(), 0);
  for (;;) {
    AbelianHom h;
    for (size_t i = 0; i < pools.size(); ++i) h.gen_images.push_back(pools[i][pick[i]]);
    out.push_back(std::move(h));
    size_t i = pools.size();
    while (i > 0) {
      --i;
      if (++pick[i] < static_cast<int>(pools[i].size())) break;
      pick[i] = 0;
      if (i == 0) {
        require(out.size() == count, "enumerate_homs: count formula mismatch");
        return out;
      }
    }
    if (pools.empty()) {
      require(count == 1, "enumerate_homs: empty-rank count");
      return out;
    }
  }
}

int apply_hom(const AbelianStructure &a, const AbelianStructure &b, const AbelianHom &h,
              int x) {
  const FiniteGroup &gb = *b.parent;
  const auto &c = a.coords(x);
  int y = 0;
  for (size_t i = 0; i < c.size(); ++i) y = gb.mul(y, gb.power(h.gen_images[i], c[i]));
  return y;
}

BigUnsigned abelian_aut_order(const std::vector<int> &cyclic_orders) {
  // split into primary parts
  std::map<int, std::vector<int>> primary;  // prime -> exponents
  for (int d : cyclic_orders) {
    int rem = d;
    for (int p = 2; p * p <= rem; ++p)
      if (rem % p == 0) {
        int e = 0;
        while (rem % p == 0) {
          rem /= p;
          ++e;
        }
        primary[p].push_back(e);
      }
    if (rem > 1) primary[rem].push_back(1);
  }
  BigUnsigned total(1);
  for (auto &[p, es] : primary) {
    std::sort(es.begin(), es.end());
    int n = static_cast<int>(es.size());
    std::vector<int> dmax(n), cmin(n);
    for (int k = 0; k < n; ++k) {
      int dk = k, ck = k;
      while (dk + 1 < n && es[dk + 1] == es[k]) ++dk;
      while (ck - 1 >= 0 && es[ck - 1] == es[k]) --ck;
      dmax[k] = dk + 1;  // 1-based
      cmin[k] = ck + 1;
    }
    auto upow = [p = p](int e) {
      unsigned long long v = 1;
      for (int i = 0; i < e; ++i) v *= static_cast<unsigned long long>(p);
      return v;
    };
    for (int k = 0; k < n; ++k) total *= BigUnsigned(upow(dmax[k]) - upow(k));
    for (int j = 0; j < n; ++j)
      total *= BigUnsigned::pow(static_cast<unsigned long long>(p), es[j] * (n - dmax[j]));
    for (int i = 0; i < n; ++i)
      total *= BigUnsigned::pow(static_cast<unsigned long long>(p),
                                (es[i] - 1) * (n - cmin[i] + 1));
  }
  return total;
}

std::optional<Subgroup> complement_in_abelian(const Subgroup &z, const Subgroup &s) {
  const FiniteGroup &g = *z.parent;
  for (int x : s.elems) require(z.contains(x), "complement_in_abelian: s not inside z");
  for (int a : z.elems)
    for (int b : z.elems)
      require(g.mul(a, b) == g.mul(b, a), "complement_in_abelian: z not abelian");

  // enumerate all subgroups of z by closure growth
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> triv{0};
  seen.insert(triv);
  work.push_back(triv);
  for (size_t i = 0; i < work.size(); ++i) {
    std::vector<int> cur = work[i];
    for (int x : z.elems) {
      std::vector<int> gens = cur;
      gens.push_back(x);
      Subgroup bigger = g.generated_subgroup(gens);
      if (!seen.count(bigger.elems)) {
        seen.insert(bigger.elems);
        work.push_back(bigger.elems);
      }
    }
  }
  std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto &elems : sorted) {
    if (static_cast<long long>(elems.size()) * s.order() != z.order()) continue;
    bool trivial_meet = true;
    for (int x : elems)
      if (x != 0 && s.contains(x)) {
        trivial_meet = false;
        break;
      }
    if (trivial_meet) return g.subgroup_from_elements(elems);
  }
  return std::nullopt;
}

}  // namespace dgaut
