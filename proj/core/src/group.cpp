#include "dgaut/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace dgaut {

bool GroupHom::is_valid() const {
  if (static_cast<int>(img.size()) != dom->order()) return false;
  for (int x : img)
    if (x < 0 || x >= cod->order()) return false;
  if (img[0] != 0) return false;
  int n = dom->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (img[dom->mul(x, y)] != cod->mul(img[x], img[y])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (dom->order() != cod->order()) return false;
  std::vector<char> seen(img.size(), 0);
  for (int x : img) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

int FiniteGroup::power(int g, long long k) const {
  int o = element_order(g);
  k %= o;
  if (k < 0) k += o;
  int acc = 0;
  for (long long i = 0; i < k; ++i) acc = mul(acc, g);
  return acc;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw parse_error("empty Cayley table");
  for (auto &row : table) {
    if (static_cast<int>(row.size()) != n) throw parse_error("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw parse_error("Cayley table entry out of range");
  }
  // locate the identity and relabel it to index 0 if needed
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[c][j] == j && table[j][c] == j;
    if (ok) e = c;
  }
  if (e < 0) throw parse_error("Cayley table has no identity");
  if (e != 0) {
    std::vector<int> relab(n);
    std::iota(relab.begin(), relab.end(), 0);
    std::swap(relab[0], relab[e]);
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t2[relab[a]][relab[b]] = relab[table[a][b]];
    table = std::move(t2);
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[static_cast<size_t>(a) * n + b] = table[a][b];
  g->finalize(std::move(name), {});
  return g;
}

namespace {
Perm compose_perm(const Perm &p, const Perm &q) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
  return out;
}
}  // namespace

GroupPtr FiniteGroup::from_permutation_generators(int degree, const std::vector<Perm> &gens,
                                                  std::string name, int max_order) {
  if (degree <= 0) throw parse_error("permutation degree must be positive");
  for (const auto &p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw parse_error("permutation degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) throw parse_error("not a permutation");
      seen[v] = 1;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::map<Perm, int> index;
  std::vector<Perm> elems{id};
  index[id] = 0;
  std::vector<int> level{0};
  while (!level.empty()) {
    // collect the next BFS level, then sort it lexicographically
    std::set<Perm> fresh;
    for (int i : level)
      for (const auto &gen : gens) {
        Perm q = compose_perm(elems[i], gen);
        if (!index.count(q)) fresh.insert(q);
      }
    level.clear();
    for (const auto &q : fresh) {
      if (static_cast<int>(elems.size()) >= max_order)
        throw size_limit_error("permutation closure exceeds max order " +
                               std::to_string(max_order));
      index[q] = static_cast<int>(elems.size());
      level.push_back(static_cast<int>(elems.size()));
      elems.push_back(q);
    }
  }

  int n = static_cast<int>(elems.size());
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g->table_[static_cast<size_t>(a) * n + b] = index.at(compose_perm(elems[a], elems[b]));

  std::vector<int> gen_idx;
  for (const auto &p : gens) gen_idx.push_back(index.at(p));
  g->finalize(std::move(name), std::move(gen_idx));
  return g;
}

void FiniteGroup::validate_axioms() const {
  for (int j = 0; j < n_; ++j)
    require(mul(0, j) == j && mul(j, 0) == j, "group axiom: identity");
  for (int a = 0; a < n_; ++a)
    require(mul(a, inv_[a]) == 0 && mul(inv_[a], a) == 0, "group axiom: inverses");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n_; ++c)
        require(mul(ab, c) == mul(a, mul(b, c)), "group axiom: associativity");
    }
}

void FiniteGroup::finalize(std::string name, std::vector<int> gens) {
  name_ = std::move(name);
  gens_ = std::move(gens);

  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  for (int a = 0; a < n_; ++a) require(inv_[a] >= 0, "group axiom: missing inverse");
  validate_axioms();

  elt_order_.assign(n_, 0);
  exponent_ = 1;
  for (int g = 0; g < n_; ++g) {
    int o = 1, x = g;
    while (x != 0) {
      x = mul(x, g);
      ++o;
    }
    elt_order_[g] = o;
    exponent_ = std::lcm(exponent_, o);
  }
  order_profile_ = elt_order_;
  std::sort(order_profile_.begin(), order_profile_.end());

  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  // center
  {
    std::vector<int> z;
    for (int a = 0; a < n_; ++a) {
      bool central = true;
      for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
      if (central) z.push_back(a);
    }
    center_ = subgroup_from_elements(z);
  }

  // derived subgroup: closure of all commutators
  {
    std::set<int> comms;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) comms.insert(commutator(a, b));
    derived_ = generated_subgroup(std::vector<int>(comms.begin(), comms.end()));
  }

  {
    std::vector<int> meet;
    for (int z : center_.elems)
      if (derived_.contains(z)) meet.push_back(z);
    center_meet_derived_ = subgroup_from_elements(meet);
  }

  // conjugacy classes, ordered: identity class first, then by (size, min elt)
  {
    class_of_.assign(n_, -1);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < n_; ++g) {
      if (class_of_[g] >= 0) continue;
      std::set<int> orbit;
      for (int x = 0; x < n_; ++x) orbit.insert(conj(x, g));
      std::vector<int> cl(orbit.begin(), orbit.end());
      for (int y : cl) class_of_[y] = static_cast<int>(classes.size());
      classes.push_back(std::move(cl));
    }
    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int i, int j) {
      bool iid = classes[i][0] == 0, jid = classes[j][0] == 0;
      if (iid != jid) return iid;
      if (classes[i].size() != classes[j].size()) return classes[i].size() < classes[j].size();
      return classes[i][0] < classes[j][0];
    });
    class_elems_.clear();
    class_reps_.clear();
    std::vector<int> new_of(n_);
    for (size_t k = 0; k < perm.size(); ++k) {
      const auto &cl = classes[perm[k]];
      for (int y : cl) new_of[y] = static_cast<int>(k);
      class_reps_.push_back(cl[0]);
      class_elems_.push_back(cl);
    }
    class_of_ = std::move(new_of);

    conj_to_rep_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
      int rep = class_reps_[class_of_[g]];
      for (int x = 0; x < n_; ++x)
        if (conj(x, g) == rep) {
          conj_to_rep_[g] = x;
          break;
        }
    }
  }

  // FNV-1a over the table
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&h](unsigned long long v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<unsigned long long>(n_));
  for (int v : table_) mix(static_cast<unsigned long long>(v));
  hash_ = h;
}

Subgroup FiniteGroup::subgroup_from_elements(const std::vector<int> &elems) const {
  Subgroup s;
  s.parent = this;
  s.member.assign(n_, 0);
  for (int g : elems) s.member[g] = 1;
  require(s.member[0] != 0, "subgroup must contain the identity");
  for (int g = 0; g < n_; ++g)
    if (s.member[g]) s.elems.push_back(g);
  for (int a : s.elems) {
    require(s.member[inv(a)] != 0, "subgroup not closed under inverse");
    for (int b : s.elems) require(s.member[mul(a, b)] != 0, "subgroup not closed");
  }
  return s;
}

Subgroup FiniteGroup::trivial_subgroup() const { return subgroup_from_elements({0}); }

Subgroup FiniteGroup::full_subgroup() const {
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  return subgroup_from_elements(all);
}

Subgroup FiniteGroup::generated_subgroup(const std::vector<int> &gens) const {
  std::vector<char> in(n_, 0);
  in[0] = 1;
  std::vector<int> work{0};
  for (size_t i = 0; i < work.size(); ++i)
    for (int g : gens) {
      int x = mul(work[i], g);
      if (!in[x]) {
        in[x] = 1;
        work.push_back(x);
      }
      x = mul(g, work[i]);
      if (!in[x]) {
        in[x] = 1;
        work.push_back(x);
      }
    }
  std::vector<int> elems;
  for (int g = 0; g < n_; ++g)
    if (in[g]) elems.push_back(g);
  return subgroup_from_elements(elems);
}

bool FiniteGroup::is_normal(const Subgroup &s) const {
  for (int x = 0; x < n_; ++x)
    for (int g : s.elems)
      if (!s.contains(conj(x, g))) return false;
  return true;
}

Subgroup FiniteGroup::centralizer(int s) const {
  std::vector<int> elems;
  for (int g = 0; g < n_; ++g)
    if (mul(g, s) == mul(s, g)) elems.push_back(g);
  return subgroup_from_elements(elems);
}

bool FiniteGroup::is_stem() const {
  for (int z : center_.elems)
    if (!derived_.contains(z)) return false;
  return true;
}

SubgroupGroup subgroup_as_group(const Subgroup &s, std::string name) {
  const FiniteGroup &g = *s.parent;
  int m = s.order();
  std::vector<int> from_parent(g.order(), -1);
  for (int i = 0; i < m; ++i) from_parent[s.elems[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = from_parent[g.mul(s.elems[a], s.elems[b])];
  SubgroupGroup out;
  out.group = FiniteGroup::from_table(std::move(table), std::move(name));
  out.to_parent = s.elems;
  out.from_parent = std::move(from_parent);
  // element 0 of the subgroup is the parent identity, so no relabeling happened
  return out;
}

QuotientGroup quotient_group(const FiniteGroup &g, const Subgroup &normal, std::string name) {
  require(g.is_normal(normal), "quotient by non-normal subgroup");
  int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : normal.elems) coset_of[g.mul(x, h)] = c;
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = coset_of[g.mul(reps[a], reps[b])];
  QuotientGroup out;
  out.group = FiniteGroup::from_table(std::move(table), std::move(name));
  out.proj = std::move(coset_of);
  return out;
}

std::optional<DirectSplit> internal_direct_split(const FiniteGroup &g, const Subgroup &a,
                                                 const Subgroup &h) {
  if (static_cast<long long>(a.order()) * h.order() != g.order()) return std::nullopt;
  if (!g.is_normal(a) || !g.is_normal(h)) return std::nullopt;
  for (int x : a.elems)
    if (x != 0 && h.contains(x)) return std::nullopt;
  DirectSplit out;
  out.a = a;
  out.h = h;
  out.part_a.assign(g.order(), -1);
  out.part_h.assign(g.order(), -1);
  for (int x : a.elems)
    for (int y : h.elems) {
      int p = g.mul(x, y);
      if (out.part_a[p] >= 0) return std::nullopt;
      out.part_a[p] = x;
      out.part_h[p] = y;
    }
  for (int p = 0; p < g.order(); ++p)
    if (out.part_a[p] < 0) return std::nullopt;
  return out;
}

std::vector<int> generating_sequence(const FiniteGroup &g) {
  std::vector<int> gens;
  Subgroup closure = g.generated_subgroup({});
  while (closure.order() < g.order()) {
    int best = -1;
    for (int x = 0; x < g.order(); ++x) {
      if (closure.contains(x)) continue;
      if (best < 0 || g.element_order(x) > g.element_order(best)) best = x;
    }
    gens.push_back(best);
    closure = g.generated_subgroup(gens);
  }
  return gens;
}

namespace {

// Generator-image backtracking. Builds the partial map as the closure of the
// assigned generators, verifying multiplicativity on (closure x generator)
// pairs, which extends to all pairs by induction on word length.
struct IsoSearch {
  const FiniteGroup &G, &H;
  std::vector<int> gens;                   // generating sequence of G
  std::vector<std::vector<int>> pools;     // candidate images per generator
  std::vector<int> choice;                 // current image picks
  std::vector<std::vector<int>> *collect;  // when non-null: gather all maps
  std::optional<std::vector<int>> first;

  bool build_and_check(std::vector<int> &m) const {
    int n = G.order();
    m.assign(n, -1);
    std::vector<char> used(H.order(), 0);
    m[0] = 0;
    used[0] = 1;
    std::vector<int> work{0};
    size_t k = choice.size();
    for (size_t i = 0; i < work.size(); ++i) {
      int x = work[i];
      for (size_t j = 0; j < k; ++j) {
        int y = G.mul(x, gens[j]);
        int ty = H.mul(m[x], choice[j]);
        if (m[y] < 0) {
          if (used[ty]) return false;
          m[y] = ty;
          used[ty] = 1;
          work.push_back(y);
        } else if (m[y] != ty) {
          return false;
        }
      }
    }
    return true;
  }

  bool recurse() {
    size_t depth = choice.size();
    if (depth == gens.size()) {
      std::vector<int> m;
      if (!build_and_check(m)) return false;
      // gens generate G, so the closure is everything
      if (collect) {
        collect->push_back(std::move(m));
        return false;  // keep searching
      }
      first = std::move(m);
      return true;
    }
    for (int cand : pools[depth]) {
      choice.push_back(cand);
      std::vector<int> m;
      if (build_and_check(m)) {
        if (recurse()) return true;
      }
      choice.pop_back();
    }
    return false;
  }
};

std::vector<std::vector<int>> class_profile(const FiniteGroup &g) {
  std::vector<std::vector<int>> prof;  // (order of rep, class size) pairs
  for (int c = 0; c < g.class_count(); ++c)
    prof.push_back({g.element_order(g.class_rep(c)), g.class_size(c)});
  std::sort(prof.begin(), prof.end());
  return prof;
}

bool run_iso_search(const FiniteGroup &g, const FiniteGroup &h,
                    std::vector<std::vector<int>> *collect,
                    std::optional<std::vector<int>> *first_out) {
  if (g.order() != h.order()) return false;
  if (g.order_profile() != h.order_profile()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  if (class_profile(g) != class_profile(h)) return false;

  IsoSearch s{g, h, generating_sequence(g), {}, {}, collect, std::nullopt};
  s.pools.resize(s.gens.size());
  for (size_t j = 0; j < s.gens.size(); ++j) {
    int gj = s.gens[j];
    int o = g.element_order(gj);
    int cs = g.class_size(g.class_of(gj));
    for (int t = 0; t < h.order(); ++t)
      if (h.element_order(t) == o && h.class_size(h.class_of(t)) == cs)
        s.pools[j].push_back(t);
    if (s.pools[j].empty()) return false;
  }
  bool found = s.recurse();
  if (first_out) *first_out = std::move(s.first);
  return found || (collect && !collect->empty());
}

}  // namespace

std::optional<GroupHom> find_isomorphism(const FiniteGroup &g, const FiniteGroup &h) {
  std::optional<std::vector<int>> first;
  if (!run_iso_search(g, h, nullptr, &first) || !first) return std::nullopt;
  return GroupHom{&g, &h, std::move(*first)};
}

bool are_isomorphic(const FiniteGroup &g, const FiniteGroup &h) {
  return find_isomorphism(g, h).has_value();
}

std::vector<std::vector<int>> all_automorphisms(const FiniteGroup &g) {
  std::vector<std::vector<int>> out;
  if (g.order() == 1) {
    out.push_back({0});
    return out;
  }
  run_iso_search(g, g, &out, nullptr);
  std::sort(out.begin(), out.end());
  return out;
}

PurelyNonabelianResult purely_nonabelian(const FiniteGroup &g) {
  // G has a nontrivial abelian direct factor iff some Z_p splits off, iff
  // there is a central z of prime order p whose image in G/G' lies outside
  // the p-th powers. The witness hyperplane is grown greedily.
  QuotientGroup qg = quotient_group(g, g.derived_subgroup(), g.name() + "/derived");
  const FiniteGroup &q = *qg.group;
  for (int z : g.center().elems) {
    if (z == 0) continue;
    int o = g.element_order(z);
    bool prime = o > 1;
    for (int d = 2; d * d <= o; ++d)
      if (o % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    int p = o;
    int zbar = qg.proj[z];
    if (zbar == 0) continue;
    std::vector<int> ppowers;
    for (int x = 0; x < q.order(); ++x) ppowers.push_back(q.power(x, p));
    Subgroup qp = q.generated_subgroup(ppowers);
    if (qp.contains(zbar)) continue;

    // grow a maximal subgroup of Q avoiding zbar; it has index p
    Subgroup s = qp;
    for (int x = 0; x < q.order(); ++x) {
      if (s.contains(x)) continue;
      std::vector<int> gens = s.elems;
      gens.push_back(x);
      Subgroup bigger = q.generated_subgroup(gens);
      if (!bigger.contains(zbar)) s = bigger;
    }
    require(q.order() == s.order() * p, "direct factor search: hyperplane index");
    // pull back to G
    std::vector<int> m_elems;
    for (int x = 0; x < g.order(); ++x)
      if (s.contains(qg.proj[x])) m_elems.push_back(x);
    Subgroup m = g.subgroup_from_elements(m_elems);
    std::vector<int> zgen{z};
    Subgroup a = g.generated_subgroup(zgen);
    auto split = internal_direct_split(g, a, m);
    require(split.has_value(), "direct factor search: witness split failed");
    return PurelyNonabelianResult{false, std::move(split)};
  }
  return PurelyNonabelianResult{true, std::nullopt};
}

AbelianFactorSplit strip_abelian_factors(const FiniteGroup &g) {
  // Iterate prime-order splits: maintain G = A x H inside G.
  Subgroup a_cur = g.trivial_subgroup();
  Subgroup h_cur = g.full_subgroup();
  for (;;) {
    SubgroupGroup hg = subgroup_as_group(h_cur, "part");
    auto res = purely_nonabelian(*hg.group);
    if (res.purely_nonabelian) break;
    const DirectSplit &w = *res.witness;
    // lift witness subgroups from H back into G
    std::vector<int> a_elems, m_elems;
    for (int x : w.a.elems) a_elems.push_back(hg.to_parent[x]);
    for (int x : w.h.elems) m_elems.push_back(hg.to_parent[x]);
    std::vector<int> a_new = a_cur.elems;
    for (int x : a_elems) a_new.push_back(x);
    a_cur = g.generated_subgroup(a_new);
    h_cur = g.subgroup_from_elements(m_elems);
  }
  AbelianFactorSplit out;
  out.abelian_part = a_cur;
  out.nonabelian_part = h_cur;
  auto split = internal_direct_split(g, a_cur, h_cur);
  require(split.has_value(), "strip_abelian_factors: accumulated split invalid");
  out.part_a = std::move(split->part_a);
  out.part_h = std::move(split->part_h);
  return out;
}

}  // namespace dgaut
