#include "dgaut/characters.hpp"

#include <numeric>

namespace dgaut {

SubgroupDual::SubgroupDual(AbelianStructure s) : s_(std::move(s)) {
  order_ = s_.order();
}

QMod1 SubgroupDual::value(int theta, int parent_elt) const {
  const auto &c = s_.coords(parent_elt);
  QMod1 v;
  int t = theta;
  for (size_t i = s_.factors.size(); i-- > 0;) {
    int k = t % s_.factors[i];
    t /= s_.factors[i];
    v += QMod1(static_cast<long long>(k) * c[i], s_.factors[i]);
  }
  return v;
}

int SubgroupDual::add(int t1, int t2) const {
  int out = 0;
  std::vector<int> a = s_.tuple_of_index(t1), b = s_.tuple_of_index(t2);
  for (size_t i = 0; i < s_.factors.size(); ++i)
    out = out * s_.factors[i] + (a[i] + b[i]) % s_.factors[i];
  return out;
}

int SubgroupDual::neg(int t) const {
  int out = 0;
  std::vector<int> a = s_.tuple_of_index(t);
  for (size_t i = 0; i < s_.factors.size(); ++i)
    out = out * s_.factors[i] + (s_.factors[i] - a[i]) % s_.factors[i];
  return out;
}

int SubgroupDual::char_order(int t) const {
  std::vector<int> a = s_.tuple_of_index(t);
  int o = 1;
  for (size_t i = 0; i < s_.factors.size(); ++i)
    o = std::lcm(o, s_.factors[i] / std::gcd(s_.factors[i], a[i] == 0 ? s_.factors[i] : a[i]));
  return o;
}

int SubgroupDual::index_from_gen_values(const std::vector<QMod1> &vals) const {
  require(vals.size() == s_.factors.size(), "SubgroupDual: generator value count");
  int out = 0;
  for (size_t i = 0; i < s_.factors.size(); ++i) {
    long long k = vals[i].scaled_to(s_.factors[i]);  // throws unless den | d_i
    out = out * s_.factors[i] + static_cast<int>(k);
  }
  return out;
}

int SubgroupDual::index_from_values(const std::function<QMod1(int)> &val) const {
  std::vector<QMod1> gv;
  for (int g : s_.gens) gv.push_back(val(g));
  int idx = index_from_gen_values(gv);
  for (int x : s_.elems)
    require(value(idx, x) == val(x), "SubgroupDual: values are not a character");
  return idx;
}

DualGroup::DualGroup(const FiniteGroup &g) : g_(&g) {
  QuotientGroup q = quotient_group(g, g.derived_subgroup(), g.name() + "^ab");
  gab_ = q.group;
  proj_ = std::move(q.proj);
  dual_ = SubgroupDual(smith_decompose(gab_->full_subgroup()));
  for (int gen : dual_.structure().gens) {
    int lift = -1;
    for (int x = 0; x < g.order(); ++x)
      if (proj_[x] == gen) {
        lift = x;
        break;
      }
    require(lift >= 0, "DualGroup: generator lift missing");
    lifts_.push_back(lift);
  }
}

QMod1 DualGroup::value(int chi, int g) const { return dual_.value(chi, proj_[g]); }

int DualGroup::compose_with_endo(int chi, const std::vector<int> &f) const {
  std::vector<QMod1> gv;
  gv.reserve(lifts_.size());
  for (int lift : lifts_) gv.push_back(value(chi, f[lift]));
  return dual_.index_from_gen_values(gv);
}

int DualGroup::index_from_values(const std::function<QMod1(int)> &val) const {
  std::vector<QMod1> gv;
  for (int lift : lifts_) gv.push_back(val(lift));
  int idx = dual_.index_from_gen_values(gv);
  for (int x = 0; x < g_->order(); ++x)
    require(value(idx, x) == val(x), "DualGroup: values are not a character");
  return idx;
}

QMod1 Bicharacter::value(int g, int h) const {
  // factors through the abelianization in both slots
  const auto &c1 = dual->ab_coords(g);
  const auto &c2 = dual->ab_coords(h);
  QMod1 v;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      v += m[i][j] * (static_cast<long long>(c1[i]) * c2[j]);
  return v;
}

int Bicharacter::hom_index(int g) const {
  // omega(g, .) is a character by biadditivity
  std::vector<QMod1> gv;
  for (int i = 0; i < dual->rank(); ++i) gv.push_back(value(g, dual->gen_lift(i)));
  return dual->index_from_gen_values(gv);
}

Bicharacter Bicharacter::transpose() const {
  Bicharacter t{dual, m};
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) t.m[i][j] = m[j][i];
  return t;
}

bool Bicharacter::is_trivial() const {
  for (const auto &row : m)
    for (const auto &v : row)
      if (!v.is_zero()) return false;
  return true;
}

BicharacterGroup::BicharacterGroup(const DualGroup &dual, long long max_count)
    : dual_(&dual) {
  const auto &f = dual.ab_structure().factors;
  int k = static_cast<int>(f.size());
  entry_mod_.resize(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int g = std::gcd(f[i], f[j]);
      entry_mod_[static_cast<size_t>(i) * k + j] = g;
      count_ *= static_cast<unsigned long long>(g);
      if (count_ > static_cast<unsigned long long>(max_count)) enumerable_ = false;
    }
}

Bicharacter BicharacterGroup::at(unsigned long long idx) const {
  int k = dual_->rank();
  Bicharacter b{dual_, std::vector<std::vector<QMod1>>(k, std::vector<QMod1>(k))};
  for (size_t t = entry_mod_.size(); t-- > 0;) {
    int mod = entry_mod_[t];
    int e = static_cast<int>(idx % mod);
    idx /= mod;
    b.m[t / k][t % k] = QMod1(e, mod);
  }
  require(idx == 0, "BicharacterGroup: index out of range");
  return b;
}

unsigned long long BicharacterGroup::index_of(const Bicharacter &b) const {
  int k = dual_->rank();
  unsigned long long idx = 0;
  for (size_t t = 0; t < entry_mod_.size(); ++t) {
    int mod = entry_mod_[t];
    long long e = b.m[t / k][t % k].scaled_to(mod);
    idx = idx * mod + static_cast<unsigned long long>(e);
  }
  return idx;
}

Bicharacter BicharacterGroup::from_hom(const std::vector<int> &hom) const {
  int k = dual_->rank();
  Bicharacter b{dual_, std::vector<std::vector<QMod1>>(k, std::vector<QMod1>(k))};
  for (int i = 0; i < k; ++i) {
    int chi = hom[dual_->gen_lift(i)];
    for (int j = 0; j < k; ++j) b.m[i][j] = dual_->value(chi, dual_->gen_lift(j));
  }
  // validate the matrix entries respect the gcd moduli
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      (void)b.m[i][j].scaled_to(entry_mod_[static_cast<size_t>(i) * k + j]);
  return b;
}

std::vector<LinearCharacter> dual_group_elements(const DualGroup &d) {
  std::vector<LinearCharacter> out;
  const FiniteGroup &g = d.group();
  for (int chi = 0; chi < d.size(); ++chi) {
    LinearCharacter c;
    c.group = &g;
    for (int x = 0; x < g.order(); ++x) c.values.push_back(d.value(chi, x));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace dgaut
