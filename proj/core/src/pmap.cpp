#include "dgaut/pmap.hpp"

#include <algorithm>

namespace dgaut {

PMap PMap::trivial(const GroupContext &ctx) {
  return from_zhom(ctx, std::vector<int>(ctx.zdual().size(), 0));
}

PMap PMap::from_zhom(const GroupContext &ctx, std::vector<int> phi) {
  const SubgroupDual &zd = ctx.zdual();
  const FiniteGroup &g = ctx.group();
  require(static_cast<int>(phi.size()) == zd.size(), "PMap: phi size mismatch");
  const Subgroup &z = g.center();
  for (int v : phi) require(v >= 0 && z.contains(v), "PMap: image outside the center");
  for (int t1 = 0; t1 < zd.size(); ++t1)
    for (int t2 = 0; t2 < zd.size(); ++t2)
      require(phi[zd.add(t1, t2)] == g.mul(phi[t1], phi[t2]),
              "PMap: phi is not a homomorphism");

  PMap p;
  p.ctx_ = &ctx;
  int n = g.order();
  p.pos_a_.assign(n, -1);
  p.pos_b_.assign(n, -1);

  std::vector<int> kernel;
  for (int t = 0; t < zd.size(); ++t)
    if (phi[t] == 0) kernel.push_back(t);
  for (int zel : z.elems) {
    bool in = true;
    for (int t : kernel)
      if (!zd.value(t, zel).is_zero()) {
        in = false;
        break;
      }
    if (in) p.a_.push_back(zel);
  }
  {
    std::vector<char> seen(n, 0);
    for (int v : phi)
      if (!seen[v]) {
        seen[v] = 1;
        p.b_.push_back(v);
      }
    std::sort(p.b_.begin(), p.b_.end());
  }
  require(p.a_.size() == p.b_.size(), "PMap: |A| != |B|");
  for (size_t i = 0; i < p.a_.size(); ++i) p.pos_a_[p.a_[i]] = static_cast<int>(i);
  for (size_t i = 0; i < p.b_.size(); ++i) p.pos_b_[p.b_[i]] = static_cast<int>(i);

  p.m_.assign(p.a_.size() * p.b_.size(), QMod1());
  std::vector<int> pre(p.b_.size(), -1);
  for (int t = 0; t < zd.size(); ++t) {
    int pos = p.pos_b_[phi[t]];
    if (pre[pos] < 0) pre[pos] = t;
  }
  for (size_t bi = 0; bi < p.b_.size(); ++bi) {
    require(pre[bi] >= 0, "PMap: image element without preimage");
    for (size_t ai = 0; ai < p.a_.size(); ++ai)
      p.m_[ai * p.b_.size() + bi] = zd.value(pre[bi], p.a_[ai]);
  }
  p.phi_ = std::move(phi);
  p.validate_pairing();
  return p;
}

PMap PMap::from_dual_gen_images(const GroupContext &ctx, const std::vector<int> &img) {
  const SubgroupDual &zd = ctx.zdual();
  const auto &factors = zd.structure().factors;
  require(img.size() == factors.size(), "PMap: generator image count mismatch");
  const FiniteGroup &g = ctx.group();
  for (size_t i = 0; i < img.size(); ++i)
    require(g.power(img[i], factors[i]) == 0, "PMap: generator image order incompatible");
  std::vector<int> phi(zd.size());
  for (int t = 0; t < zd.size(); ++t) {
    auto coords = zd.char_coords(t);
    int x = 0;
    for (size_t i = 0; i < coords.size(); ++i) x = g.mul(x, g.power(img[i], coords[i]));
    phi[t] = x;
  }
  return from_zhom(ctx, std::move(phi));
}

PMap PMap::from_pairing(const GroupContext &ctx, std::vector<int> a_elems,
                        std::vector<int> b_elems, std::vector<std::vector<QMod1>> m) {
  const FiniteGroup &g = ctx.group();
  PMap p;
  p.ctx_ = &ctx;
  p.a_ = std::move(a_elems);
  p.b_ = std::move(b_elems);
  require(std::is_sorted(p.a_.begin(), p.a_.end()) &&
              std::is_sorted(p.b_.begin(), p.b_.end()),
          "PMap: subgroup element lists must be sorted");
  require(p.a_.size() == p.b_.size(), "PMap: |A| != |B|");
  // abelian subgroup checks
  for (const auto &elems : {p.a_, p.b_}) {
    Subgroup s = g.subgroup_from_elements(elems);
    for (int x : s.elems)
      for (int y : s.elems)
        require(g.mul(x, y) == g.mul(y, x), "PMap: support subgroup not abelian");
  }
  int n = g.order();
  p.pos_a_.assign(n, -1);
  p.pos_b_.assign(n, -1);
  for (size_t i = 0; i < p.a_.size(); ++i) p.pos_a_[p.a_[i]] = static_cast<int>(i);
  for (size_t i = 0; i < p.b_.size(); ++i) p.pos_b_[p.b_[i]] = static_cast<int>(i);
  p.m_.assign(p.a_.size() * p.b_.size(), QMod1());
  require(m.size() == p.a_.size(), "PMap: pairing row count");
  for (size_t ai = 0; ai < p.a_.size(); ++ai) {
    require(m[ai].size() == p.b_.size(), "PMap: pairing column count");
    for (size_t bi = 0; bi < p.b_.size(); ++bi) p.m_[ai * p.b_.size() + bi] = m[ai][bi];
  }
  p.validate_pairing();
  p.derive_phi();
  return p;
}

void PMap::validate_pairing() const {
  const FiniteGroup &g = ctx_->group();
  size_t nb = b_.size();
  // biadditive in both slots
  for (size_t a1 = 0; a1 < a_.size(); ++a1)
    for (size_t a2 = 0; a2 < a_.size(); ++a2) {
      int prod = g.mul(a_[a1], a_[a2]);
      int pi = pos_a_[prod];
      require(pi >= 0, "PMap: A not closed");
      for (size_t bi = 0; bi < nb; ++bi)
        require(m_[static_cast<size_t>(pi) * nb + bi] ==
                    m_[a1 * nb + bi] + m_[a2 * nb + bi],
                "PMap: pairing not additive in the first slot");
    }
  for (size_t b1 = 0; b1 < nb; ++b1)
    for (size_t b2 = 0; b2 < nb; ++b2) {
      int prod = g.mul(b_[b1], b_[b2]);
      int pi = pos_b_[prod];
      require(pi >= 0, "PMap: B not closed");
      for (size_t ai = 0; ai < a_.size(); ++ai)
        require(m_[ai * nb + pi] == m_[ai * nb + b1] + m_[ai * nb + b2],
                "PMap: pairing not additive in the second slot");
    }
  // perfect: rows pairwise distinct and columns pairwise distinct
  for (size_t i = 0; i < a_.size(); ++i)
    for (size_t j = i + 1; j < a_.size(); ++j) {
      bool same = true;
      for (size_t bi = 0; bi < nb && same; ++bi) same = m_[i * nb + bi] == m_[j * nb + bi];
      require(!same, "PMap: pairing is degenerate (rows)");
    }
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i + 1; j < nb; ++j) {
      bool same = true;
      for (size_t ai = 0; ai < a_.size() && same; ++ai)
        same = m_[ai * nb + i] == m_[ai * nb + j];
      require(!same, "PMap: pairing is degenerate (columns)");
    }
}

void PMap::derive_phi() {
  const Subgroup &z = ctx_->group().center();
  for (int a : a_)
    if (!z.contains(a)) return;
  for (int b : b_)
    if (!z.contains(b)) return;
  const SubgroupDual &zd = ctx_->zdual();
  phi_.assign(zd.size(), -1);
  size_t nb = b_.size();
  for (int t = 0; t < zd.size(); ++t) {
    for (size_t bi = 0; bi < nb; ++bi) {
      bool ok = true;
      for (size_t ai = 0; ai < a_.size() && ok; ++ai)
        ok = zd.value(t, a_[ai]) == m_[ai * nb + bi];
      if (ok) {
        phi_[t] = b_[bi];
        break;
      }
    }
    require(phi_[t] >= 0, "PMap: central pairing does not cover dual(A)");
  }
}

const std::vector<int> &PMap::phi() const {
  require(!phi_.empty(), "PMap: non-central support has no phi form");
  return phi_;
}

int PMap::on_zchar(int theta) const { return phi()[theta]; }

int PMap::on_gchar(int chi) const {
  if (!phi_.empty()) return phi_[ctx_->gchar_to_zchar(chi)];
  const DualGroup &dual = ctx_->dual();
  size_t nb = b_.size();
  for (size_t bi = 0; bi < nb; ++bi) {
    bool ok = true;
    for (size_t ai = 0; ai < a_.size() && ok; ++ai)
      ok = dual.value(chi, a_[ai]) == m_[ai * nb + bi];
    if (ok) return b_[bi];
  }
  throw invariant_error("PMap: character restriction not in the pairing image");
}

QMod1 PMap::pairing(int a, int b) const {
  int ai = pos_a_[a], bi = pos_b_[b];
  require(ai >= 0 && bi >= 0, "PMap: pairing outside A x B");
  return m_[static_cast<size_t>(ai) * b_.size() + bi];
}

PMap PMap::adjoint() const {
  std::vector<std::vector<QMod1>> mt(b_.size(), std::vector<QMod1>(a_.size()));
  for (size_t ai = 0; ai < a_.size(); ++ai)
    for (size_t bi = 0; bi < b_.size(); ++bi)
      mt[bi][ai] = m_[ai * b_.size() + bi];
  return from_pairing(*ctx_, b_, a_, std::move(mt));
}

int PMap::row_matching(const std::vector<QMod1> &mu_on_b) const {
  size_t nb = b_.size();
  for (size_t ai = 0; ai < a_.size(); ++ai) {
    bool ok = true;
    for (size_t bi = 0; bi < nb && ok; ++bi) ok = m_[ai * nb + bi] == mu_on_b[bi];
    if (ok) return static_cast<int>(ai);
  }
  throw invariant_error("PMap: no pairing row matches (character not on B-dual)");
}

unsigned long long PMap::hash() const {
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&h](unsigned long long v) {
    h ^= v + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  for (int v : a_) mix(static_cast<unsigned long long>(v));
  for (int v : b_) mix(static_cast<unsigned long long>(v));
  for (const auto &q : m_) {
    mix(static_cast<unsigned long long>(q.num));
    mix(static_cast<unsigned long long>(q.den));
  }
  return h;
}

}  // namespace dgaut
