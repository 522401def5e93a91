#include "dgaut/quadruple.hpp"

#include <algorithm>

namespace dgaut {

bool GammaMap::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool GammaMap::is_bijective() const {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

GammaMap compose(const GammaMap &a, const GammaMap &b) {
  require(a.ctx == b.ctx, "GammaMap: group mismatch");
  GammaMap out{a.ctx, std::vector<int>(a.img.size())};
  for (size_t i = 0; i < a.img.size(); ++i) out.img[i] = a.img[b.img[i]];
  return out;
}

MorphQuadruple::MorphQuadruple(const GroupContext &ctx, PMap p, std::vector<int> ustar,
                               std::vector<int> rchar, std::vector<int> v)
    : ctx_(&ctx), p_(std::move(p)), ustar_(std::move(ustar)), rchar_(std::move(rchar)),
      v_(std::move(v)) {
  int n = ctx.group().order();
  require(static_cast<int>(ustar_.size()) == n && static_cast<int>(v_.size()) == n &&
              static_cast<int>(rchar_.size()) == n,
          "MorphQuadruple: component size mismatch");
}

MorphQuadruple MorphQuadruple::identity(const GroupContext &ctx) {
  int n = ctx.group().order();
  std::vector<int> id(n), triv(n, 0);
  for (int i = 0; i < n; ++i) id[i] = i;
  return MorphQuadruple(ctx, PMap::trivial(ctx), id, triv, id);
}

MorphQuadruple MorphQuadruple::from_lambda(const GroupContext &ctx, PMap p) {
  MorphQuadruple q = identity(ctx);
  q.p_ = std::move(p);
  return q;
}

MorphQuadruple MorphQuadruple::from_bicharacter(const GroupContext &ctx,
                                                const Bicharacter &b) {
  MorphQuadruple q = identity(ctx);
  for (int g = 0; g < ctx.group().order(); ++g) q.rchar_[g] = b.hom_index(g);
  return q;
}

MorphQuadruple MorphQuadruple::from_spautc_pair(const GroupContext &ctx, int w_aut,
                                                int v_aut) {
  const AutGroup &aut = ctx.aut();
  MorphQuadruple q = identity(ctx);
  q.ustar_ = aut.image(aut.inverse(w_aut));
  q.v_ = aut.image(v_aut);
  return q;
}

MorphQuadruple MorphQuadruple::from_aut(const GroupContext &ctx, int v_aut) {
  return from_spautc_pair(ctx, v_aut, v_aut);
}

MorphQuadruple MorphQuadruple::from_homs(const GroupContext &ctx, PMap p,
                                         std::vector<int> ustar, std::vector<int> rchar,
                                         std::vector<int> v) {
  return MorphQuadruple(ctx, std::move(p), std::move(ustar), std::move(rchar),
                        std::move(v));
}

bool MorphQuadruple::is_identity() const {
  if (!p_.is_trivial()) return false;
  for (int g = 0; g < ctx_->group().order(); ++g)
    if (ustar_[g] != g || v_[g] != g || rchar_[g] != 0) return false;
  return true;
}

MorphQuadruple::CompatReport MorphQuadruple::check_compatibility() const {
  const FiniteGroup &g = ctx_->group();
  const DualGroup &dual = ctx_->dual();
  int n = g.order();
  auto fail = [](const char *tag) { return CompatReport{false, tag}; };

  // type invariants first
  GroupHom us{&g, &g, ustar_}, vh{&g, &g, v_};
  if (!us.is_valid()) return fail("ustar-hom");
  if (!vh.is_valid()) return fail("v-hom");
  if (rchar_[0] != 0) return fail("r-hom");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rchar_[g.mul(x, y)] != dual.add(rchar_[x], rchar_[y])) return fail("r-hom");

  // eq1: u, p cocommute, equivalently Im(ustar) commutes with A elementwise
  for (int a : p_.A())
    for (int x = 0; x < n; ++x)
      if (g.mul(a, ustar_[x]) != g.mul(ustar_[x], a)) return fail("eq1");

  // eq5: v(h) p(e_c) v(h)^-1 = p(e_{h c h^-1}); support and coefficients
  for (int h = 0; h < n; ++h) {
    for (int c = 0; c < n; ++c) {
      bool ca = p_.in_A(c), cc = p_.in_A(g.conj(h, c));
      if (ca != cc) return fail("eq5");
    }
    for (int a : p_.A()) {
      int a2 = g.conj(h, a);
      for (int b : p_.B()) {
        int b2 = g.conj(v_[h], b);
        // coeff of v(h) b v(h)^-1 in lhs is zeta^(-m(a,b)); in rhs it is
        // zeta^(-m(h a h^-1, b2)) when b2 lies in B, else the rhs support differs
        bool in_b = std::binary_search(p_.B().begin(), p_.B().end(), b2);
        if (!in_b) return fail("eq5");
        if (!(p_.pairing(a, b) == p_.pairing(a2, b2))) return fail("eq5");
      }
    }
  }

  // eq6: ustar(v(h) x v(h)^-1) = h ustar(x) h^-1
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x)
      if (ustar_[g.conj(v_[h], x)] != g.conj(h, ustar_[x])) return fail("eq6");

  return CompatReport{};
}

DoubleLinearMap MorphQuadruple::to_linear_map() const {
  const FiniteGroup &g = ctx_->group();
  const CycContext &cyc = ctx_->cyc();
  int n = g.order();
  // fibers of ustar
  std::vector<std::vector<int>> fiber(n);
  for (int y = 0; y < n; ++y) fiber[ustar_[y]].push_back(y);

  Rational scale(1, static_cast<long long>(p_.A().size()));
  DoubleLinearMap out(*ctx_);
  for (int gg = 0; gg < n; ++gg) {
    // column pattern depends on h only through omega and v; precompute pairs
    // (y, b-part) with the pairing exponent for this gg
    struct Term {
      int y, b;
      QMod1 mexp;  // m(a, b) with a = gg ustar(y)^-1
    };
    std::vector<Term> pattern;
    for (int a : p_.A()) {
      int x = g.mul(g.inv(a), gg);  // ustar(y) = a^-1 g
      for (int y : fiber[x])
        for (int b : p_.B()) pattern.push_back({y, b, p_.pairing(a, b)});
    }
    for (int h = 0; h < n; ++h) {
      DoubleLinearMap::Column col;
      col.reserve(pattern.size());
      for (const auto &t : pattern) {
        QMod1 e = omega(h, t.y) - t.mexp;
        col.push_back({t.y * n + g.mul(t.b, v_[h]),
                       CycScalar::root(cyc, e).scaled(scale)});
      }
      out.set_column(gg * n + h, std::move(col));
    }
  }
  return out;
}

GammaMap MorphQuadruple::restrict_grouplikes() const {
  const DualGroup &dual = ctx_->dual();
  const FiniteGroup &g = ctx_->group();
  int n = g.order();
  GammaMap out{ctx_, std::vector<int>(static_cast<size_t>(dual.size()) * n)};
  // precompute chi o ustar for each chi
  std::vector<int> upart(dual.size());
  for (int chi = 0; chi < dual.size(); ++chi)
    upart[chi] = dual.compose_with_endo(chi, ustar_);
  for (int chi = 0; chi < dual.size(); ++chi) {
    int pchi = p_.on_gchar(chi);
    for (int x = 0; x < n; ++x)
      out.img[static_cast<size_t>(chi) * n + x] =
          dual.add(rchar_[x], upart[chi]) * n + g.mul(pchi, v_[x]);
  }
  return out;
}

MorphQuadruple MorphQuadruple::flip() const {
  const DualGroup &dual = ctx_->dual();
  const FiniteGroup &g = ctx_->group();
  int n = g.order();
  std::vector<int> rt(n);
  for (int x = 0; x < n; ++x) {
    std::vector<QMod1> gv;
    gv.reserve(dual.rank());
    for (int i = 0; i < dual.rank(); ++i)
      gv.push_back(dual.value(rchar_[dual.gen_lift(i)], x));
    rt[x] = dual.index_from_gen_values(gv);
  }
  return MorphQuadruple(*ctx_, p_.adjoint(), v_, std::move(rt), ustar_);
}

MorphQuadruple compose(const MorphQuadruple &q2, const MorphQuadruple &q1) {
  require(q2.ctx_ == q1.ctx_, "MorphQuadruple: group mismatch");
  const GroupContext &ctx = *q1.ctx_;
  const FiniteGroup &g = ctx.group();
  const DualGroup &dual = ctx.dual();
  const SubgroupDual &zd = ctx.zdual();
  int n = g.order();

  // v'(x) = p2(r1(x)) v2(v1(x))
  std::vector<int> v(n);
  for (int x = 0; x < n; ++x)
    v[x] = g.mul(q2.p_.on_gchar(q1.rchar_[x]), q2.v_[q1.v_[x]]);

  // ustar'(x) = ustar1(ustar2(x)) * p1^*(r2^T(x))
  PMap p1adj = q1.p_.adjoint();
  std::vector<int> ustar(n);
  for (int x = 0; x < n; ++x) {
    // theta = restriction to Z of the character y -> omega2(y, x)
    std::vector<QMod1> gv;
    gv.reserve(zd.structure().gens.size());
    for (int zg : zd.structure().gens) gv.push_back(dual.value(q2.rchar_[zg], x));
    int theta = zd.index_from_gen_values(gv);
    ustar[x] = g.mul(q1.ustar_[q2.ustar_[x]], p1adj.on_zchar(theta));
  }

  // r'(x) = r1(x) o ustar2 + r2(v1(x))
  std::vector<int> rchar(n);
  for (int x = 0; x < n; ++x) {
    std::vector<QMod1> gv;
    gv.reserve(dual.rank());
    for (int i = 0; i < dual.rank(); ++i) {
      int lift = dual.gen_lift(i);
      gv.push_back(dual.value(q1.rchar_[x], q2.ustar_[lift]) +
                   dual.value(q2.rchar_[q1.v_[x]], lift));
    }
    rchar[x] = dual.index_from_gen_values(gv);
  }

  // p'(theta) = p2(theta o ustar1|_Z) * v2(p1(theta))
  std::vector<int> phi(zd.size());
  for (int t = 0; t < zd.size(); ++t) {
    std::vector<QMod1> gv;
    gv.reserve(zd.structure().gens.size());
    for (int zg : zd.structure().gens) {
      int img = q1.ustar_[zg];
      require(ctx.group().center().contains(img),
              "compose: ustar does not preserve the center");
      gv.push_back(zd.value(t, img));
    }
    int tu = zd.index_from_gen_values(gv);
    phi[t] = g.mul(q2.p_.on_zchar(tu), q2.v_[q1.p_.on_zchar(t)]);
  }

  return MorphQuadruple(ctx, PMap::from_zhom(ctx, std::move(phi)), std::move(ustar),
                        std::move(rchar), std::move(v));
}

MorphQuadruple MorphQuadruple::power_inverse(long long max_steps) const {
  MorphQuadruple acc = *this;
  MorphQuadruple prev = identity(*ctx_);
  for (long long i = 0; i < max_steps; ++i) {
    if (acc.is_identity()) return prev;
    prev = acc;
    acc = compose(acc, *this);
  }
  throw invariant_error("power_inverse: order exceeds step bound");
}

unsigned long long MorphQuadruple::hash() const {
  unsigned long long h = p_.hash();
  auto mix = [&h](const std::vector<int> &v) {
    for (int x : v) {
      h ^= static_cast<unsigned long long>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
  };
  mix(ustar_);
  mix(rchar_);
  mix(v_);
  return h;
}

nlohmann::json MorphQuadruple::to_json() const {
  nlohmann::json j;
  j["p"]["A"] = p_.A();
  j["p"]["B"] = p_.B();
  nlohmann::json f = nlohmann::json::array();
  for (int a : p_.A()) {
    nlohmann::json row = nlohmann::json::array();
    for (int b : p_.B()) row.push_back(p_.pairing(a, b).str());
    f.push_back(row);
  }
  j["p"]["f"] = f;
  j["ustar"] = ustar_;
  int n = ctx_->group().order();
  nlohmann::json om = nlohmann::json::array();
  for (int g = 0; g < n; ++g) {
    nlohmann::json row = nlohmann::json::array();
    for (int x = 0; x < n; ++x) row.push_back(omega(g, x).str());
    om.push_back(row);
  }
  j["omega"] = om;
  j["v"] = v_;
  return j;
}

MorphQuadruple MorphQuadruple::from_json(const GroupContext &ctx, const nlohmann::json &j) {
  const FiniteGroup &g = ctx.group();
  const SubgroupDual &zd = ctx.zdual();
  const DualGroup &dual = ctx.dual();
  int n = g.order();
  (void)zd;
  try {
    std::vector<int> A = j.at("p").at("A").get<std::vector<int>>();
    std::vector<int> B = j.at("p").at("B").get<std::vector<int>>();
    if (A.size() != B.size()) throw parse_error("quadruple json: |A| != |B|");
    std::vector<std::vector<QMod1>> m(A.size(), std::vector<QMod1>(B.size()));
    for (size_t i = 0; i < A.size(); ++i)
      for (size_t k = 0; k < B.size(); ++k)
        m[i][k] = QMod1::parse(j.at("p").at("f").at(i).at(k).get<std::string>());
    std::vector<int> ustar = j.at("ustar").get<std::vector<int>>();
    std::vector<int> v = j.at("v").get<std::vector<int>>();
    std::vector<int> rchar(n);
    for (int x = 0; x < n; ++x) {
      std::vector<QMod1> gv;
      for (int i = 0; i < dual.rank(); ++i)
        gv.push_back(QMod1::parse(
            j.at("omega").at(x).at(dual.gen_lift(i)).get<std::string>()));
      rchar[x] = dual.index_from_gen_values(gv);
      // validate the full row
      for (int y = 0; y < n; ++y) {
        QMod1 expect = QMod1::parse(j.at("omega").at(x).at(y).get<std::string>());
        if (dual.value(rchar[x], y) != expect)
          throw parse_error("quadruple json: omega row is not a character");
      }
    }
    return MorphQuadruple(ctx, PMap::from_pairing(ctx, std::move(A), std::move(B),
                                                  std::move(m)),
                          std::move(ustar), std::move(rchar), std::move(v));
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("quadruple json: ") + e.what());
  } catch (const invariant_error &e) {
    throw parse_error(std::string("quadruple json: ") + e.what());
  }
}

}  // namespace dgaut
