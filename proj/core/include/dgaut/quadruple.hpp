#pragma once

#include "dgaut/double_algebra.hpp"
#include "dgaut/pmap.hpp"

namespace dgaut {

// Endomorphism of the group-likes Gamma = dual(G) x G, images indexed by
// chi * |G| + g.
struct GammaMap {
  const GroupContext *ctx = nullptr;
  std::vector<int> img;

  int size() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  bool is_bijective() const;
  friend GammaMap compose(const GammaMap &a, const GammaMap &b);  // apply b first
  friend bool operator==(const GammaMap &a, const GammaMap &b) { return a.img == b.img; }
};

// Structured Hopf endomorphism datum (p, u*, r, v) of D(G): p a central PMap,
// u the dual of the group endomorphism ustar, r a homomorphism G -> dual(G)
// stored as character indices, v a group endomorphism. The induced linear map
// is psi(e_g # h) = sum_{y, z in B} lambda(g ustar(y)^-1, z) zeta^(omega(h,y))
// e_y # z v(h).
class MorphQuadruple {
 public:
  MorphQuadruple(const GroupContext &ctx, PMap p, std::vector<int> ustar,
                 std::vector<int> rchar, std::vector<int> v);

  static MorphQuadruple identity(const GroupContext &ctx);
  static MorphQuadruple from_lambda(const GroupContext &ctx, PMap p);
  static MorphQuadruple from_bicharacter(const GroupContext &ctx, const Bicharacter &b);
  // (w, v) in SpAut_c embeds with ustar = w^-1: e_g # h -> e_w(g) # v(h)
  static MorphQuadruple from_spautc_pair(const GroupContext &ctx, int w_aut, int v_aut);
  static MorphQuadruple from_aut(const GroupContext &ctx, int v_aut);
  // abelian-path constructor: all four homomorphism entries free
  static MorphQuadruple from_homs(const GroupContext &ctx, PMap p, std::vector<int> ustar,
                                  std::vector<int> rchar, std::vector<int> v);

  const GroupContext &context() const { return *ctx_; }
  const PMap &p() const { return p_; }
  const std::vector<int> &ustar() const { return ustar_; }
  const std::vector<int> &rchar() const { return rchar_; }
  const std::vector<int> &v() const { return v_; }
  QMod1 omega(int g, int x) const { return ctx_->dual().value(rchar_[g], x); }

  bool is_identity() const;

  // structural compatibility: eq1 (u, p cocommute), eq5 (conjugation), eq6
  // (v(h) action vs u), plus the type invariants. Returns the first failure.
  struct CompatReport {
    bool ok = true;
    std::string failed;  // "eq1", "eq5", "eq6", or a type-invariant tag
  };
  CompatReport check_compatibility() const;

  DoubleLinearMap to_linear_map() const;
  GammaMap restrict_grouplikes() const;

  // flip (p, u, r, v) -> (p^*, v^*, r^*, u^*): an anti-automorphism
  MorphQuadruple flip() const;

  // inverse by power iteration (order divides |Aut(D(G))|); callers with
  // structure available use the factored inverse in autdouble instead
  MorphQuadruple power_inverse(long long max_steps = 2000000) const;

  friend MorphQuadruple compose(const MorphQuadruple &q2, const MorphQuadruple &q1);

  friend bool operator==(const MorphQuadruple &a, const MorphQuadruple &b) {
    return a.p_ == b.p_ && a.ustar_ == b.ustar_ && a.rchar_ == b.rchar_ && a.v_ == b.v_;
  }
  friend bool operator!=(const MorphQuadruple &a, const MorphQuadruple &b) {
    return !(a == b);
  }
  unsigned long long hash() const;

  nlohmann::json to_json() const;
  static MorphQuadruple from_json(const GroupContext &ctx, const nlohmann::json &j);

 private:
  const GroupContext *ctx_;
  PMap p_;
  std::vector<int> ustar_;
  std::vector<int> rchar_;
  std::vector<int> v_;
};

}  // namespace dgaut
