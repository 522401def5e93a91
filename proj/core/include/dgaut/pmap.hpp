#pragma once

#include "dgaut/context.hpp"

namespace dgaut {

// Hopf morphism p: k^G -> kG, canonically a pair of abelian subgroups A, B
// with a perfect pairing m: A x B -> Q/Z (the pairing encodes the isomorphism
// dual(A) = B, column by column):
//   p(e_a) = (1/|A|) sum_{b in B} zeta^(-m(a,b)) b      for a in A,
//   p(e_g) = 0                                          for g outside A,
//   p(chi) = the unique b whose pairing column matches chi|_A.
// When A, B are central (always, for automorphism-grade data) the equivalent
// form phi: characters of Z(G) -> Z(G) is stored too; composition uses it.
class PMap {
 public:
  static PMap trivial(const GroupContext &ctx);
  // phi[theta] = image of the zdual character theta; validated homomorphism
  static PMap from_zhom(const GroupContext &ctx, std::vector<int> phi);
  // phi given by images of the coordinate characters of Z(G)
  static PMap from_dual_gen_images(const GroupContext &ctx, const std::vector<int> &img);
  // general form: arbitrary abelian subgroups and a perfect pairing,
  // m[i][j] = m(a_elems[i], b_elems[j])
  static PMap from_pairing(const GroupContext &ctx, std::vector<int> a_elems,
                           std::vector<int> b_elems,
                           std::vector<std::vector<QMod1>> m);

  const GroupContext &context() const { return *ctx_; }
  bool is_central() const { return !phi_.empty(); }
  const std::vector<int> &phi() const;  // requires is_central()
  int on_zchar(int theta) const;
  int on_gchar(int chi) const;  // f(chi|_A) for any linear character of G

  const std::vector<int> &A() const { return a_; }
  const std::vector<int> &B() const { return b_; }
  bool in_A(int g) const { return pos_a_[g] >= 0; }
  QMod1 pairing(int a, int b) const;  // m(a, b), parent-element arguments
  bool is_trivial() const { return a_.size() == 1; }

  PMap adjoint() const;  // (B, A, m^T): the flip-side p^*

  // position in A() of the unique a with m(a, .) equal to the given character
  // of B (the rows of a perfect pairing exhaust the dual of B)
  int row_matching(const std::vector<QMod1> &mu_on_b) const;

  friend bool operator==(const PMap &x, const PMap &y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
  }
  unsigned long long hash() const;

 private:
  const GroupContext *ctx_ = nullptr;
  std::vector<int> a_, b_;          // sorted parent elements
  std::vector<int> pos_a_, pos_b_;  // parent element -> position or -1
  std::vector<QMod1> m_;            // |A| x |B| pairing, row-major
  std::vector<int> phi_;            // central form; empty if A or B not central

  void validate_pairing() const;
  void derive_phi();
};

}  // namespace dgaut
