#pragma once

#include <functional>

#include "dgaut/abelian.hpp"

namespace dgaut {

// Characters of an abelian subgroup S <= G, indexed by coordinate tuples over
// the invariant factors of S (mixed radix, first coordinate most significant).
class SubgroupDual {
 public:
  SubgroupDual() = default;
  explicit SubgroupDual(AbelianStructure s);

  int size() const { return order_; }
  const AbelianStructure &structure() const { return s_; }
  QMod1 value(int theta, int parent_elt) const;
  int add(int t1, int t2) const;
  int neg(int t) const;
  int char_order(int t) const;
  std::vector<int> char_coords(int t) const { return s_.tuple_of_index(t); }
  int index_of_coords(const std::vector<int> &c) const { return s_.tuple_index(c); }

  // index of the character with the given values at the structure generators;
  // errors if the values are not a valid character
  int index_from_gen_values(const std::vector<QMod1> &vals) const;
  // index from values on arbitrary elements, via the generators
  int index_from_values(const std::function<QMod1(int)> &val) const;

 private:
  AbelianStructure s_;
  int order_ = 1;
};

// The linear characters of G: characters of G/G' pulled back to G.
// Values live in Q/Z (additive model of a root of unity).
class DualGroup {
 public:
  explicit DualGroup(const FiniteGroup &g);

  int size() const { return dual_.size(); }
  int trivial() const { return 0; }
  QMod1 value(int chi, int g) const;
  int add(int c1, int c2) const { return dual_.add(c1, c2); }
  int neg(int c) const { return dual_.neg(c); }
  int char_order(int chi) const { return dual_.char_order(chi); }

  // chi composed with an endomorphism f of G (image array), as an index
  int compose_with_endo(int chi, const std::vector<int> &f) const;
  int index_from_values(const std::function<QMod1(int)> &val) const;
  // as above but trusts that the values define a character
  int index_from_gen_values(const std::vector<QMod1> &vals) const {
    return dual_.index_from_gen_values(vals);
  }
  // coordinates of g's image in G/G'
  const std::vector<int> &ab_coords(int g) const {
    return dual_.structure().coords(proj_[g]);
  }

  const FiniteGroup &group() const { return *g_; }
  const FiniteGroup &ab_quotient() const { return *gab_; }
  const AbelianStructure &ab_structure() const { return dual_.structure(); }
  // minimal preimage in G of the i-th structure generator of G/G'
  int gen_lift(int i) const { return lifts_[i]; }
  int rank() const { return static_cast<int>(lifts_.size()); }

 private:
  const FiniteGroup *g_ = nullptr;
  GroupPtr gab_;
  std::vector<int> proj_;
  SubgroupDual dual_;       // characters of G/G' (structure lives on gab_)
  std::vector<int> lifts_;  // preimages of the Gab generators
};

// Biadditive pairing G x G -> Q/Z vanishing on G' in both slots, stored on
// generator pairs of G/G'. As a homomorphism r: G -> dual(G) it is
// r(g) = (h -> omega(g, h)).
struct Bicharacter {
  const DualGroup *dual = nullptr;
  std::vector<std::vector<QMod1>> m;  // rank x rank, m[i][j] = omega(gen_i, gen_j)

  QMod1 value(int g, int h) const;
  int hom_index(int g) const;  // character index of omega(g, .)
  Bicharacter transpose() const;
  bool is_trivial() const;
  bool operator==(const Bicharacter &o) const { return m == o.m; }
};

// The full bicharacter group, enumerated lexicographically over the matrix
// entries. Index 0 is the trivial pairing.
class BicharacterGroup {
 public:
  explicit BicharacterGroup(const DualGroup &dual, long long max_count = 20000000);

  unsigned long long size() const { return count_; }
  bool enumerable() const { return enumerable_; }
  Bicharacter at(unsigned long long idx) const;
  unsigned long long index_of(const Bicharacter &b) const;
  // pairing built from a homomorphism array g -> char index
  Bicharacter from_hom(const std::vector<int> &hom) const;
  const DualGroup &dual() const { return *dual_; }

 private:
  const DualGroup *dual_;
  std::vector<int> entry_mod_;  // gcd(d_i, d_j) flattened, row-major
  unsigned long long count_ = 1;
  bool enumerable_ = true;
};

// Spec-level convenience types
struct LinearCharacter {
  const FiniteGroup *group = nullptr;
  std::vector<QMod1> values;
};
std::vector<LinearCharacter> dual_group_elements(const DualGroup &d);

}  // namespace dgaut
