#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgaut/errors.hpp"

namespace dgaut {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

using Perm = std::vector<int>;  // image array, 0-based

struct Subgroup {
  const FiniteGroup *parent = nullptr;
  std::vector<char> member;  // size |G|
  std::vector<int> elems;    // ascending

  bool contains(int g) const { return member[static_cast<size_t>(g)] != 0; }
  int order() const { return static_cast<int>(elems.size()); }
  bool operator==(const Subgroup &o) const { return parent == o.parent && elems == o.elems; }
};

struct GroupHom {
  const FiniteGroup *dom = nullptr;
  const FiniteGroup *cod = nullptr;
  std::vector<int> img;  // element-indexed images

  int operator()(int g) const { return img[static_cast<size_t>(g)]; }
  bool is_valid() const;      // f(xy) = f(x)f(y), f(1) = 1
  bool is_bijective() const;  // and dom, cod same order
  bool is_endomorphism() const { return dom == cod; }
};

// Dense Cayley-table group. Indices are the elements; 0 is the identity.
// Immutable after construction; every derived structure is precomputed so
// concurrent readers never race.
class FiniteGroup {
 public:
  static GroupPtr from_table(std::vector<std::vector<int>> table, std::string name);
  // Closure of permutations on {0..degree-1}; elements ordered by BFS level,
  // lexicographic within a level.
  static GroupPtr from_permutation_generators(int degree, const std::vector<Perm> &gens,
                                              std::string name, int max_order = 512);

  int order() const { return n_; }
  const std::string &name() const { return name_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  int conj(int x, int g) const { return mul(mul(x, g), inv(x)); }  // x g x^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int power(int g, long long k) const;

  int element_order(int g) const { return elt_order_[static_cast<size_t>(g)]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const Subgroup &center() const { return center_; }
  const Subgroup &derived_subgroup() const { return derived_; }
  const Subgroup &center_meet_derived() const { return center_meet_derived_; }

  int class_count() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int g) const { return class_of_[static_cast<size_t>(g)]; }
  int class_rep(int c) const { return class_reps_[static_cast<size_t>(c)]; }
  const std::vector<int> &class_elements(int c) const {
    return class_elems_[static_cast<size_t>(c)];
  }
  int class_size(int c) const { return static_cast<int>(class_elems_[c].size()); }
  // minimal x with x g x^-1 = class_rep(class_of(g))
  int conjugator_to_rep(int g) const { return conj_to_rep_[static_cast<size_t>(g)]; }

  Subgroup centralizer(int s) const;
  Subgroup subgroup_from_elements(const std::vector<int> &elems) const;
  Subgroup trivial_subgroup() const;
  Subgroup full_subgroup() const;
  Subgroup generated_subgroup(const std::vector<int> &gens) const;
  bool is_normal(const Subgroup &s) const;

  const std::vector<int> &generators() const { return gens_; }

  bool is_perfect() const { return derived_.order() == n_; }
  bool is_centerless() const { return center_.order() == 1; }
  bool is_stem() const;  // Z(G) <= G'

  unsigned long long table_hash() const { return hash_; }

  // multiset of element orders, ascending; cheap isomorphism invariant
  const std::vector<int> &order_profile() const { return order_profile_; }

 private:
  FiniteGroup() = default;
  void finalize(std::string name, std::vector<int> gens);
  void validate_axioms() const;

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;
  std::vector<int> gens_;

  std::vector<int> elt_order_;
  std::vector<int> order_profile_;
  int exponent_ = 1;
  bool abelian_ = true;
  Subgroup center_, derived_, center_meet_derived_;
  std::vector<int> class_of_, class_reps_, conj_to_rep_;
  std::vector<std::vector<int>> class_elems_;
  unsigned long long hash_ = 0;
};

// A subgroup materialized as a group of its own, with index translation.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};
SubgroupGroup subgroup_as_group(const Subgroup &s, std::string name);

struct QuotientGroup {
  GroupPtr group;
  std::vector<int> proj;  // parent index -> quotient index
};
QuotientGroup quotient_group(const FiniteGroup &g, const Subgroup &normal, std::string name);

// Internal direct product decomposition data: G = A x H, both normal,
// trivial intersection. part_a/part_h give the unique factorization g = a*h.
struct DirectSplit {
  Subgroup a, h;
  std::vector<int> part_a, part_h;
};
std::optional<DirectSplit> internal_direct_split(const FiniteGroup &g, const Subgroup &a,
                                                 const Subgroup &h);

// Isomorphism search by generator-image backtracking with order and
// class-size pruning. No polynomial-time claim.
std::optional<GroupHom> find_isomorphism(const FiniteGroup &g, const FiniteGroup &h);
bool are_isomorphic(const FiniteGroup &g, const FiniteGroup &h);

// All automorphisms as image arrays, sorted lexicographically.
std::vector<std::vector<int>> all_automorphisms(const FiniteGroup &g);

// Greedy generating sequence: repeatedly adjoin the element of maximal order
// (smallest index on ties) outside the current closure.
std::vector<int> generating_sequence(const FiniteGroup &g);

// True iff no decomposition G = A x H with A abelian nontrivial. On false,
// returns a witness: subgroup pair (A, complement) forming the split.
struct PurelyNonabelianResult {
  bool purely_nonabelian;
  std::optional<DirectSplit> witness;
};
PurelyNonabelianResult purely_nonabelian(const FiniteGroup &g);

// Exhaustive maximal decomposition G = A x H with A abelian, H purely
// non-abelian (A may be trivial).
struct AbelianFactorSplit {
  // flattened: list of prime-order witnesses applied iteratively
  Subgroup abelian_part;
  Subgroup nonabelian_part;
  std::vector<int> part_a, part_h;
};
AbelianFactorSplit strip_abelian_factors(const FiniteGroup &g);

}  // namespace dgaut
