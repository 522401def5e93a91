#pragma once

#include <optional>

#include "dgaut/group.hpp"
#include "dgaut/rational.hpp"

namespace dgaut {

// Invariant-factor presentation of an abelian subgroup: S = <g_1> x ... x <g_k>
// with d_1 | d_2 | ... | d_k, all d_i > 1. The coordinate map is a bijection
// onto the mixed-radix box (first coordinate most significant).
struct AbelianStructure {
  const FiniteGroup *parent = nullptr;
  std::vector<int> elems;    // subgroup elements, ascending
  std::vector<int> factors;  // invariant factors, ascending divisibility
  std::vector<int> gens;     // one generator per factor, parent indices

  int order() const { return static_cast<int>(elems.size()); }
  int rank() const { return static_cast<int>(factors.size()); }

  const std::vector<int> &coords(int parent_elt) const;
  int element_of(const std::vector<int> &c) const;
  bool contains(int parent_elt) const { return pos_of_[parent_elt] >= 0; }

  // mixed-radix encode/decode of coordinate tuples
  int tuple_index(const std::vector<int> &c) const;
  std::vector<int> tuple_of_index(int idx) const;

  // filled by smith_decompose
  std::vector<int> pos_of_;                    // parent index -> coords slot or -1
  std::vector<std::vector<int>> coords_list_;  // per slot
  std::vector<int> elem_by_tuple_;             // tuple index -> parent element
};

// Smith-normal-form decomposition of the relation lattice of a greedy
// generating set. Errors on non-abelian input.
AbelianStructure smith_decompose(const Subgroup &s);

// A homomorphism A -> B given by generator images (parent indices of B side).
struct AbelianHom {
  std::vector<int> gen_images;
};

// All homomorphisms A -> B, lexicographic in the per-generator candidate
// order. Count is prod_{i,j} gcd(d_i, e_j); errors if it exceeds max_count.
std::vector<AbelianHom> enumerate_homs(const AbelianStructure &a, const AbelianStructure &b,
                                       long long max_count = 20000000);
unsigned long long hom_count(const AbelianStructure &a, const AbelianStructure &b);

int apply_hom(const AbelianStructure &a, const AbelianStructure &b, const AbelianHom &h,
              int x);

// |Aut(A)| for A = prod Z_(orders[i]) via the primary-decomposition formula.
BigUnsigned abelian_aut_order(const std::vector<int> &cyclic_orders);

// Exhaustive subgroup enumeration of an abelian subgroup's lattice, used for
// the direct-factor test. Returns the lexicographically smallest complement
// of s inside z, if one exists (s <= z required, z abelian).
std::optional<Subgroup> complement_in_abelian(const Subgroup &z, const Subgroup &s);

}  // namespace dgaut
