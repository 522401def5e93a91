#pragma once

#include <unordered_map>

#include "dgaut/group.hpp"

namespace dgaut {

// Aut(G) with every element stored as a full image array (desk scale).
// Elements are sorted lexicographically, so indices are reproducible.
class AutGroup {
 public:
  explicit AutGroup(const FiniteGroup &g);

  const FiniteGroup &group() const { return *g_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int> &image(int idx) const { return elems_[idx]; }
  int identity_index() const { return id_idx_; }

  int compose(int a, int b) const;  // (a o b)(x) = a[b[x]]
  int inverse(int a) const;
  int index_of(const std::vector<int> &img) const;
  int apply(int a, int g) const { return elems_[a][g]; }

  const std::vector<int> &generating_set() const { return gens_; }

  // Aut_c(G): phi with phi(g)g^-1 central for all g
  const std::vector<int> &central() const { return central_; }
  // Aut_c'(G): phi in Aut_c with phi(g^-1)g in Z(G) meet G'
  const std::vector<int> &central_prime() const { return central_prime_; }
  // Inn(G), as indices
  const std::vector<int> &inner() const { return inner_; }
  // centralizer of Inn(G) in Aut(G); equals central() (checked in tests)
  std::vector<int> centralizer_of_inner() const;

 private:
  const FiniteGroup *g_;
  std::vector<std::vector<int>> elems_;
  std::unordered_map<unsigned long long, int> index_;  // hash -> index (collision-checked)
  std::vector<int> inverse_;
  int id_idx_ = -1;
  std::vector<int> gens_, central_, central_prime_, inner_;

  static unsigned long long hash_img(const std::vector<int> &img);
};

// Split central automorphism pairs (w, v) with w^-1 v central. Lazily indexed
// as w_idx * |Aut_c| + c_idx with v = w o c; |SpAut_c| = |Aut| * |Aut_c|.
class SpAutcGroup {
 public:
  explicit SpAutcGroup(const AutGroup &aut);

  const AutGroup &aut() const { return *aut_; }
  long long size() const {
    return static_cast<long long>(aut_->size()) * static_cast<long long>(autc_.size());
  }
  std::pair<int, int> at(long long idx) const;  // (w aut-index, v aut-index)
  long long index_of(int w, int v) const;
  bool is_member(int w, int v) const;

 private:
  const AutGroup *aut_;
  std::vector<int> autc_;                  // Aut_c indices, ascending
  std::unordered_map<int, int> autc_pos_;  // aut index -> position in autc_
};

// phi(x^-1) x centralizes Im(phi) pointwise
bool is_normal_endomorphism(const GroupHom &f);

}  // namespace dgaut
