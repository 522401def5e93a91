#include "dgaut/autgrp.hpp"

#include <algorithm>

namespace dgaut {

unsigned long long AutGroup::hash_img(const std::vector<int> &img) {
  unsigned long long h = 1469598103934665603ull;
  for (int v : img) {
    h ^= static_cast<unsigned long long>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

AutGroup::AutGroup(const FiniteGroup &g) : g_(&g) {
  elems_ = all_automorphisms(g);
  require(!elems_.empty(), "AutGroup: empty automorphism set");
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i) {
    auto [it, fresh] = index_.emplace(hash_img(elems_[i]), i);
    require(fresh, "AutGroup: hash collision");  // rebuild with map if this ever fires
  }
  std::vector<int> id(g.order());
  for (int x = 0; x < g.order(); ++x) id[x] = x;
  id_idx_ = index_of(id);
  require(id_idx_ >= 0, "AutGroup: identity missing");

  inverse_.assign(elems_.size(), -1);
  for (int a = 0; a < size(); ++a) {
    std::vector<int> inv(g.order());
    for (int x = 0; x < g.order(); ++x) inv[elems_[a][x]] = x;
    inverse_[a] = index_of(inv);
    require(inverse_[a] >= 0, "AutGroup: inverse missing");
  }

  // greedy generating set over the abstract group
  {
    std::vector<char> in(size(), 0);
    in[id_idx_] = 1;
    int covered = 1;
    while (covered < size()) {
      int pick = -1;
      for (int a = 0; a < size(); ++a)
        if (!in[a]) {
          pick = a;
          break;
        }
      gens_.push_back(pick);
      // closure
      std::vector<int> work;
      for (int a = 0; a < size(); ++a)
        if (in[a]) work.push_back(a);
      for (size_t i = 0; i < work.size(); ++i)
        for (int ggen : gens_) {
          int p = compose(work[i], ggen);
          if (!in[p]) {
            in[p] = 1;
            ++covered;
            work.push_back(p);
          }
          p = compose(ggen, work[i]);
          if (!in[p]) {
            in[p] = 1;
            ++covered;
            work.push_back(p);
          }
        }
    }
  }

  const Subgroup &z = g.center();
  const Subgroup &zd = g.center_meet_derived();
  for (int a = 0; a < size(); ++a) {
    bool cent = true, centp = true;
    for (int x = 0; x < g.order() && (cent || centp); ++x) {
      int disp = g.mul(elems_[a][x], g.inv(x));  // phi(x) x^-1
      if (!z.contains(disp)) cent = false;
      int dispp = g.mul(elems_[a][g.inv(x)], x);  // phi(x^-1) x
      if (!zd.contains(dispp)) centp = false;
    }
    if (cent) central_.push_back(a);
    if (centp && cent) central_prime_.push_back(a);
  }

  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> img(g.order());
    for (int x = 0; x < g.order(); ++x) img[x] = g.conj(s, x);
    int idx = index_of(img);
    require(idx >= 0, "AutGroup: inner automorphism missing");
    inner_.push_back(idx);
  }
  std::sort(inner_.begin(), inner_.end());
  inner_.erase(std::unique(inner_.begin(), inner_.end()), inner_.end());
}

int AutGroup::compose(int a, int b) const {
  std::vector<int> img(g_->order());
  const auto &fa = elems_[a];
  const auto &fb = elems_[b];
  for (int x = 0; x < g_->order(); ++x) img[x] = fa[fb[x]];
  int idx = index_of(img);
  require(idx >= 0, "AutGroup: composition left the group");
  return idx;
}

int AutGroup::inverse(int a) const { return inverse_[a]; }

int AutGroup::index_of(const std::vector<int> &img) const {
  auto it = index_.find(hash_img(img));
  if (it == index_.end()) return -1;
  return elems_[it->second] == img ? it->second : -1;
}

std::vector<int> AutGroup::centralizer_of_inner() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    bool commutes = true;
    for (int i : inner_) {
      if (compose(a, i) != compose(i, a)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(a);
  }
  return out;
}

SpAutcGroup::SpAutcGroup(const AutGroup &aut) : aut_(&aut) {
  autc_ = aut.central();
  for (int i = 0; i < static_cast<int>(autc_.size()); ++i) autc_pos_[autc_[i]] = i;
}

std::pair<int, int> SpAutcGroup::at(long long idx) const {
  long long k = static_cast<long long>(autc_.size());
  int w = static_cast<int>(idx / k);
  int c = autc_[static_cast<size_t>(idx % k)];
  return {w, aut_->compose(w, c)};
}

long long SpAutcGroup::index_of(int w, int v) const {
  int c = aut_->compose(aut_->inverse(w), v);
  auto it = autc_pos_.find(c);
  require(it != autc_pos_.end(), "SpAutcGroup: pair is not split-central");
  return static_cast<long long>(w) * static_cast<long long>(autc_.size()) + it->second;
}

bool SpAutcGroup::is_member(int w, int v) const {
  int c = aut_->compose(aut_->inverse(w), v);
  return autc_pos_.count(c) > 0;
}

bool is_normal_endomorphism(const GroupHom &f) {
  require(f.is_endomorphism(), "is_normal_endomorphism: not an endomorphism");
  const FiniteGroup &g = *f.dom;
  std::vector<int> image;
  {
    std::vector<char> seen(g.order(), 0);
    for (int x = 0; x < g.order(); ++x)
      if (!seen[f(x)]) {
        seen[f(x)] = 1;
        image.push_back(f(x));
      }
  }
  for (int x = 0; x < g.order(); ++x) {
    int d = g.mul(f(g.inv(x)), x);  // f(x^-1) x
    for (int y : image)
      if (g.mul(d, y) != g.mul(y, d)) return false;
  }
  return true;
}

}  // namespace dgaut
