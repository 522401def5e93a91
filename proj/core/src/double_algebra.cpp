#include "dgaut/double_algebra.hpp"

#include <algorithm>

namespace dgaut {

DoubleElement DoubleElement::basis(const GroupContext &ctx, int g, int h) {
  DoubleElement x(ctx);
  x.add_term(g, h, CycScalar::one(ctx.cyc()));
  return x;
}

DoubleElement DoubleElement::unit(const GroupContext &ctx) {
  DoubleElement x(ctx);
  for (int g = 0; g < ctx.group().order(); ++g) x.add_term(g, 0, CycScalar::one(ctx.cyc()));
  return x;
}

DoubleElement DoubleElement::integral(const GroupContext &ctx) {
  DoubleElement x(ctx);
  for (int h = 0; h < ctx.group().order(); ++h) x.add_term(0, h, CycScalar::one(ctx.cyc()));
  return x;
}

DoubleElement DoubleElement::grouplike(const GroupContext &ctx, int chi, int g) {
  DoubleElement x(ctx);
  for (int y = 0; y < ctx.group().order(); ++y)
    x.add_term(y, g, CycScalar::root(ctx.cyc(), ctx.dual().value(chi, y)));
  return x;
}

void DoubleElement::add_term(int g, int h, const CycScalar &c) {
  int idx = g * ctx_->group().order() + h;
  auto it = terms_.find(idx);
  if (it == terms_.end())
    terms_.emplace(idx, c);
  else
    it->second += c;
  normalized_ = false;
}

const std::map<int, CycScalar> &DoubleElement::terms() const {
  if (!normalized_) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    normalized_ = true;
  }
  return terms_;
}

DoubleElement operator*(const DoubleElement &x, const DoubleElement &y) {
  require(x.ctx_ == y.ctx_, "DoubleElement: group mismatch");
  const FiniteGroup &g = x.ctx_->group();
  int n = g.order();
  // index y's terms by function part for the delta rule
  std::map<int, std::vector<std::pair<int, const CycScalar *>>> by_first;
  for (const auto &[idx, c] : y.terms())
    by_first[idx / n].push_back({idx % n, &c});
  DoubleElement out(*x.ctx_);
  for (const auto &[idx, c] : x.terms()) {
    int a = idx / n, k = idx % n;
    auto it = by_first.find(g.conj(g.inv(k), a));  // need h = k^-1 a k
    if (it == by_first.end()) continue;
    for (const auto &[m, cy] : it->second) out.add_term(a, g.mul(k, m), c * *cy);
  }
  return out;
}

DoubleElement operator+(DoubleElement x, const DoubleElement &y) {
  require(x.ctx_ == y.ctx_, "DoubleElement: group mismatch");
  const FiniteGroup &g = x.ctx_->group();
  for (const auto &[idx, c] : y.terms()) x.add_term(idx / g.order(), idx % g.order(), c);
  return x;
}

DoubleElement DoubleElement::scaled(const CycScalar &c) const {
  DoubleElement out(*ctx_);
  for (const auto &[idx, v] : terms())
    out.add_term(idx / ctx_->group().order(), idx % ctx_->group().order(), v * c);
  return out;
}

CycScalar DoubleElement::counit() const {
  const FiniteGroup &g = ctx_->group();
  CycScalar s = CycScalar::zero(ctx_->cyc());
  for (const auto &[idx, c] : terms())
    if (idx / g.order() == 0) s += c;
  return s;
}

DoubleElement DoubleElement::antipode() const {
  const FiniteGroup &g = ctx_->group();
  DoubleElement out(*ctx_);
  for (const auto &[idx, c] : terms()) {
    int a = idx / g.order(), h = idx % g.order();
    out.add_term(g.conj(g.inv(h), g.inv(a)), g.inv(h), c);
  }
  return out;
}

bool operator==(const DoubleElement &x, const DoubleElement &y) {
  require(x.ctx_ == y.ctx_, "DoubleElement: group mismatch");
  const auto &tx = x.terms();
  const auto &ty = y.terms();
  if (tx.size() != ty.size()) return false;
  auto it = ty.begin();
  for (const auto &[idx, c] : tx) {
    if (it->first != idx || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::string DoubleElement::str() const {
  const FiniteGroup &g = ctx_->group();
  std::string out;
  for (const auto &[idx, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*e" + std::to_string(idx / g.order()) + "#" +
           std::to_string(idx % g.order());
  }
  return out.empty() ? "0" : out;
}

void SparseTensor::add(int i, int j, const CycScalar &c) {
  auto key = std::make_pair(i, j);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, c);
  else
    it->second += c;
}

void SparseTensor::normalize() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

bool operator==(const SparseTensor &a, const SparseTensor &b) {
  SparseTensor x = a, y = b;
  x.normalize();
  y.normalize();
  if (x.terms.size() != y.terms.size()) return false;
  auto it = y.terms.begin();
  for (const auto &[k, c] : x.terms) {
    if (it->first != k || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

SparseTensor comultiply(const DoubleElement &x) {
  const GroupContext &ctx = x.context();
  const FiniteGroup &g = ctx.group();
  int n = g.order();
  SparseTensor t;
  t.ctx = &ctx;
  for (const auto &[idx, c] : x.terms()) {
    int y = idx / n, h = idx % n;
    for (int b = 0; b < n; ++b) {
      int a = g.mul(y, g.inv(b));  // ab = y
      t.add(b * n + h, a * n + h, c);
    }
  }
  t.normalize();
  return t;
}

DoubleLinearMap DoubleLinearMap::identity_map(const GroupContext &ctx) {
  DoubleLinearMap m(ctx);
  for (int i = 0; i < m.dim(); ++i)
    m.cols_[i] = {{i, CycScalar::one(ctx.cyc())}};
  return m;
}

void DoubleLinearMap::set_column(int idx, Column col) {
  std::sort(col.begin(), col.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  // merge duplicates, drop zeros
  Column merged;
  for (auto &term : col) {
    if (!merged.empty() && merged.back().first == term.first)
      merged.back().second += term.second;
    else
      merged.push_back(std::move(term));
  }
  Column pruned;
  for (auto &term : merged)
    if (!term.second.is_zero()) pruned.push_back(std::move(term));
  cols_[idx] = std::move(pruned);
}

DoubleElement DoubleLinearMap::apply(const DoubleElement &x) const {
  require(&x.context() == ctx_, "DoubleLinearMap: group mismatch");
  int n = ctx_->group().order();
  DoubleElement out(*ctx_);
  for (const auto &[idx, c] : x.terms())
    for (const auto &[tidx, tc] : cols_[idx]) out.add_term(tidx / n, tidx % n, c * tc);
  return out;
}

DoubleLinearMap compose(const DoubleLinearMap &a, const DoubleLinearMap &b) {
  require(a.ctx_ == b.ctx_, "DoubleLinearMap: group mismatch");
  DoubleLinearMap out(*a.ctx_);
  for (int j = 0; j < out.dim(); ++j) {
    std::map<int, CycScalar> acc;
    for (const auto &[mid, c1] : b.cols_[j])
      for (const auto &[top, c2] : a.cols_[mid]) {
        auto it = acc.find(top);
        if (it == acc.end())
          acc.emplace(top, c1 * c2);
        else
          it->second += c1 * c2;
      }
    DoubleLinearMap::Column col;
    for (auto &[idx, c] : acc)
      if (!c.is_zero()) col.push_back({idx, std::move(c)});
    out.cols_[j] = std::move(col);
  }
  return out;
}

bool operator==(const DoubleLinearMap &a, const DoubleLinearMap &b) {
  require(a.ctx_ == b.ctx_, "DoubleLinearMap: group mismatch");
  for (int j = 0; j < a.dim(); ++j) {
    const auto &ca = a.cols_[j];
    const auto &cb = b.cols_[j];
    if (ca.size() != cb.size()) return false;
    for (size_t i = 0; i < ca.size(); ++i)
      if (ca[i].first != cb[i].first || !(ca[i].second == cb[i].second)) return false;
  }
  return true;
}

nlohmann::json DoubleLinearMap::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (int col = 0; col < dim(); ++col) {
    for (const auto &[idx, c] : cols_[col]) {
      nlohmann::json entry;
      entry["from"] = col;
      entry["to"] = idx;
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto &r : c.reduced()) coeffs.push_back(r.str());
      entry["coeff"] = coeffs;
      j.push_back(entry);
    }
  }
  return j;
}

void validate_double_axioms(const GroupContext &ctx) {
  const FiniteGroup &g = ctx.group();
  int n = g.order();
  DoubleElement one = DoubleElement::unit(ctx);
  // unit and associativity on basis triples; counit axiom; antipode axiom
  for (int i = 0; i < n * n; ++i) {
    DoubleElement x = DoubleElement::basis(ctx, i / n, i % n);
    require(one * x == x && x * one == x, "double: unit axiom");
  }
  for (int i = 0; i < n * n; ++i) {
    DoubleElement x = DoubleElement::basis(ctx, i / n, i % n);
    for (int j = 0; j < n * n; ++j) {
      DoubleElement y = DoubleElement::basis(ctx, j / n, j % n);
      for (int k = 0; k < n * n; ++k) {
        DoubleElement z = DoubleElement::basis(ctx, k / n, k % n);
        require((x * y) * z == x * (y * z), "double: associativity");
      }
    }
  }
  // Delta is an algebra map: Delta(xy) = Delta(x)Delta(y)
  for (int i = 0; i < n * n; ++i) {
    DoubleElement x = DoubleElement::basis(ctx, i / n, i % n);
    for (int j = 0; j < n * n; ++j) {
      DoubleElement y = DoubleElement::basis(ctx, j / n, j % n);
      SparseTensor lhs = comultiply(x * y);
      SparseTensor dx = comultiply(x);
      SparseTensor dy = comultiply(y);
      SparseTensor rhs;
      rhs.ctx = &ctx;
      for (const auto &[kx, cx] : dx.terms)
        for (const auto &[ky, cy] : dy.terms) {
          DoubleElement p1 = DoubleElement::basis(ctx, kx.first / n, kx.first % n) *
                             DoubleElement::basis(ctx, ky.first / n, ky.first % n);
          DoubleElement p2 = DoubleElement::basis(ctx, kx.second / n, kx.second % n) *
                             DoubleElement::basis(ctx, ky.second / n, ky.second % n);
          for (const auto &[i1, c1] : p1.terms())
            for (const auto &[i2, c2] : p2.terms()) rhs.add(i1, i2, cx * cy * c1 * c2);
        }
      require(lhs == rhs, "double: comultiplication not multiplicative");
    }
  }
  // counit: (eps (x) id) Delta = id; antipode: S * id = unit eps
  for (int i = 0; i < n * n; ++i) {
    DoubleElement x = DoubleElement::basis(ctx, i / n, i % n);
    SparseTensor d = comultiply(x);
    DoubleElement left(ctx), right(ctx), conv(ctx);
    for (const auto &[k, c] : d.terms) {
      DoubleElement first = DoubleElement::basis(ctx, k.first / n, k.first % n);
      DoubleElement second = DoubleElement::basis(ctx, k.second / n, k.second % n);
      left = left + second.scaled(c * first.counit());
      right = right + first.scaled(c * second.counit());
      conv = conv + (first.antipode() * second).scaled(c);
    }
    require(left == x && right == x, "double: counit axiom");
    require(conv == one.scaled(x.counit()), "double: antipode axiom");
  }
  // integral: x Lambda = eps(x) Lambda and Lambda x = eps(x) Lambda
  DoubleElement lam = DoubleElement::integral(ctx);
  for (int i = 0; i < n * n; ++i) {
    DoubleElement x = DoubleElement::basis(ctx, i / n, i % n);
    require(x * lam == lam.scaled(x.counit()), "double: left integral");
    require(lam * x == lam.scaled(x.counit()), "double: right integral");
  }
}

}  // namespace dgaut
