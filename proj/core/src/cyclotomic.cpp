#include "dgaut/cyclotomic.hpp"

#include <algorithm>

namespace dgaut {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<long long> poly_div(std::vector<long long> num, const std::vector<long long> &den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  require(den.back() == 1, "poly_div: divisor not monic");
  std::vector<long long> q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    long long c = num[k + dd];
    q[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (long long v : num) require(v == 0, "poly_div: nonzero remainder");
  return q;
}

std::vector<long long> cyclotomic(int e) {
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
  std::vector<long long> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    num = poly_div(std::move(num), cyclotomic(d));
  }
  return num;
}

}  // namespace

CycContext::CycContext(int conductor) : e_(conductor) {
  require(e_ >= 1, "CycContext: conductor must be positive");
  poly_ = cyclotomic(e_);
  phi_ = static_cast<int>(poly_.size()) - 1;
  rows_.resize(e_);
  for (int k = 0; k < std::min(e_, phi_); ++k) {
    rows_[k].assign(phi_, 0);
    rows_[k][k] = 1;
  }
  // x^k = x * x^(k-1) mod Phi_e
  std::vector<long long> cur(phi_, 0);
  if (phi_ > 0 && phi_ <= e_ - 1) {
    // x^phi = -(lower part of Phi)
    for (int i = 0; i < phi_; ++i) cur[i] = -poly_[i];
    if (phi_ < e_) rows_[phi_] = cur;
    for (int k = phi_ + 1; k < e_; ++k) {
      std::vector<long long> nxt(phi_, 0);
      for (int i = 0; i + 1 < phi_; ++i) nxt[i + 1] = cur[i];
      long long top = cur[phi_ - 1];
      if (top != 0)
        for (int i = 0; i < phi_; ++i) nxt[i] -= top * poly_[i];
      rows_[k] = nxt;
      cur = std::move(nxt);
    }
  }
}

CycScalar CycScalar::from_rational(const CycContext &ctx, const Rational &r) {
  CycScalar s(ctx);
  s.c_[0] = r;
  return s;
}

CycScalar CycScalar::root(const CycContext &ctx, long long k) {
  CycScalar s(ctx);
  long long e = ctx.conductor();
  k %= e;
  if (k < 0) k += e;
  s.c_[static_cast<size_t>(k)] = Rational(1);
  return s;
}

CycScalar CycScalar::root(const CycContext &ctx, const QMod1 &q) {
  return root(ctx, q.scaled_to(ctx.conductor()));
}

CycScalar &CycScalar::operator+=(const CycScalar &o) {
  if (!ctx_) return *this = o;
  if (!o.ctx_) return *this;
  require(ctx_ == &o.context(), "CycScalar: conductor mismatch");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

CycScalar &CycScalar::operator-=(const CycScalar &o) {
  if (!ctx_) return *this = -o;
  if (!o.ctx_) return *this;
  require(ctx_ == &o.context(), "CycScalar: conductor mismatch");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar s = *this;
  for (auto &v : s.c_)
    if (!v.is_zero()) v = -v;
  return s;
}

CycScalar operator*(const CycScalar &a, const CycScalar &b) {
  require(a.ctx_ && b.ctx_ && a.ctx_ == b.ctx_, "CycScalar: conductor mismatch");
  int e = a.ctx_->conductor();
  CycScalar out(*a.ctx_);
  for (int i = 0; i < e; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < e; ++j) {
      if (b.c_[j].is_zero()) continue;
      int k = i + j;
      if (k >= e) k -= e;
      out.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

CycScalar CycScalar::scaled(const Rational &r) const {
  CycScalar s = *this;
  for (auto &v : s.c_)
    if (!v.is_zero()) v *= r;
  return s;
}

CycScalar CycScalar::galois(long long m) const {
  require(ctx_, "CycScalar: empty scalar");
  int e = ctx_->conductor();
  m %= e;
  if (m < 0) m += e;
  CycScalar s(*ctx_);
  for (int k = 0; k < e; ++k)
    if (!c_[k].is_zero()) s.c_[static_cast<size_t>((k * m) % e)] += c_[k];
  return s;
}

std::vector<Rational> CycScalar::reduced() const {
  require(ctx_, "CycScalar: empty scalar");
  std::vector<Rational> out(ctx_->degree());
  for (int k = 0; k < ctx_->conductor(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto &row = ctx_->reduction_row(k);
    for (int j = 0; j < ctx_->degree(); ++j)
      if (row[j] != 0) out[j] += c_[k] * Rational(row[j]);
  }
  return out;
}

bool CycScalar::is_zero() const {
  if (!ctx_) return true;
  bool sparse_zero = true;
  for (const auto &v : c_)
    if (!v.is_zero()) {
      sparse_zero = false;
      break;
    }
  if (sparse_zero) return true;
  for (const auto &v : reduced())
    if (!v.is_zero()) return false;
  return true;
}

bool operator==(const CycScalar &a, const CycScalar &b) {
  if (!a.ctx_) return b.is_zero();
  if (!b.ctx_) return a.is_zero();
  require(a.ctx_ == b.ctx_, "CycScalar: conductor mismatch");
  CycScalar d = a;
  d -= b;
  return d.is_zero();
}

int CycScalar::compare(const CycScalar &a, const CycScalar &b) {
  auto ra = a.reduced(), rb = b.reduced();
  for (size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] < rb[i]) return -1;
    if (rb[i] < ra[i]) return 1;
  }
  return 0;
}

bool CycScalar::is_rational() const {
  auto r = reduced();
  for (size_t i = 1; i < r.size(); ++i)
    if (!r[i].is_zero()) return false;
  return true;
}

Rational CycScalar::as_rational() const {
  auto r = reduced();
  for (size_t i = 1; i < r.size(); ++i)
    require(r[i].is_zero(), "CycScalar: not rational");
  return r[0];
}

std::string CycScalar::str() const {
  auto r = reduced();
  std::string out = "[";
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += r[i].str();
  }
  return out + "]";
}

}  // namespace dgaut
