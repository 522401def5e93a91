#pragma once

#include "dgaut/rational.hpp"

namespace dgaut {

// Shared data for the cyclotomic field Q(zeta_e): the e-th cyclotomic
// polynomial and reduction rows x^k -> power basis, 0 <= k < e.
class CycContext {
 public:
  explicit CycContext(int conductor);

  int conductor() const { return e_; }
  int degree() const { return phi_; }
  const std::vector<long long> &reduction_row(int k) const { return rows_[k]; }
  const std::vector<long long> &cyclotomic_poly() const { return poly_; }

 private:
  int e_;
  int phi_;
  std::vector<long long> poly_;  // monic, length phi_+1
  std::vector<std::vector<long long>> rows_;
};

// Exact element of Q(zeta_e). Stored unreduced over zeta^0..zeta^(e-1), so
// products are cyclic convolutions and Galois maps are index permutations;
// reduction modulo the cyclotomic polynomial happens only at comparisons.
class CycScalar {
 public:
  CycScalar() = default;
  explicit CycScalar(const CycContext &ctx) : ctx_(&ctx), c_(ctx.conductor()) {}

  static CycScalar zero(const CycContext &ctx) { return CycScalar(ctx); }
  static CycScalar one(const CycContext &ctx) { return from_rational(ctx, Rational(1)); }
  static CycScalar from_rational(const CycContext &ctx, const Rational &r);
  static CycScalar root(const CycContext &ctx, long long k);  // zeta^k
  static CycScalar root(const CycContext &ctx, const QMod1 &q);

  const CycContext &context() const { return *ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  CycScalar &operator+=(const CycScalar &o);
  CycScalar &operator-=(const CycScalar &o);
  friend CycScalar operator+(CycScalar a, const CycScalar &b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar &b) { return a -= b; }
  CycScalar operator-() const;
  friend CycScalar operator*(const CycScalar &a, const CycScalar &b);
  CycScalar &operator*=(const CycScalar &o) { return *this = *this * o; }
  CycScalar scaled(const Rational &r) const;

  // ring map zeta -> zeta^m (an automorphism when gcd(m, e) = 1)
  CycScalar galois(long long m) const;
  CycScalar conj() const { return galois(ctx_->conductor() - 1); }

  bool is_zero() const;
  friend bool operator==(const CycScalar &a, const CycScalar &b);
  friend bool operator!=(const CycScalar &a, const CycScalar &b) { return !(a == b); }
  // deterministic total order on canonical forms
  static int compare(const CycScalar &a, const CycScalar &b);

  std::vector<Rational> reduced() const;  // power-basis coefficients, length phi(e)
  bool is_rational() const;
  Rational as_rational() const;
  std::string str() const;

 private:
  const CycContext *ctx_ = nullptr;
  std::vector<Rational> c_;
};

}  // namespace dgaut
