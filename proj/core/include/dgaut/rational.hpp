#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dgaut/errors.hpp"

namespace dgaut {

// Exact rational with int64 parts. All values in this project stay tiny
// (character values, 1/|A| factors, Dixon lifts), so no big-integer backend.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, "Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  Rational operator-() const { return Rational(-num, den); }
  friend Rational operator*(const Rational &a, const Rational &b) {
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    require(b.num != 0, "Rational: division by zero");
    return a * Rational(b.den, b.num);
  }
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.num * b.den < b.num * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Rational mod 1, i.e. an element of Q/Z. Additive model of a root of unity:
// the value q stands for exp(2*pi*i*q). Kept reduced with 0 <= num < den.
struct QMod1 {
  long long num = 0;
  long long den = 1;

  QMod1() = default;
  QMod1(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, "QMod1: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  friend QMod1 operator+(const QMod1 &a, const QMod1 &b) {
    return QMod1(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend QMod1 operator-(const QMod1 &a, const QMod1 &b) {
    return QMod1(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  QMod1 operator-() const { return QMod1(-num, den); }
  friend QMod1 operator*(const QMod1 &a, long long k) { return QMod1(a.num * k, a.den); }
  QMod1 &operator+=(const QMod1 &o) { return *this = *this + o; }

  friend bool operator==(const QMod1 &a, const QMod1 &b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const QMod1 &a, const QMod1 &b) { return !(a == b); }
  friend bool operator<(const QMod1 &a, const QMod1 &b) {
    return a.num * b.den < b.num * a.den;
  }

  // Exponent k with this == k/e mod 1. Requires den | e.
  long long scaled_to(long long e) const {
    require(e % den == 0, "QMod1: denominator does not divide conductor");
    return (num * (e / den)) % e;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  static QMod1 parse(const std::string &s);
};

// Arbitrary-size unsigned integer, base 1e9 limbs. Only what the order
// bookkeeping needs: |Aut(D(G))| overflows uint64 already for G = Z_2^5.
class BigUnsigned {
 public:
  BigUnsigned() : limbs_{0} {}
  BigUnsigned(unsigned long long v);

  BigUnsigned &operator*=(const BigUnsigned &o);
  friend BigUnsigned operator*(BigUnsigned a, const BigUnsigned &b) { return a *= b; }
  BigUnsigned &operator+=(const BigUnsigned &o);

  bool fits_u64() const;
  unsigned long long as_u64() const;

  friend bool operator==(const BigUnsigned &a, const BigUnsigned &b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigUnsigned &a, const BigUnsigned &b) { return !(a == b); }
  friend bool operator<(const BigUnsigned &a, const BigUnsigned &b);
  friend bool operator<=(const BigUnsigned &a, const BigUnsigned &b) {
    return a < b || a == b;
  }

  std::string str() const;

  static BigUnsigned pow(unsigned long long base, unsigned exp);

 private:
  // little-endian, base 1e9, no leading zero limb except for the value 0
  std::vector<unsigned> limbs_;
  void trim();
};

}  // namespace dgaut
