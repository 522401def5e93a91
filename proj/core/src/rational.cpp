#include "dgaut/rational.hpp"

namespace dgaut {

QMod1 QMod1::parse(const std::string &s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return QMod1(std::stoll(s), 1);
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return QMod1(n, d);
  } catch (const std::exception &) {
    throw parse_error("bad rational literal: " + s);
  }
}

namespace {
constexpr unsigned long long kBase = 1000000000ull;
}

BigUnsigned::BigUnsigned(unsigned long long v) {
  if (v == 0) {
    limbs_ = {0};
    return;
  }
  while (v > 0) {
    limbs_.push_back(static_cast<unsigned>(v % kBase));
    v /= kBase;
  }
}

void BigUnsigned::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUnsigned &BigUnsigned::operator*=(const BigUnsigned &o) {
  std::vector<unsigned long long> acc(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] == 0) continue;
    unsigned long long carry = 0;
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      unsigned long long cur =
          acc[i + j] + static_cast<unsigned long long>(limbs_[i]) * o.limbs_[j] + carry;
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
    size_t k = i + o.limbs_.size();
    while (carry > 0) {
      unsigned long long cur = acc[k] + carry;
      acc[k] = cur % kBase;
      carry = cur / kBase;
      ++k;
    }
  }
  limbs_.assign(acc.begin(), acc.end());
  trim();
  return *this;
}

BigUnsigned &BigUnsigned::operator+=(const BigUnsigned &o) {
  size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  unsigned long long carry = 0;
  for (size_t i = 0; i < n; ++i) {
    unsigned long long cur = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<unsigned>(cur % kBase);
    carry = cur / kBase;
  }
  if (carry) limbs_.push_back(static_cast<unsigned>(carry));
  return *this;
}

bool BigUnsigned::fits_u64() const {
  if (limbs_.size() > 3) return false;
  unsigned long long v = 0;
  const unsigned long long lim = ~0ull;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (v > (lim - limbs_[i]) / kBase) return false;
    v = v * kBase + limbs_[i];
  }
  return true;
}

unsigned long long BigUnsigned::as_u64() const {
  require(fits_u64(), "BigUnsigned: does not fit in 64 bits");
  unsigned long long v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

bool operator<(const BigUnsigned &a, const BigUnsigned &b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
  for (size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
  return false;
}

std::string BigUnsigned::str() const {
  std::string out = std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigUnsigned BigUnsigned::pow(unsigned long long base, unsigned exp) {
  BigUnsigned out(1);
  BigUnsigned b(base);
  while (exp > 0) {
    if (exp & 1u) out *= b;
    b *= b;
    exp >>= 1u;
  }
  return out;
}

}  // namespace dgaut
