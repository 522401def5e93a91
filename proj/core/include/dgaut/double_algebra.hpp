#pragma once

#include <map>

#include "dgaut/context.hpp"

namespace dgaut {

// Element of D(G) as a sparse vector over the basis e_g # h, indexed g*n + h.
// Multiplication: (e_g # g')(e_h # h') = [g = g' h g'^-1] e_g # g'h'.
// Comultiplication (cop-twisted function part, validated by the bialgebra
// axiom): D(e_g # h) = sum_{ab = g} (e_b # h) (x) (e_a # h).
// Antipode: S(e_g # h) = e_{h^-1 g^-1 h} # h^-1.
class DoubleElement {
 public:
  explicit DoubleElement(const GroupContext &ctx) : ctx_(&ctx) {}

  static DoubleElement basis(const GroupContext &ctx, int g, int h);
  static DoubleElement unit(const GroupContext &ctx);      // sum_g e_g # 1
  static DoubleElement integral(const GroupContext &ctx);  // e_1 # sum_h h
  // group-like chi # g = sum_x zeta^(chi(x)) e_x # g
  static DoubleElement grouplike(const GroupContext &ctx, int chi, int g);

  const GroupContext &context() const { return *ctx_; }
  void add_term(int g, int h, const CycScalar &c);
  // normalized terms: zero coefficients pruned, keys ascending
  const std::map<int, CycScalar> &terms() const;
  bool is_zero() const { return terms().empty(); }

  friend DoubleElement operator*(const DoubleElement &x, const DoubleElement &y);
  friend DoubleElement operator+(DoubleElement x, const DoubleElement &y);
  DoubleElement scaled(const CycScalar &c) const;
  CycScalar counit() const;  // eps(e_g # h) = [g = 1]
  DoubleElement antipode() const;
  friend bool operator==(const DoubleElement &x, const DoubleElement &y);

  std::string str() const;

 private:
  const GroupContext *ctx_;
  mutable std::map<int, CycScalar> terms_;
  mutable bool normalized_ = true;
};

// Element of D(G) (x) D(G); only what the axioms checks need.
struct SparseTensor {
  const GroupContext *ctx = nullptr;
  std::map<std::pair<int, int>, CycScalar> terms;

  void add(int i, int j, const CycScalar &c);
  void normalize();
  friend bool operator==(const SparseTensor &a, const SparseTensor &b);
};
SparseTensor comultiply(const DoubleElement &x);

// Linear endomorphism of D(G), stored column-wise over the e_g # h basis.
class DoubleLinearMap {
 public:
  using Column = std::vector<std::pair<int, CycScalar>>;  // sorted by index

  explicit DoubleLinearMap(const GroupContext &ctx)
      : ctx_(&ctx), cols_(static_cast<size_t>(ctx.group().order()) * ctx.group().order()) {}
  static DoubleLinearMap identity_map(const GroupContext &ctx);

  const GroupContext &context() const { return *ctx_; }
  int dim() const { return static_cast<int>(cols_.size()); }
  void set_column(int idx, Column col);
  const Column &column(int idx) const { return cols_[idx]; }
  const Column &column(int g, int h) const {
    return cols_[static_cast<size_t>(g) * ctx_->group().order() + h];
  }

  DoubleElement apply(const DoubleElement &x) const;
  // (a o b): apply b first
  friend DoubleLinearMap compose(const DoubleLinearMap &a, const DoubleLinearMap &b);
  friend bool operator==(const DoubleLinearMap &a, const DoubleLinearMap &b);

  nlohmann::json to_json() const;  // debug dump: basis index pairs + coefficients

 private:
  const GroupContext *ctx_;
  std::vector<Column> cols_;
};

// exhaustive bialgebra/Hopf axiom checks for one group, used by tests and the
// verify pipeline; throws invariant_error with the failing axiom
void validate_double_axioms(const GroupContext &ctx);

}  // namespace dgaut
