#pragma once

#include <functional>

#include "dgaut/hopf_oracle.hpp"
#include "dgaut/quadruple.hpp"

namespace dgaut {

enum class AutClass { abelian, purely_nonabelian, mixed_coprime, mixed_incomplete };
const char *aut_class_name(AutClass c);

struct BuildOptions {
  long long max_enum = 1000000;  // element materialization cap
};

// Aut(D(G)): classification, exact order where the theory provides it, the
// generator families, and (below the cap) the explicit element list in a
// deterministic order.
struct AutDG {
  const GroupContext *ctx = nullptr;
  AutClass classification = AutClass::abelian;
  bool order_known = true;  // false only for the mixed non-coprime case
  BigUnsigned order;        // exact order, or the product lower bound
  unsigned long long end_z = 1, bch_count = 1, autc_count = 1, aut_count = 1;
  std::vector<MorphQuadruple> generators;
  std::optional<std::vector<MorphQuadruple>> elements;

  struct Child;
  std::vector<std::unique_ptr<Child>> children;  // coprime factors, kept alive

  AutDG() = default;
  AutDG(AutDG &&) = default;
  AutDG &operator=(AutDG &&) = default;
  ~AutDG();
};

struct AutDG::Child {
  SubgroupGroup sub;
  std::unique_ptr<GroupContext> ctx;
  std::unique_ptr<AutDG> aut;
};

AutDG build_aut(const GroupContext &ctx, const BuildOptions &opts = {});

// subgroup families as quadruple lists (full enumerations)
std::vector<MorphQuadruple> lambda_subgroup(const GroupContext &ctx,
                                            long long max_count = 1000000);
std::vector<MorphQuadruple> bch_subgroup(const GroupContext &ctx,
                                         long long max_count = 1000000);
std::vector<MorphQuadruple> spautc_subgroup(const GroupContext &ctx,
                                            long long max_count = 1000000);
// Lambda_c(G) = Aut_c(G) x| Lambda(G): all (p, u, 1, id) with ustar central
std::vector<MorphQuadruple> lambda_c_subgroup(const GroupContext &ctx,
                                              long long max_count = 1000000);

// small generating sets for the three families
std::vector<MorphQuadruple> lambda_generators(const GroupContext &ctx);
std::vector<MorphQuadruple> bch_generators(const GroupContext &ctx);
std::vector<MorphQuadruple> spautc_generators(const GroupContext &ctx);

// closure of a generating set under composition, deterministic BFS order
std::vector<MorphQuadruple> quadruple_closure(const std::vector<MorphQuadruple> &gens,
                                              long long cap);

// Kernel of the restriction Aut(D(G)) -> Aut(Gamma), computed two ways:
// filtering Lambda_c (every Gamma-fixing automorphism has r = 1, v = id) and
// the structural product |Aut_c'(G)| * |Hom(Z meet G', Z)|.
struct KernelN {
  unsigned long long filter_order = 1;      // from the Lambda_c filter
  unsigned long long autcprime_order = 1;   // |Aut_c'(G)|
  unsigned long long hom_order = 1;         // |Hom(Z(G) meet G', Z(G))|
  std::vector<MorphQuadruple> elements;
  unsigned long long structural_order() const { return autcprime_order * hom_order; }
};
KernelN kernel_N(const GroupContext &ctx);

struct PredicateReport {
  bool stem = false;
  bool purely_nonabelian = false;
  bool perfect = false;
  bool centerless = false;
  bool lambda_normal = false;            // structural: iff stem
  bool lambdac_normal = false;           // structural: iff stem
  std::optional<bool> n_has_complement;  // structural; empty when out of scope
  // direct searches inside the enumerated Aut(D(G)), when available
  std::optional<bool> lambda_normal_direct;
  std::optional<bool> lambdac_normal_direct;
  std::optional<bool> n_complement_direct;
};
PredicateReport predicates(const GroupContext &ctx, const AutDG &aut);

// unique factorization q = lambda . (r . spautc) for purely non-abelian G
struct FactoredElement {
  MorphQuadruple lambda_part, bch_part, spautc_part;
  unsigned long long bch_index = 0;
  long long spautc_index = 0;
};
FactoredElement canonical_factorization(const GroupContext &ctx, const MorphQuadruple &q);
MorphQuadruple recompose(const FactoredElement &f);

// oracle for abelian G, |G| <= 8: every 2x2 homomorphism matrix over the pair
// (dual(G), G), filtered by bijectivity on the group-likes
std::vector<MorphQuadruple> brute_force_aut_abelian(const GroupContext &ctx);

// D(G) and D(H) are isomorphic Hopf algebras precisely when G and H are
// isomorphic groups, so the predicate delegates to the group search.
inline bool doubles_isomorphic(const FiniteGroup &g, const FiniteGroup &h) {
  return are_isomorphic(g, h);
}

// complement search in an explicitly listed group: elements 0..m-1 with a
// multiplication callback; returns a complement of the (normal) subgroup
// given by `in_n`, searching lifts of quotient generators exhaustively.
std::optional<std::vector<int>> find_complement(
    int m, const std::function<int(int, int)> &mul, const std::vector<char> &in_n,
    long long work_cap = 4000000);

}  // namespace dgaut
