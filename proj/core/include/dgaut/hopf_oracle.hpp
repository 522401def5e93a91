#pragma once

#include <optional>

#include "dgaut/quadruple.hpp"

namespace dgaut {

// Verification depth for the raw-map Hopf oracle.
//  full_pairs: psi(xy) = psi(x)psi(y) literally on every basis pair, and
//    Delta psi = (psi (x) psi) Delta on every basis element.
//  generating: the provably equivalent reduction. Multiplicativity on all
//    pairs (basis, s) with s in {e_w # 1} u {eps # t : t generator} suffices,
//    since every basis element is a product of such elements and the defect
//    M(x, y) = psi(xy) - psi(x)psi(y) is bilinear with M(x, y1 y2) = 0
//    whenever M(., y1) and M(., y2) vanish. Comultiplicativity is checked as
//    star-multiplicativity of the transpose on the dual algebra, where
//    (a,k)* (b,m)* = [k = m] (ab, k)*, against the generator set
//    {(s, k)* : s generator}. Abelian groups use the complete group-like
//    basis route (D(G) is the group algebra of its group-likes).
enum class OracleDepth { full_pairs, generating };

struct OracleReport {
  bool ok = true;
  std::string failure;  // first failing axiom with a witness description
};

OracleReport is_hopf_morphism(const DoubleLinearMap &psi,
                              OracleDepth depth = OracleDepth::full_pairs);

// Component extraction (restriction to a # 1 and eps # g) followed by
// structure recovery; nullopt when the map is not of structured form.
std::optional<MorphQuadruple> extract_quadruple(const DoubleLinearMap &psi);

// exact rank test by sparse Gaussian elimination over the cyclotomic field
bool map_is_bijective(const DoubleLinearMap &psi);

// Bijectivity of the induced linear map, decided exactly:
//  - abelian G: the group-like restriction decides (D(G) = k Gamma);
//  - otherwise try a closed-form inverse candidate and verify by composition;
//  - purely non-abelian compatible quadruples with non-bijective ustar or v
//    cannot be bijective;
//  - last resort: exact rank of the matrix.
bool quadruple_is_bijective(const MorphQuadruple &q);

bool preserves_integral(const MorphQuadruple &q);

// x Lambda = eps(x) Lambda (and the right-hand version), checked exhaustively
void validate_integral(const GroupContext &ctx);

}  // namespace dgaut
