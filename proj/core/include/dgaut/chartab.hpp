#pragma once

#include "dgaut/cyclotomic.hpp"
#include "dgaut/group.hpp"

#include <json.hpp>

namespace dgaut {

// Exact irreducible character table. Rows are ordered with the trivial
// character first, then by (degree, canonical value vector). Columns follow
// the group's class ordering. Values live in the ambient cyclotomic field,
// whose conductor is a multiple of exp(G).
struct CharacterTable {
  const FiniteGroup *group = nullptr;
  const CycContext *cyc = nullptr;
  std::vector<std::vector<CycScalar>> rows;  // rows[irr][class]
  std::vector<int> degrees;

  int irr_count() const { return static_cast<int>(rows.size()); }
  const CycScalar &value(int irr, int class_idx) const { return rows[irr][class_idx]; }
  CycScalar value_at(int irr, int g) const { return rows[irr][group->class_of(g)]; }
  // index of the unique row with the given class values; -1 if none
  int row_matching(const std::vector<CycScalar> &values) const;
};

// Burnside-Dixon: class-algebra eigenvectors modulo a prime p = 1 (mod e),
// p > 2|G|e, lifted to exact sums of roots of unity. Abelian groups short-cut
// through the dual group.
CharacterTable compute_character_table(const FiniteGroup &g, const CycContext &cyc);

// full invariant check: first row trivial, degrees, row and column
// orthogonality (exact, no tolerance)
void validate_character_table(const CharacterTable &t);

// ingestion of an externally computed table, re-validated before trust.
// schema: {"classes": [[elt indices]], "values": [[[coeff strings]]]} where
// values[i][j] lists power-basis coefficients of chi_i on class j.
CharacterTable character_table_from_json(const FiniteGroup &g, const CycContext &cyc,
                                         const nlohmann::json &j);
nlohmann::json character_table_to_json(const CharacterTable &t);

// mu with eta(z) = mu(z) eta(1) on the center of eta's group (Schur).
// Errors if some eta(z)/eta(1) is not a root of unity.
struct CentralCharacter {
  const FiniteGroup *group = nullptr;
  std::vector<QMod1> on_center;  // indexed by position in group->center().elems
  QMod1 at(int z) const;         // z a parent element of the center
};
CentralCharacter central_character(const CharacterTable &t, int irr);

}  // namespace dgaut
