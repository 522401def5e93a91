#pragma once

#include <map>
#include <mutex>

#include "dgaut/autgrp.hpp"
#include "dgaut/characters.hpp"
#include "dgaut/chartab.hpp"
#include "dgaut/cyclotomic.hpp"
#include "dgaut/group.hpp"

namespace dgaut {

// One group's computation workspace: the cyclotomic field (conductor fixed to
// exp(G), or the ambient conductor when this is a centralizer of a larger
// group), the dual group, characters of the center, Aut(G), and cached
// character tables. Lazy members are mutex-guarded; everything handed out is
// immutable, so concurrent readers are safe after first access.
class GroupContext {
 public:
  explicit GroupContext(GroupPtr g, std::shared_ptr<const CycContext> ambient = nullptr);
  GroupContext(const GroupContext &) = delete;
  GroupContext &operator=(const GroupContext &) = delete;

  const FiniteGroup &group() const { return *g_; }
  const GroupPtr &group_ptr() const { return g_; }
  const CycContext &cyc() const { return *cyc_; }
  std::shared_ptr<const CycContext> cyc_ptr() const { return cyc_; }

  const DualGroup &dual() const;        // linear characters of G
  const SubgroupDual &zdual() const;    // characters of Z(G)
  const AbelianStructure &zstruct() const { return zdual().structure(); }
  const BicharacterGroup &bch() const;  // pairing group (counts always, list on demand)
  const AutGroup &aut() const;          // expensive; lazy
  const SpAutcGroup &spautc() const;

  // restriction table: index of chi|_Z(G) in zdual for each chi in dual
  int gchar_to_zchar(int chi) const;

  const CharacterTable &character_table() const;
  // centralizer of the representative of conjugacy class c, as a group of its
  // own, sharing this context's cyclotomic field
  struct CentralizerInfo {
    SubgroupGroup sub;
    std::unique_ptr<GroupContext> ctx;
  };
  const CentralizerInfo &centralizer_info(int class_idx) const;

 private:
  GroupPtr g_;
  std::shared_ptr<const CycContext> cyc_;

  mutable std::mutex mu_;
  mutable std::unique_ptr<DualGroup> dual_;
  mutable std::unique_ptr<SubgroupDual> zdual_;
  mutable std::unique_ptr<BicharacterGroup> bch_;
  mutable std::unique_ptr<AutGroup> aut_;
  mutable std::unique_ptr<SpAutcGroup> spautc_;
  mutable std::vector<int> gz_restrict_;
  mutable std::unique_ptr<CharacterTable> chartab_;
  mutable std::map<int, std::unique_ptr<CentralizerInfo>> centralizers_;
};

}  // namespace dgaut
