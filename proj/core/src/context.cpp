#include "dgaut/context.hpp"

namespace dgaut {

GroupContext::GroupContext(GroupPtr g, std::shared_ptr<const CycContext> ambient)
    : g_(std::move(g)) {
  if (ambient) {
    require(ambient->conductor() % g_->exponent() == 0,
            "GroupContext: ambient conductor incompatible");
    cyc_ = std::move(ambient);
  } else {
    cyc_ = std::make_shared<CycContext>(g_->exponent());
  }
}

const DualGroup &GroupContext::dual() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!dual_) dual_ = std::make_unique<DualGroup>(*g_);
  return *dual_;
}

const SubgroupDual &GroupContext::zdual() const {
  dual();  // avoid mutex re-entry surprises by building in a fixed order
  std::lock_guard<std::mutex> lock(mu_);
  if (!zdual_) zdual_ = std::make_unique<SubgroupDual>(smith_decompose(g_->center()));
  return *zdual_;
}

const BicharacterGroup &GroupContext::bch() const {
  const DualGroup &d = dual();
  std::lock_guard<std::mutex> lock(mu_);
  if (!bch_) bch_ = std::make_unique<BicharacterGroup>(d);
  return *bch_;
}

const AutGroup &GroupContext::aut() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!aut_) aut_ = std::make_unique<AutGroup>(*g_);
  return *aut_;
}

const SpAutcGroup &GroupContext::spautc() const {
  const AutGroup &a = aut();
  std::lock_guard<std::mutex> lock(mu_);
  if (!spautc_) spautc_ = std::make_unique<SpAutcGroup>(a);
  return *spautc_;
}

int GroupContext::gchar_to_zchar(int chi) const {
  const DualGroup &d = dual();
  const SubgroupDual &zd = zdual();
  std::lock_guard<std::mutex> lock(mu_);
  if (gz_restrict_.empty()) {
    gz_restrict_.resize(d.size());
    for (int c = 0; c < d.size(); ++c) {
      std::vector<QMod1> gv;
      for (int zgen : zd.structure().gens) gv.push_back(d.value(c, zgen));
      gz_restrict_[c] = zd.index_from_gen_values(gv);
    }
  }
  return gz_restrict_[chi];
}

const CharacterTable &GroupContext::character_table() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!chartab_)
    chartab_ = std::make_unique<CharacterTable>(compute_character_table(*g_, *cyc_));
  return *chartab_;
}

const GroupContext::CentralizerInfo &GroupContext::centralizer_info(int class_idx) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = centralizers_.find(class_idx);
  if (it == centralizers_.end()) {
    auto info = std::make_unique<CentralizerInfo>();
    int rep = g_->class_rep(class_idx);
    info->sub = subgroup_as_group(g_->centralizer(rep),
                                  g_->name() + ".C(" + std::to_string(rep) + ")");
    info->ctx = std::make_unique<GroupContext>(info->sub.group, cyc_);
    it = centralizers_.emplace(class_idx, std::move(info)).first;
  }
  return *it->second;
}

}  // namespace dgaut
