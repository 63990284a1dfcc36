#include "cwdc/shuffle_plan.hpp"

#include <algorithm>
#include <map>

#include "cwdc/errors.hpp"

namespace cwdc {

int SubsetPlan::member_index(int user) const {
  auto it = std::lower_bound(members.begin(), members.end(), user);
  if (it == members.end() || *it != user)
    throw SimError(ErrorCode::BadInput, "user not in subset");
  return int(it - members.begin());
}

std::int64_t SubsetPlan::message_bits(int s_idx) const {
  std::int64_t len = 0;
  for (int t = 0; t < size(); ++t)
    if (t != s_idx) len = std::max(len, chunk_bits(t));
  return len;
}

std::int64_t SubsetPlan::total_bits() const {
  std::int64_t sum = 0;
  for (std::int64_t r : target_bits) sum += r;
  return sum;
}

const SubsetPlan* ShufflePlan::find(std::uint64_t mask) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), mask,
                             [](const SubsetPlan& s, std::uint64_t m) { return s.mask < m; });
  return it != subsets.end() && it->mask == mask ? &*it : nullptr;
}

ShufflePlan build_shuffle_plan(const Placement& p, int value_bits) {
  // signature -> files stored by exactly that user set
  std::map<std::uint64_t, std::vector<std::int64_t>> groups;
  for (std::int64_t n = 0; n < p.files; ++n) {
    std::uint64_t w = p.owner_mask[std::size_t(n)];
    if (w) groups[w].push_back(n);
  }

  std::map<std::uint64_t, SubsetPlan> subsets;
  for (const auto& [w, files] : groups) {
    for (int k = 0; k < p.users; ++k) {
      if ((w >> k) & 1) continue;
      std::uint64_t smask = w | (std::uint64_t(1) << k);
      auto& sp = subsets[smask];
      if (sp.members.empty()) {
        sp.mask = smask;
        sp.members = mask_members(smask);
        sp.target_files.resize(sp.members.size());
        sp.target_bits.assign(sp.members.size(), 0);
        sp.value_bits = value_bits;
      }
      int t = sp.member_index(k);
      auto& dst = sp.target_files[std::size_t(t)];
      dst.insert(dst.end(), files.begin(), files.end());
      sp.target_bits[std::size_t(t)] += std::int64_t(files.size()) * value_bits;
    }
  }

  ShufflePlan plan;
  plan.users = p.users;
  plan.value_bits = value_bits;
  plan.subsets.reserve(subsets.size());
  for (auto& [mask, sp] : subsets) {
    for (auto& tf : sp.target_files) std::sort(tf.begin(), tf.end());
    plan.subsets.push_back(std::move(sp));
  }
  return plan;
}

std::vector<std::int64_t> available_files(const Placement& p) {
  std::vector<std::int64_t> out;
  out.reserve(std::size_t(p.files));
  for (std::int64_t n = 0; n < p.files; ++n)
    if (p.owner_mask[std::size_t(n)]) out.push_back(n);
  return out;
}

}  // namespace cwdc
