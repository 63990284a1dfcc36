#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cwdc/access_point.hpp"
#include "cwdc/map_phase.hpp"
#include "cwdc/shuffle_plan.hpp"

namespace cwdc {

// Linear system a user is left with for one subset after removing what it
// can reconstruct itself: columns are the other members' chunks of its own
// payload, right-hand sides are the adjusted block payloads.
struct ReducedSystem {
  gf::Matrix matrix;                               // one row per usable block
  std::vector<std::vector<std::uint8_t>> rhs;      // block_bytes each
  std::size_t block_bytes = 0;
};

// Rebuilds every constituent the user already knows (all chunks of other
// members' payloads) and cancels them from the blocks. In forward mode the
// identity rows come out directly; the all-zero own-message row is dropped.
ReducedSystem cancel_known(const SubsetPlan& sp, int me_idx, const DownlinkSpec& spec,
                           const LocalMapView& local,
                           const std::vector<const DownlinkBlock*>& blocks);

// Solves the reduced system and reassembles this user's exclusive payload:
// chunks in ascending sender order, each cut back to its unpadded length.
// Returns (file, value) pairs for the subset.
std::vector<std::pair<std::int64_t, BitString>> decode_subset(
    const SubsetPlan& sp, int user, const DownlinkSpec& spec, const LocalMapView& local,
    const std::vector<const DownlinkBlock*>& blocks);

// Splits a reassembled payload into per-file values.
std::vector<std::pair<std::int64_t, BitString>> reassemble(const SubsetPlan& sp, int t_idx,
                                                           const BitString& payload);

// Full decode for one user over all blocks; raw blocks addressed to the
// user pass straight through. Returns values keyed by file.
std::unordered_map<std::int64_t, BitString> decode_user(
    int user, const ShufflePlan& plan, const DownlinkSpec& spec, const LocalMapView& local,
    const std::vector<DownlinkBlock>& blocks);

}  // namespace cwdc
