#pragma once

#include <cstdint>
#include <vector>

#include "cwdc/map_phase.hpp"
#include "cwdc/shuffle_plan.hpp"

namespace cwdc {

struct UplinkMessage {
  int sender = -1;               // user id
  std::uint64_t subset_mask = 0; // coded: the subset S; raw: {sender, target}
  bool raw = false;              // uncoded pass-through of one value
  int target = -1;               // raw only
  std::int64_t file = -1;        // raw only
  BitString payload;

  std::int64_t bits() const { return std::int64_t(payload.bit_size()); }
};

struct UplinkResult {
  std::vector<UplinkMessage> messages;
  std::int64_t bits = 0;          // transmitted, zero-fill included
  std::int64_t content_bits = 0;  // balanced equivalent; bits - content = pad
};

// Coded shuffle: per subset, each member XORs the zero-padded chunks it
// holds for the other members into one message. Works off the plan alone,
// so centralized and decentralized placements share the code path.
UplinkResult encode_coded_uplink(const ShufflePlan& plan, const MapOutput& values);

// Mode-checked entry points; identical wire format, different placements.
UplinkResult encode_centralized_uplink(const Placement& p, const ShufflePlan& plan,
                                       const MapOutput& values);
UplinkResult encode_decentralized_uplink(const Placement& p, const ShufflePlan& plan,
                                         const MapOutput& values);

// Uncoded baseline: the lowest-indexed owner of each needed (target, file)
// pair sends the value as-is.
UplinkResult encode_uncoded_uplink(const Placement& p, const MapOutput& values,
                                   int value_bits);

// Concatenated exclusive-set payload for member t_idx of a subset.
BitString target_payload(const SubsetPlan& sp, int t_idx, const MapOutput& values);

}  // namespace cwdc
