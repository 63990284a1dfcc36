#pragma once

#include <cstdint>
#include <vector>

#include "cwdc/config.hpp"
#include "cwdc/gf256.hpp"
#include "cwdc/uplink.hpp"

namespace cwdc {

// Everything the access point and the decoders share about downlink coding.
// Coefficient matrices are re-derived from this on both sides; they are
// never part of the transmitted payload.
struct DownlinkSpec {
  DownlinkMode mode = DownlinkMode::mds;
  std::uint64_t seed = 0;
  int retry_limit = 64;
};

struct DownlinkBlock {
  std::uint64_t subset_mask = 0;
  int index = 0;                 // row of the subset's matrix / forward slot
  bool raw = false;              // uncoded pass-through
  int target = -1;               // raw only
  std::int64_t file = -1;        // raw only
  BitString payload;

  std::int64_t bits() const { return std::int64_t(payload.bit_size()); }
};

struct DownlinkResult {
  std::vector<DownlinkBlock> blocks;
  std::int64_t bits = 0;
  int retries = 0;               // random mode resample total
};

// Coefficient matrix for a subset: |S|-1 rows over the members of S in
// ascending user order. Deterministic in (spec, mask), including the
// rejection sequence in random mode.
gf::Matrix downlink_matrix(const DownlinkSpec& spec, std::uint64_t mask, int* retries = nullptr);

// Combines each subset's messages into |S|-1 blocks (mds or random mode)
// or forwards them unchanged (forward mode). Only message payloads and the
// subset grouping are read; the access point stores no files and runs no
// map functions. GF-coded blocks are byte aligned; the alignment slack is
// part of the transmitted bits and later reported as padding.
DownlinkResult encode_downlink(const DownlinkSpec& spec,
                               const std::vector<UplinkMessage>& messages);

// Uncoded baseline: every raw uplink value goes out unchanged.
DownlinkResult forward_uncoded(const std::vector<UplinkMessage>& messages);

}  // namespace cwdc
