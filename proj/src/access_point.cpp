#include "cwdc/access_point.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cwdc/errors.hpp"
#include "cwdc/hash.hpp"

namespace cwdc {

gf::Matrix downlink_matrix(const DownlinkSpec& spec, std::uint64_t mask, int* retries) {
  int size = std::popcount(mask);
  if (size < 2) throw SimError(ErrorCode::BadInput, "subset needs at least two members");
  int rows = size - 1;
  if (retries) *retries = 0;
  switch (spec.mode) {
    case DownlinkMode::mds:
      return gf::mds_matrix(rows, size);
    case DownlinkMode::random_retry: {
      std::mt19937_64 rng(derive_key(spec.seed, "downlink", mask));
      gf::RandomMatrixResult r = gf::random_matrix_with_retry(rows, size, rng, spec.retry_limit);
      if (retries) *retries = r.retries;
      return r.matrix;
    }
    case DownlinkMode::forward:
      throw SimError(ErrorCode::BadInput, "forward mode has no coefficient matrix");
  }
  throw SimError(ErrorCode::BadInput, "unknown downlink mode");
}

DownlinkResult encode_downlink(const DownlinkSpec& spec,
                               const std::vector<UplinkMessage>& messages) {
  DownlinkResult out;
  // group by subset, keeping the wire order of subsets as first seen
  std::map<std::uint64_t, std::vector<const UplinkMessage*>> by_subset;
  for (const UplinkMessage& m : messages) {
    if (m.raw)
      throw SimError(ErrorCode::BadInput, "raw messages take the uncoded forward path");
    by_subset[m.subset_mask].push_back(&m);
  }

  for (const auto& [mask, msgs] : by_subset) {
    std::vector<int> members = mask_members(mask);
    int size = int(members.size());

    if (spec.mode == DownlinkMode::forward) {
      for (const UplinkMessage* m : msgs) {
        DownlinkBlock b;
        b.subset_mask = mask;
        b.index = int(std::lower_bound(members.begin(), members.end(), m->sender) -
                      members.begin());
        b.payload = m->payload;
        out.bits += b.bits();
        out.blocks.push_back(std::move(b));
      }
      continue;
    }

    // columns = members in ascending order; silent members are zero vectors
    std::int64_t max_bits = 0;
    for (const UplinkMessage* m : msgs) max_bits = std::max(max_bits, m->bits());
    std::size_t block_bytes = std::size_t(ceil_div(max_bits, 8));
    std::vector<std::vector<std::uint8_t>> cols(std::size_t(size),
                                                std::vector<std::uint8_t>(block_bytes, 0));
    for (const UplinkMessage* m : msgs) {
      auto it = std::lower_bound(members.begin(), members.end(), m->sender);
      if (it == members.end() || *it != m->sender)
        throw SimError(ErrorCode::BadInput, "message sender outside its subset");
      std::copy(m->payload.data(), m->payload.data() + m->payload.byte_size(),
                cols[std::size_t(it - members.begin())].begin());
    }

    int retries = 0;
    gf::Matrix a = downlink_matrix(spec, mask, &retries);
    out.retries += retries;
    for (int r = 0; r < a.rows; ++r) {
      DownlinkBlock b;
      b.subset_mask = mask;
      b.index = r;
      std::vector<std::uint8_t> acc(block_bytes, 0);
      for (int c = 0; c < size; ++c)
        gf::mul_acc(acc, a.at(r, c), cols[std::size_t(c)].data(), block_bytes);
      b.payload = BitString::from_bytes(acc.data(), block_bytes * 8);
      out.bits += b.bits();
      out.blocks.push_back(std::move(b));
    }
  }
  return out;
}

DownlinkResult forward_uncoded(const std::vector<UplinkMessage>& messages) {
  DownlinkResult out;
  out.blocks.reserve(messages.size());
  for (const UplinkMessage& m : messages) {
    if (!m.raw)
      throw SimError(ErrorCode::BadInput, "coded messages take the coded downlink path");
    DownlinkBlock b;
    b.subset_mask = m.subset_mask;
    b.raw = true;
    b.target = m.target;
    b.file = m.file;
    b.payload = m.payload;
    out.bits += b.bits();
    out.blocks.push_back(std::move(b));
  }
  return out;
}

}  // namespace cwdc
