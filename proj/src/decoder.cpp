#include "cwdc/decoder.hpp"

#include <algorithm>

#include "cwdc/errors.hpp"
#include "cwdc/uplink.hpp"

namespace cwdc {

namespace {

// Map values restricted through LocalMapView, concatenated per target.
// Every target other than the decoder itself has its exclusive set stored
// at the decoder (the files' signature contains it), so this never trips
// the ownership check.
BitString known_target_payload(const SubsetPlan& sp, int t_idx, const LocalMapView& local) {
  BitString payload(0);
  int target = sp.members[std::size_t(t_idx)];
  for (std::int64_t n : sp.target_files[std::size_t(t_idx)]) payload.append(local.value(target, n));
  return payload;
}

}  // namespace

ReducedSystem cancel_known(const SubsetPlan& sp, int me_idx, const DownlinkSpec& spec,
                           const LocalMapView& local,
                           const std::vector<const DownlinkBlock*>& blocks) {
  int size = sp.size();
  std::int64_t expected_payload_bits = 0;
  for (int s = 0; s < size; ++s)
    expected_payload_bits = std::max(expected_payload_bits, sp.message_bits(s));
  std::size_t msg_bytes = std::size_t(ceil_div(expected_payload_bits, 8));

  // known part of each member's message: all chunks except mine
  std::vector<std::vector<std::uint8_t>> known(std::size_t(size),
                                               std::vector<std::uint8_t>(msg_bytes, 0));
  std::vector<BitString> payloads(static_cast<std::size_t>(size));
  for (int t = 0; t < size; ++t)
    if (t != me_idx && sp.target_bits[std::size_t(t)] > 0)
      payloads[std::size_t(t)] = known_target_payload(sp, t, local);
  for (int s = 0; s < size; ++s) {
    for (int t = 0; t < size; ++t) {
      if (t == s || t == me_idx || sp.target_bits[std::size_t(t)] == 0) continue;
      int pos = sp.chunk_position(t, s);
      std::int64_t raw = sp.chunk_raw_bits(t, pos);
      if (raw == 0) continue;
      BitString chunk = payloads[std::size_t(t)].slice(std::size_t(pos * sp.chunk_bits(t)),
                                                       std::size_t(raw));
      for (std::size_t i = 0; i < chunk.byte_size(); ++i)
        known[std::size_t(s)][i] ^= chunk.data()[i];
    }
  }

  ReducedSystem sys;
  gf::Matrix full;
  if (spec.mode != DownlinkMode::forward) full = downlink_matrix(spec, sp.mask);

  // Forward blocks carry each message at its own length; zero-extending to
  // a common width is exact because message content past its length is
  // zero. GF-coded blocks must all share the byte-aligned width.
  sys.block_bytes = msg_bytes;
  for (const DownlinkBlock* b : blocks)
    sys.block_bytes = std::max(sys.block_bytes, b->payload.byte_size());

  for (const DownlinkBlock* b : blocks) {
    std::size_t bb = b->payload.byte_size();
    if (spec.mode != DownlinkMode::forward && bb != sys.block_bytes)
      throw SimError(ErrorCode::InconsistentLengths, "downlink block length mismatch");

    std::vector<std::uint8_t> row(std::size_t(size), 0);
    if (spec.mode == DownlinkMode::forward) {
      if (b->index < 0 || b->index >= size)
        throw SimError(ErrorCode::BadInput, "forward block index outside subset");
      row[std::size_t(b->index)] = 1;
    } else {
      if (b->index < 0 || b->index >= full.rows)
        throw SimError(ErrorCode::BadInput, "block index outside coefficient matrix");
      for (int c = 0; c < size; ++c) row[std::size_t(c)] = full.at(b->index, c);
    }

    std::vector<std::uint8_t> rhs(sys.block_bytes, 0);
    std::copy(b->payload.data(), b->payload.data() + bb, rhs.begin());
    for (int s = 0; s < size; ++s)
      gf::mul_acc(rhs, row[std::size_t(s)], known[std::size_t(s)].data(), msg_bytes);

    // drop the me column: its chunk of my own payload is the unknown set
    std::vector<std::uint8_t> reduced;
    reduced.reserve(std::size_t(size) - 1);
    for (int c = 0; c < size; ++c)
      if (c != me_idx) reduced.push_back(row[std::size_t(c)]);
    bool zero_row = std::all_of(reduced.begin(), reduced.end(),
                                [](std::uint8_t v) { return v == 0; });
    if (zero_row) continue;  // forward mode: my own forwarded message
    if (sys.matrix.rows == 0) sys.matrix = gf::Matrix(0, size - 1);
    sys.matrix.cells.insert(sys.matrix.cells.end(), reduced.begin(), reduced.end());
    ++sys.matrix.rows;
    sys.rhs.push_back(std::move(rhs));
  }
  return sys;
}

std::vector<std::pair<std::int64_t, BitString>> reassemble(const SubsetPlan& sp, int t_idx,
                                                           const BitString& payload) {
  if (std::int64_t(payload.bit_size()) != sp.target_bits[std::size_t(t_idx)])
    throw SimError(ErrorCode::InconsistentLengths, "reassembled payload length mismatch");
  std::vector<std::pair<std::int64_t, BitString>> out;
  const auto& files = sp.target_files[std::size_t(t_idx)];
  out.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i)
    out.emplace_back(files[i], payload.slice(i * std::size_t(sp.value_bits),
                                             std::size_t(sp.value_bits)));
  return out;
}

std::vector<std::pair<std::int64_t, BitString>> decode_subset(
    const SubsetPlan& sp, int user, const DownlinkSpec& spec, const LocalMapView& local,
    const std::vector<const DownlinkBlock*>& blocks) {
  int me_idx = sp.member_index(user);
  if (sp.target_bits[std::size_t(me_idx)] == 0) return {};

  int unknowns = sp.size() - 1;
  ReducedSystem sys = cancel_known(sp, me_idx, spec, local, blocks);
  if (sys.matrix.rows < unknowns)
    throw SimError(ErrorCode::MissingSegment,
                   "subset delivers " + std::to_string(sys.matrix.rows) + " usable blocks for " +
                       std::to_string(unknowns) + " unknown chunks");
  if (sys.matrix.rows > unknowns) {
    sys.matrix.rows = unknowns;
    sys.matrix.cells.resize(std::size_t(unknowns) * std::size_t(unknowns));
    sys.rhs.resize(std::size_t(unknowns));
  }
  std::vector<std::vector<std::uint8_t>> solved = gf::solve(sys.matrix, std::move(sys.rhs));

  // solution column order = members except me, ascending = chunk position
  BitString payload(0);
  for (int pos = 0; pos < unknowns; ++pos) {
    std::int64_t raw = sp.chunk_raw_bits(me_idx, pos);
    if (raw == 0) continue;
    BitString chunk = BitString::from_bytes(solved[std::size_t(pos)].data(),
                                            solved[std::size_t(pos)].size() * 8);
    payload.append(chunk.slice(0, std::size_t(raw)));
  }
  return reassemble(sp, me_idx, payload);
}

std::unordered_map<std::int64_t, BitString> decode_user(
    int user, const ShufflePlan& plan, const DownlinkSpec& spec, const LocalMapView& local,
    const std::vector<DownlinkBlock>& blocks) {
  std::unordered_map<std::int64_t, BitString> out;
  std::unordered_map<std::uint64_t, std::vector<const DownlinkBlock*>> coded;
  for (const DownlinkBlock& b : blocks) {
    if (b.raw) {
      if (b.target == user) out.emplace(b.file, b.payload);
      continue;
    }
    if ((b.subset_mask >> user) & 1) coded[b.subset_mask].push_back(&b);
  }
  for (const auto& [mask, group] : coded) {
    const SubsetPlan* sp = plan.find(mask);
    if (!sp)
      throw SimError(ErrorCode::MissingSegment, "blocks reference a subset outside the plan");
    for (auto& [file, value] : decode_subset(*sp, user, spec, local, group))
      out.emplace(file, std::move(value));
  }
  return out;
}

}  // namespace cwdc
