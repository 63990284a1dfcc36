#include "cwdc/uplink.hpp"

#include <bit>

#include "cwdc/errors.hpp"

namespace cwdc {

BitString target_payload(const SubsetPlan& sp, int t_idx, const MapOutput& values) {
  BitString payload(0);
  int target = sp.members[std::size_t(t_idx)];
  for (std::int64_t n : sp.target_files[std::size_t(t_idx)])
    payload.append(values.value(target, n));
  if (std::int64_t(payload.bit_size()) != sp.target_bits[std::size_t(t_idx)])
    throw SimError(ErrorCode::InconsistentLengths, "exclusive payload length mismatch");
  return payload;
}

UplinkResult encode_coded_uplink(const ShufflePlan& plan, const MapOutput& values) {
  UplinkResult out;
  for (const SubsetPlan& sp : plan.subsets) {
    // payloads once per subset, sliced per sender below
    std::vector<BitString> payloads(std::size_t(sp.size()));
    for (int t = 0; t < sp.size(); ++t)
      if (sp.target_bits[std::size_t(t)] > 0) payloads[std::size_t(t)] = target_payload(sp, t, values);

    for (int s = 0; s < sp.size(); ++s) {
      std::int64_t len = sp.message_bits(s);
      if (len == 0) continue;
      UplinkMessage msg;
      msg.sender = sp.members[std::size_t(s)];
      msg.subset_mask = sp.mask;
      msg.payload = BitString(std::size_t(len));
      for (int t = 0; t < sp.size(); ++t) {
        if (t == s || sp.target_bits[std::size_t(t)] == 0) continue;
        int pos = sp.chunk_position(t, s);
        std::int64_t raw = sp.chunk_raw_bits(t, pos);
        if (raw == 0) continue;
        // chunks all start at bit 0 of the message; shorter ones are
        // implicitly zero-padded to the message length
        msg.payload.xor_with(
            payloads[std::size_t(t)].slice(std::size_t(pos * sp.chunk_bits(t)), std::size_t(raw)));
      }
      out.bits += len;
      out.messages.push_back(std::move(msg));
    }
    out.content_bits += sp.content_up_bits();
  }
  return out;
}

UplinkResult encode_centralized_uplink(const Placement& p, const ShufflePlan& plan,
                                       const MapOutput& values) {
  if (p.mode != PlacementMode::centralized)
    throw SimError(ErrorCode::BadInput, "placement is not centralized");
  return encode_coded_uplink(plan, values);
}

UplinkResult encode_decentralized_uplink(const Placement& p, const ShufflePlan& plan,
                                         const MapOutput& values) {
  if (p.mode != PlacementMode::decentralized)
    throw SimError(ErrorCode::BadInput, "placement is not decentralized");
  return encode_coded_uplink(plan, values);
}

UplinkResult encode_uncoded_uplink(const Placement& p, const MapOutput& values,
                                   int value_bits) {
  UplinkResult out;
  for (std::int64_t n = 0; n < p.files; ++n) {
    std::uint64_t w = p.owner_mask[std::size_t(n)];
    if (w == 0) continue;
    int sender = std::countr_zero(w);
    for (int k = 0; k < p.users; ++k) {
      if ((w >> k) & 1) continue;
      UplinkMessage msg;
      msg.sender = sender;
      msg.subset_mask = (std::uint64_t(1) << sender) | (std::uint64_t(1) << k);
      msg.raw = true;
      msg.target = k;
      msg.file = n;
      msg.payload = values.value(k, n);
      out.bits += value_bits;
      out.messages.push_back(std::move(msg));
    }
  }
  out.content_bits = out.bits;
  return out;
}

}  // namespace cwdc
