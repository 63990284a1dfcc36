#include "cwdc/simulation.hpp"

#include <chrono>
#include <fstream>

#include <json.hpp>

#include "cwdc/access_point.hpp"
#include "cwdc/dataset.hpp"
#include "cwdc/decoder.hpp"
#include "cwdc/errors.hpp"
#include "cwdc/gf256.hpp"
#include "cwdc/hash.hpp"
#include "cwdc/map_phase.hpp"
#include "cwdc/shuffle_plan.hpp"
#include "cwdc/uplink.hpp"

namespace cwdc {

namespace {

nlohmann::json subset_json(std::uint64_t mask) {
  nlohmann::json arr = nlohmann::json::array();
  for (int u : mask_members(mask)) arr.push_back(u + 1);
  return arr;
}

void write_trace(const std::string& path, const UplinkResult& up, const DownlinkResult& down) {
  std::ofstream out(path);
  if (!out) throw SimError(ErrorCode::BadInput, "cannot write trace to " + path);
  for (const UplinkMessage& m : up.messages) {
    nlohmann::json j{{"kind", "uplink"},
                     {"sender", m.sender + 1},
                     {"subset", subset_json(m.subset_mask)},
                     {"bits", m.bits()}};
    if (m.raw) {
      j["target"] = m.target + 1;
      j["file"] = m.file + 1;
    }
    out << j.dump() << '\n';
  }
  for (const DownlinkBlock& b : down.blocks) {
    nlohmann::json j{{"kind", "downlink"},
                     {"subset", subset_json(b.subset_mask)},
                     {"index", b.index},
                     {"bits", b.bits()}};
    if (b.raw) {
      j["target"] = b.target + 1;
      j["file"] = b.file + 1;
    }
    out << j.dump() << '\n';
  }
}

}  // namespace

RunResult run_simulation(const SystemConfig& cfg, const RunOptions& opt) {
  auto start = std::chrono::steady_clock::now();

  RunResult res;
  res.valid = validate_config(cfg);
  res.hash_id = kHashPrimitiveId;
  res.field_id = gf::kFieldId;

  Dataset data = synthesize_dataset(cfg);
  res.placement = make_placement(res.valid);
  const Placement& p = res.placement;

  if (!opt.placement_dump_path.empty()) {
    std::ofstream out(opt.placement_dump_path);
    if (!out)
      throw SimError(ErrorCode::BadInput, "cannot write placement to " + opt.placement_dump_path);
    dump_placement(out, p);
  }

  ComputeFunctions fns(cfg.value_bits, cfg.output_bits);
  MapOutput values = run_map(data, fns, p);
  ShufflePlan plan = build_shuffle_plan(p, cfg.value_bits);

  ShuffleCounters counters;
  UplinkResult up;
  DownlinkResult down;
  DownlinkSpec spec{cfg.downlink, cfg.seed, cfg.retry_limit};

  if (cfg.baseline == Baseline::uncoded) {
    // baseline ships raw values; the downlink is forced pass-through
    up = encode_uncoded_uplink(p, values, cfg.value_bits);
    down = forward_uncoded(up.messages);
    counters.down_content_bits = down.bits;
    spec.mode = DownlinkMode::forward;
  } else {
    up = cfg.placement == PlacementMode::centralized
             ? encode_centralized_uplink(p, plan, values)
             : encode_decentralized_uplink(p, plan, values);
    down = encode_downlink(spec, up.messages);
    for (const SubsetPlan& sp : plan.subsets)
      counters.down_content_bits += spec.mode == DownlinkMode::forward
                                        ? sp.content_up_bits()
                                        : sp.content_down_bits();
  }
  counters.up_bits = up.bits;
  counters.up_content_bits = up.content_bits;
  counters.down_bits = down.bits;
  counters.retries = down.retries;
  counters.up_messages = std::int64_t(up.messages.size());
  counters.down_blocks = std::int64_t(down.blocks.size());

  if (!opt.trace_path.empty()) write_trace(opt.trace_path, up, down);

  std::vector<std::int64_t> avail = available_files(p);
  res.available = std::int64_t(avail.size());
  res.lost = p.files - res.available;

  res.users_ok = 0;
  for (int u = 0; u < p.users; ++u) {
    LocalMapView local(u, p, values);
    auto recovered = decode_user(u, plan, spec, local, down.blocks);
    BitString out = run_reduce(local, fns, avail, recovered);
    if (out == oracle_output(data, fns, u, avail)) ++res.users_ok;
  }
  res.verified = res.users_ok == p.users;

  ReplicationHistogram hist = replication_histogram(p);
  res.report = measure_loads(res.valid, counters, hist);

  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace cwdc
