#include <doctest.h>

#include <algorithm>

#include "cwdc/access_point.hpp"
#include "cwdc/dataset.hpp"
#include "cwdc/errors.hpp"
#include "cwdc/map_phase.hpp"

using namespace cwdc;

namespace {

struct Pipeline {
  SystemConfig cfg;
  Placement placement;
  MapOutput values;
  ShufflePlan plan;
  UplinkResult up;

  explicit Pipeline(int users, std::int64_t files, const Rat& mu, int value_bits,
                    std::uint64_t seed = 7)
      : cfg(make_cfg(users, files, mu, value_bits, seed)),
        placement(make_placement(validate_config(cfg))),
        values(run_map(synthesize_dataset(cfg), ComputeFunctions(value_bits, cfg.output_bits),
                       placement)),
        plan(build_shuffle_plan(placement, value_bits)),
        up(encode_coded_uplink(plan, values)) {}

  static SystemConfig make_cfg(int users, std::int64_t files, const Rat& mu, int value_bits,
                               std::uint64_t seed) {
    SystemConfig c;
    c.users = users;
    c.files = files;
    c.mu = mu;
    c.value_bits = value_bits;
    c.seed = seed;
    return c;
  }
};

}  // namespace

TEST_CASE("forward mode relays every message verbatim") {
  Pipeline p(3, 6, make_rat(2, 3), 16);
  DownlinkSpec spec{DownlinkMode::forward, 7, 64};
  DownlinkResult down = encode_downlink(spec, p.up.messages);
  REQUIRE(down.blocks.size() == 3);
  CHECK(down.bits == p.up.bits);
  CHECK(down.retries == 0);
  for (const DownlinkBlock& b : down.blocks) {
    CHECK_FALSE(b.raw);
    CHECK(b.subset_mask == 0b111);
    // index identifies the sender's position among subset members
    const UplinkMessage& m = p.up.messages[std::size_t(&b - down.blocks.data())];
    CHECK(b.payload == m.payload);
    CHECK(p.plan.subsets[0].members[std::size_t(b.index)] == m.sender);
  }
}

TEST_CASE("mds mode emits size-1 byte-aligned combinations per subset") {
  Pipeline p(3, 6, make_rat(2, 3), 16);
  DownlinkSpec spec{DownlinkMode::mds, 7, 64};
  DownlinkResult down = encode_downlink(spec, p.up.messages);
  REQUIRE(down.blocks.size() == 2);  // |S|-1 = 2 blocks for the single triple
  for (const DownlinkBlock& b : down.blocks) {
    CHECK(b.subset_mask == 0b111);
    CHECK(b.bits() == 16);  // messages are 16 bits, already byte aligned
  }
  CHECK(down.bits == 32);

  // blocks reproduce the coefficient matrix applied to the messages
  gf::Matrix m = downlink_matrix(spec, 0b111);
  REQUIRE(m.rows == 2);
  REQUIRE(m.cols == 3);
  for (int r = 0; r < m.rows; ++r) {
    std::vector<std::uint8_t> acc(2, 0);
    for (int c = 0; c < 3; ++c) {
      const BitString& msg = p.up.messages[std::size_t(c)].payload;
      gf::mul_acc(acc, m.at(r, c), msg.data(), msg.byte_size());
    }
    CHECK(std::equal(acc.begin(), acc.end(), down.blocks[std::size_t(r)].payload.data()));
  }
}

TEST_CASE("odd message lengths round blocks up to whole bytes") {
  Pipeline p(3, 3, make_rat(2, 3), 13);  // 7-bit messages
  DownlinkSpec spec{DownlinkMode::mds, 7, 64};
  DownlinkResult down = encode_downlink(spec, p.up.messages);
  REQUIRE(down.blocks.size() == 2);
  for (const DownlinkBlock& b : down.blocks) CHECK(b.bits() == 8);
  CHECK(down.bits == 16);

  DownlinkSpec fwd{DownlinkMode::forward, 7, 64};
  CHECK(encode_downlink(fwd, p.up.messages).bits == 21);  // exact, no alignment
}

TEST_CASE("matrix derivation is deterministic and seed-sensitive") {
  DownlinkSpec a{DownlinkMode::random_retry, 11, 64};
  DownlinkSpec b{DownlinkMode::random_retry, 12, 64};
  gf::Matrix m1 = downlink_matrix(a, 0b1011);
  gf::Matrix m2 = downlink_matrix(a, 0b1011);
  CHECK(m1.cells == m2.cells);
  CHECK(gf::all_column_drops_invertible(m1));
  // different seed or different subset changes the draw
  CHECK(downlink_matrix(b, 0b1011).cells != m1.cells);
  gf::Matrix other = downlink_matrix(a, 0b0111);
  CHECK((other.cells != m1.cells || other.rows != m1.rows));
  // mds mode ignores the seed entirely
  DownlinkSpec mds1{DownlinkMode::mds, 1, 64};
  DownlinkSpec mds2{DownlinkMode::mds, 999, 64};
  CHECK(downlink_matrix(mds1, 0b111).cells == downlink_matrix(mds2, 0b111).cells);
}

TEST_CASE("forward spec has no matrix") {
  DownlinkSpec spec{DownlinkMode::forward, 7, 64};
  CHECK_THROWS_AS(downlink_matrix(spec, 0b111), SimError);
}

TEST_CASE("pair subsets produce a single combination") {
  // memory-sharing config mixes pair and triple subsets
  Pipeline p(4, 24, make_rat(3, 8), 8);
  DownlinkSpec spec{DownlinkMode::mds, 7, 64};
  DownlinkResult down = encode_downlink(spec, p.up.messages);
  std::int64_t pair_blocks = 0, triple_blocks = 0, bits = 0;
  for (const DownlinkBlock& b : down.blocks) {
    int size = int(mask_members(b.subset_mask).size());
    if (size == 2) {
      ++pair_blocks;
      CHECK(b.bits() == 24);
    } else {
      ++triple_blocks;
      CHECK(b.bits() == 8);
    }
    bits += b.bits();
  }
  CHECK(pair_blocks == 6);    // one block per pair subset
  CHECK(triple_blocks == 8);  // two per triple subset
  CHECK(down.bits == bits);
  CHECK(down.bits == 208);    // 6*24 + 8*8
}

TEST_CASE("uncoded forwarding keeps raw value blocks") {
  Pipeline p(3, 6, make_rat(2, 3), 16);
  UplinkResult raw = encode_uncoded_uplink(p.placement, p.values, 16);
  DownlinkResult down = forward_uncoded(raw.messages);
  REQUIRE(down.blocks.size() == 6);
  CHECK(down.bits == raw.bits);
  for (std::size_t i = 0; i < down.blocks.size(); ++i) {
    CHECK(down.blocks[i].raw);
    CHECK(down.blocks[i].target == raw.messages[i].target);
    CHECK(down.blocks[i].file == raw.messages[i].file);
    CHECK(down.blocks[i].payload == raw.messages[i].payload);
  }
  CHECK_THROWS_AS(forward_uncoded(p.up.messages), SimError);
}

TEST_CASE("random mode accumulates retry counts") {
  Pipeline p(4, 12, make_rat(1, 2), 8);
  DownlinkSpec spec{DownlinkMode::random_retry, 3, 64};
  DownlinkResult down = encode_downlink(spec, p.up.messages);
  CHECK(down.retries >= 0);
  // every derived matrix passes the column-drop check
  for (const SubsetPlan& sp : p.plan.subsets) {
    gf::Matrix m = downlink_matrix(spec, sp.mask);
    CHECK(m.rows == sp.split_ways());
    CHECK(m.cols == sp.size());
    CHECK(gf::all_column_drops_invertible(m));
  }
}
