#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "cwdc/combinatorics.hpp"
#include "cwdc/errors.hpp"
#include "cwdc/placement.hpp"

using namespace cwdc;

namespace {

ValidatedConfig make_valid(int users, std::int64_t files, const Rat& mu,
                           PlacementMode mode = PlacementMode::centralized,
                           std::uint64_t seed = 1) {
  SystemConfig c;
  c.users = users;
  c.files = files;
  c.mu = mu;
  c.placement = mode;
  c.seed = seed;
  return validate_config(c);
}

}  // namespace

TEST_CASE("three-user centralized batches follow lexicographic subsets") {
  Placement p = centralized_placement(make_valid(3, 6, make_rat(2, 3)));
  // batches of 2: {1,2}->files 1,2  {1,3}->files 3,4  {2,3}->files 5,6
  CHECK(p.user_files[0] == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK(p.user_files[1] == std::vector<std::int64_t>{0, 1, 4, 5});
  CHECK(p.user_files[2] == std::vector<std::int64_t>{2, 3, 4, 5});
  CHECK(p.owner_mask[0] == 0b011);
  CHECK(p.owner_mask[3] == 0b101);
  CHECK(p.owner_mask[5] == 0b110);
  REQUIRE(p.components.size() == 1);
  CHECK(p.components[0].eta == 2);
  CHECK(p.components[0].batch_count == 3);
}

TEST_CASE("batch unranking matches enumeration order") {
  PlacementComponent c;
  c.replication = 2;
  CHECK(component_batch_subset(4, c, 0) == std::vector<int>{0, 1});
  CHECK(component_batch_subset(4, c, 1) == std::vector<int>{0, 2});
  CHECK(component_batch_subset(4, c, 2) == std::vector<int>{0, 3});
  CHECK(component_batch_subset(4, c, 3) == std::vector<int>{1, 2});
  CHECK(component_batch_subset(4, c, 5) == std::vector<int>{2, 3});
}

TEST_CASE("every user stores exactly mu*N files") {
  for (int users = 2; users <= 6; ++users) {
    for (int t = 1; t <= users; ++t) {
      std::int64_t files = 2 * binomial(unsigned(users), unsigned(t));
      Placement p = centralized_placement(make_valid(users, files, make_rat(t, users)));
      for (int u = 0; u < users; ++u)
        CHECK(p.stored_count(u) == files * t / users);
    }
  }
}

TEST_CASE("memory sharing tiles both replication groups") {
  Placement p = centralized_placement(make_valid(4, 24, make_rat(3, 8)));
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0].replication == 1);
  CHECK(p.components[0].file_end == 12);
  CHECK(p.components[0].eta == 3);
  CHECK(p.components[1].replication == 2);
  CHECK(p.components[1].file_begin == 12);
  CHECK(p.components[1].eta == 2);
  for (int u = 0; u < 4; ++u) CHECK(p.stored_count(u) == 9);

  ReplicationHistogram h = replication_histogram(p);
  CHECK(h.count[0] == 0);
  CHECK(h.count[1] == 12);
  CHECK(h.count[2] == 12);
  CHECK(information_loss(h) == Rat(0));
}

TEST_CASE("storage identity: sum of j*count[j] never exceeds mu*N*K") {
  // centralized: exact equality
  Placement p = centralized_placement(make_valid(5, 20, make_rat(2, 5)));
  ReplicationHistogram h = replication_histogram(p);
  std::int64_t mass = 0;
  for (int j = 0; j <= h.users; ++j) mass += j * h.count[std::size_t(j)];
  CHECK(mass == 2 * 20);  // mu*N*K = (2/5)*20*5

  // decentralized with integral budget: equality as well
  Placement d = decentralized_placement(make_valid(5, 20, make_rat(2, 5),
                                                   PlacementMode::decentralized, 3));
  ReplicationHistogram hd = replication_histogram(d);
  mass = 0;
  for (int j = 0; j <= hd.users; ++j) mass += j * hd.count[std::size_t(j)];
  CHECK(mass == 2 * 20);

  // floored budget: strictly below
  Placement f = decentralized_placement(make_valid(5, 21, make_rat(2, 5),
                                                   PlacementMode::decentralized, 3));
  ReplicationHistogram hf = replication_histogram(f);
  mass = 0;
  for (int j = 0; j <= hf.users; ++j) mass += j * hf.count[std::size_t(j)];
  CHECK(mass == 5 * 8);  // floor(8.4) per user
}

TEST_CASE("decentralized placement is seeded and well formed") {
  ValidatedConfig v = make_valid(6, 50, make_rat(1, 2), PlacementMode::decentralized, 11);
  Placement a = decentralized_placement(v);
  Placement b = decentralized_placement(v);
  CHECK(a.user_files == b.user_files);

  Placement c = decentralized_placement(
      make_valid(6, 50, make_rat(1, 2), PlacementMode::decentralized, 12));
  CHECK(a.user_files != c.user_files);

  for (int u = 0; u < 6; ++u) {
    const auto& mine = a.user_files[std::size_t(u)];
    REQUIRE(std::int64_t(mine.size()) == 25);
    CHECK(std::is_sorted(mine.begin(), mine.end()));
    CHECK(std::set<std::int64_t>(mine.begin(), mine.end()).size() == mine.size());
    CHECK(mine.front() >= 0);
    CHECK(mine.back() < 50);
  }
}

TEST_CASE("histogram restricted to participants") {
  std::istringstream in("1 2\n2 3\n2 4\n");
  Placement p = load_placement(in, PlacementMode::decentralized, 4);
  ReplicationHistogram all = replication_histogram(p);
  CHECK(all.count[0] == 0);
  CHECK(all.count[1] == 3);  // files 1, 3, 4
  CHECK(all.count[2] == 0);
  CHECK(all.count[3] == 1);  // file 2

  ReplicationHistogram pair = replication_histogram(p, {0, 2});
  CHECK(pair.users == 2);
  CHECK(pair.count[0] == 1);  // file 3 only stored by user 2
  CHECK(pair.count[1] == 2);
  CHECK(pair.count[2] == 1);
}

TEST_CASE("information loss counts unstored files") {
  std::istringstream in("1 2\n1 2\n");
  Placement p = load_placement(in, PlacementMode::decentralized, 3);
  ReplicationHistogram h = replication_histogram(p);
  CHECK(h.count[0] == 1);
  CHECK(information_loss(h) == make_rat(1, 3));
}

TEST_CASE("dump and load round trip, ids are 1-based") {
  Placement p = centralized_placement(make_valid(3, 6, make_rat(2, 3)));
  std::ostringstream out;
  dump_placement(out, p);
  CHECK(out.str() == "1 2 3 4\n1 2 5 6\n3 4 5 6\n");

  std::istringstream in(out.str());
  Placement q = load_placement(in, PlacementMode::centralized);
  CHECK(q.users == 3);
  CHECK(q.files == 6);
  CHECK(q.user_files == p.user_files);
  CHECK(q.owner_mask == p.owner_mask);
}

TEST_CASE("placement loader rejects malformed input") {
  std::istringstream dup("1 1 2\n");
  CHECK_THROWS_AS(load_placement(dup, PlacementMode::decentralized), SimError);
  std::istringstream zero("0 1\n");
  CHECK_THROWS_AS(load_placement(zero, PlacementMode::decentralized), SimError);
  std::istringstream empty("");
  CHECK_THROWS_AS(load_placement(empty, PlacementMode::decentralized), SimError);
  std::istringstream past("1 5\n");
  CHECK_THROWS_AS(load_placement(past, PlacementMode::decentralized, 3), SimError);
}

TEST_CASE("count-only sampler matches the full decentralized draw") {
  SystemConfig cfg;
  cfg.users = 6;
  cfg.files = 50;
  cfg.mu = make_rat(1, 3);
  cfg.placement = PlacementMode::decentralized;
  cfg.seed = 17;
  ValidatedConfig v = validate_config(cfg);
  ReplicationHistogram full = replication_histogram(decentralized_placement(v));
  ReplicationHistogram fast =
      sample_replication_histogram(6, 50, v.storage_files, cfg.seed);
  CHECK(fast.count == full.count);

  // no mask inside, so user counts past 64 are fine
  ReplicationHistogram big = sample_replication_histogram(80, 100, 40, 1);
  std::int64_t total = 0;
  for (std::int64_t c : big.count) total += c;
  CHECK(total == 100);
  CHECK_THROWS_AS(sample_replication_histogram(2, 10, 11, 1), SimError);
}
