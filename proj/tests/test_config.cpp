#include <doctest.h>

#include <sstream>

#include "cwdc/config.hpp"
#include "cwdc/errors.hpp"

using namespace cwdc;

namespace {

SystemConfig base(int users, std::int64_t files, const Rat& mu) {
  SystemConfig c;
  c.users = users;
  c.files = files;
  c.mu = mu;
  return c;
}

ErrorCode code_of(const SystemConfig& c) {
  try {
    validate_config(c);
  } catch (const SimError& e) {
    return e.code();
  }
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("valid centralized config derives batches and eta") {
  ValidatedConfig v = validate_config(base(3, 6, make_rat(2, 3)));
  CHECK(v.integer_mu_k);
  CHECK(v.mu_k == Rat(2));
  CHECK(v.batch_count == 3);
  CHECK(v.eta == 2);
  CHECK(v.storage_files == 4);
  CHECK_FALSE(v.storage_floored);
}

TEST_CASE("mu range errors") {
  CHECK(code_of(base(4, 8, make_rat(1, 8))) == ErrorCode::MuOutOfRange);
  CHECK(code_of(base(4, 8, make_rat(9, 8))) == ErrorCode::MuOutOfRange);
  // boundary values pass
  CHECK_NOTHROW(validate_config(base(4, 4, make_rat(1, 4))));
  CHECK_NOTHROW(validate_config(base(4, 4, Rat(1))));
}

TEST_CASE("divisibility errors") {
  CHECK(code_of(base(4, 10, make_rat(1, 2))) == ErrorCode::DivisibilityViolation);
  CHECK_NOTHROW(validate_config(base(4, 12, make_rat(1, 2))));
}

TEST_CASE("zero sizes rejected") {
  CHECK(code_of(base(0, 6, make_rat(1, 2))) == ErrorCode::ZeroSize);
  CHECK(code_of(base(3, 0, make_rat(1, 2))) == ErrorCode::ZeroSize);
  SystemConfig c = base(3, 6, make_rat(2, 3));
  c.value_bits = 0;
  CHECK(code_of(c) == ErrorCode::ZeroSize);
}

TEST_CASE("memory sharing split arithmetic") {
  // K=4, mu=3/8: muK=3/2, alpha=1/2, halves at replication 1 and 2
  MemoryShare s = memory_sharing_split(4, make_rat(3, 8), 32);
  CHECK(s.rep_low == 1);
  CHECK(s.rep_high == 2);
  CHECK(s.alpha == make_rat(1, 2));
  CHECK(s.files_low == 16);
  CHECK(s.files_high == 16);
}

TEST_CASE("memory sharing config validates only when both groups tile") {
  // N=32: 16 files at replication 2 cannot split into C(4,2)=6 batches
  CHECK(code_of(base(4, 32, make_rat(3, 8))) == ErrorCode::DivisibilityViolation);
  // N=24: 12/C(4,1) and 12/C(4,2) both integral
  ValidatedConfig v = validate_config(base(4, 24, make_rat(3, 8)));
  CHECK_FALSE(v.integer_mu_k);
  CHECK(v.share.eta_low == 3);
  CHECK(v.share.eta_high == 2);
  CHECK(v.storage_files == 9);
}

TEST_CASE("decentralized floors fractional storage budgets") {
  SystemConfig c = base(3, 7, make_rat(1, 2));
  c.placement = PlacementMode::decentralized;
  ValidatedConfig v = validate_config(c);
  CHECK(v.storage_files == 3);
  CHECK(v.storage_floored);
}

TEST_CASE("suggest_files returns the smallest compatible N at or above the hint") {
  CHECK(suggest_files(4, make_rat(1, 2), 1) == 6);
  CHECK(suggest_files(4, make_rat(1, 2), 7) == 12);
  CHECK(suggest_files(3, make_rat(2, 3), 5) == 6);
  // memory sharing: N=24 is the least that tiles both groups
  CHECK(suggest_files(4, make_rat(3, 8), 1) == 24);
  CHECK_NOTHROW(validate_config(base(4, suggest_files(4, make_rat(3, 8), 100), make_rat(3, 8))));
}

TEST_CASE("config file parsing with flag-style keys") {
  std::istringstream in(
      "# comment\n"
      "users = 3\n"
      "files = 6\n"
      "mu = 2/3\n"
      "value-bits = 8\n"
      "mode = centralized\n"
      "downlink = random\n"
      "baseline = uncoded\n"
      "seed = 9\n");
  SystemConfig c = load_config_file(in);
  CHECK(c.users == 3);
  CHECK(c.files == 6);
  CHECK(c.mu == make_rat(2, 3));
  CHECK(c.value_bits == 8);
  CHECK(c.downlink == DownlinkMode::random_retry);
  CHECK(c.baseline == Baseline::uncoded);
  CHECK(c.seed == 9);

  std::istringstream bad("nonsense = 1\n");
  CHECK_THROWS_AS(load_config_file(bad), SimError);
}
