#include "cwdc/config.hpp"

#include <istream>
#include <numeric>
#include <sstream>

#include "cwdc/combinatorics.hpp"
#include "cwdc/errors.hpp"

namespace cwdc {

const char* to_string(PlacementMode m) {
  return m == PlacementMode::centralized ? "centralized" : "decentralized";
}

const char* to_string(DownlinkMode m) {
  switch (m) {
    case DownlinkMode::mds: return "mds";
    case DownlinkMode::random_retry: return "random";
    case DownlinkMode::forward: return "forward";
  }
  return "?";
}

const char* to_string(Baseline b) { return b == Baseline::coded ? "coded" : "uncoded"; }

PlacementMode placement_mode_from(const std::string& s) {
  if (s == "centralized") return PlacementMode::centralized;
  if (s == "decentralized") return PlacementMode::decentralized;
  throw SimError(ErrorCode::BadInput, "unknown placement mode: " + s);
}

DownlinkMode downlink_mode_from(const std::string& s) {
  if (s == "mds") return DownlinkMode::mds;
  if (s == "random" || s == "random-retry") return DownlinkMode::random_retry;
  if (s == "forward") return DownlinkMode::forward;
  throw SimError(ErrorCode::BadInput, "unknown downlink mode: " + s);
}

Baseline baseline_from(const std::string& s) {
  if (s == "coded") return Baseline::coded;
  if (s == "uncoded") return Baseline::uncoded;
  throw SimError(ErrorCode::BadInput, "unknown baseline: " + s);
}

MemoryShare memory_sharing_split(int users, const Rat& mu, std::int64_t files) {
  MemoryShare s;
  Rat mu_k = mu * users;
  s.rep_low = int(rat_floor(mu_k));
  s.rep_high = s.rep_low + 1;
  s.active = true;
  // alpha solves rep_low*alpha + rep_high*(1-alpha) = muK
  Rat mu1 = make_rat(s.rep_low, users);
  Rat mu2 = make_rat(s.rep_high, users);
  s.alpha = (mu2 - mu) / (mu2 - mu1);
  Rat n1 = s.alpha * files;
  if (!rat_is_integer(n1))
    throw SimError(ErrorCode::DivisibilityViolation,
                   "memory sharing needs alpha*N integral, alpha = " + rat_to_string(s.alpha));
  s.files_low = n1.get_num().get_si();
  s.files_high = files - s.files_low;
  return s;
}

namespace {

void check_positive(std::int64_t v, const char* name) {
  if (v <= 0) throw SimError(ErrorCode::ZeroSize, std::string(name) + " must be positive");
}

}  // namespace

ValidatedConfig validate_config(const SystemConfig& cfg) {
  ValidatedConfig v;
  v.cfg = cfg;
  check_positive(cfg.users, "users");
  check_positive(cfg.files, "files");
  check_positive(cfg.value_bits, "value-bits");
  check_positive(cfg.file_bits, "file-bits");
  check_positive(cfg.input_bits, "input-bits");
  check_positive(cfg.output_bits, "output-bits");
  check_positive(cfg.retry_limit, "retry-limit");
  if (cfg.users > 64)
    throw SimError(ErrorCode::SimLimitExceeded, "simulation supports at most 64 users");
  if (cfg.mu > 1 || cfg.mu * cfg.users < 1)
    throw SimError(ErrorCode::MuOutOfRange,
                   "need 1/K <= mu <= 1, got mu = " + rat_to_string(cfg.mu));
  // total map output K*N*T drives buffer sizes; keep it far from overflow
  if (mpz_class(cfg.users) * cfg.files * cfg.value_bits > mpz_class(1) << 40)
    throw SimError(ErrorCode::SimLimitExceeded, "K*N*T too large to simulate");

  v.mu_k = cfg.mu * cfg.users;
  v.integer_mu_k = rat_is_integer(v.mu_k);
  Rat budget = cfg.mu * cfg.files;
  v.storage_files = rat_floor(budget);
  v.storage_floored = !rat_is_integer(budget);

  if (cfg.placement == PlacementMode::centralized) {
    if (v.storage_floored)
      throw SimError(ErrorCode::DivisibilityViolation,
                     "centralized placement needs mu*N integral");
    if (v.integer_mu_k) {
      int t = int(v.mu_k.get_num().get_si());
      v.batch_count = binomial(unsigned(cfg.users), unsigned(t));
      if (cfg.files % v.batch_count != 0)
        throw SimError(ErrorCode::DivisibilityViolation,
                       "N must be a multiple of C(K, muK) = " + std::to_string(v.batch_count));
      v.eta = cfg.files / v.batch_count;
    } else {
      v.share = memory_sharing_split(cfg.users, cfg.mu, cfg.files);
      std::int64_t b1 = binomial(unsigned(cfg.users), unsigned(v.share.rep_low));
      std::int64_t b2 = binomial(unsigned(cfg.users), unsigned(v.share.rep_high));
      if (v.share.files_low % b1 != 0 || v.share.files_high % b2 != 0)
        throw SimError(ErrorCode::DivisibilityViolation,
                       "memory sharing needs alpha*N divisible by C(K, floor(muK)) and "
                       "(1-alpha)*N divisible by C(K, ceil(muK))");
      v.share.eta_low = v.share.files_low / b1;
      v.share.eta_high = v.share.files_high / b2;
    }
  }
  return v;
}

std::int64_t suggest_files(int users, const Rat& mu, std::int64_t hint) {
  Rat mu_k = mu * users;
  std::int64_t step;
  if (rat_is_integer(mu_k)) {
    // N a multiple of C(K, muK) already makes mu*N integral:
    // muK*N/K = eta*C(K-1, muK-1).
    step = binomial(unsigned(users), unsigned(mu_k.get_num().get_si()));
  } else {
    MemoryShare s = memory_sharing_split(users, mu, 0);
    std::int64_t b1 = binomial(unsigned(users), unsigned(s.rep_low));
    std::int64_t b2 = binomial(unsigned(users), unsigned(s.rep_high));
    // need N*alpha/b1 and N*(1-alpha)/b2 integral
    Rat r1 = s.alpha / b1;
    Rat r2 = (1 - s.alpha) / b2;
    step = std::lcm(r1.get_den().get_si(), r2.get_den().get_si());
  }
  return ceil_div(std::max<std::int64_t>(hint, 1), step) * step;
}

SystemConfig load_config_file(std::istream& in, SystemConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key, value;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw SimError(ErrorCode::BadInput,
                     "config line " + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    key = trim(line.substr(0, eq));
    value = trim(line.substr(eq + 1));
    if (key == "users") base.users = std::stoi(value);
    else if (key == "files") base.files = std::stoll(value);
    else if (key == "mu") base.mu = parse_ratio(value);
    else if (key == "value-bits") base.value_bits = std::stoi(value);
    else if (key == "file-bits") base.file_bits = std::stoi(value);
    else if (key == "input-bits") base.input_bits = std::stoi(value);
    else if (key == "output-bits") base.output_bits = std::stoi(value);
    else if (key == "seed") base.seed = std::stoull(value);
    else if (key == "mode") base.placement = placement_mode_from(value);
    else if (key == "downlink") base.downlink = downlink_mode_from(value);
    else if (key == "baseline") base.baseline = baseline_from(value);
    else if (key == "retry-limit") base.retry_limit = std::stoi(value);
    else throw SimError(ErrorCode::BadInput, "unknown config key: " + key);
  }
  return base;
}

}  // namespace cwdc
