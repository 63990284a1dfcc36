#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cwdc/rational.hpp"

namespace cwdc {

enum class PlacementMode { centralized, decentralized };
enum class DownlinkMode { mds, random_retry, forward };
enum class Baseline { coded, uncoded };

const char* to_string(PlacementMode m);
const char* to_string(DownlinkMode m);
const char* to_string(Baseline b);
PlacementMode placement_mode_from(const std::string& s);
DownlinkMode downlink_mode_from(const std::string& s);
Baseline baseline_from(const std::string& s);

struct SystemConfig {
  int users = 0;                    // K
  std::int64_t files = 0;           // N
  Rat mu = Rat(0);                  // storage fraction
  int value_bits = 64;              // T, intermediate value size
  int file_bits = 256;              // F, synthetic file payload size
  int input_bits = 32;              // D, per-user input size
  int output_bits = 64;             // B, reduce output size
  std::uint64_t seed = 1;
  PlacementMode placement = PlacementMode::centralized;
  DownlinkMode downlink = DownlinkMode::mds;
  Baseline baseline = Baseline::coded;
  int retry_limit = 64;
};

// Memory-sharing split for non-integer muK: files partition into a group
// replicated floor(muK) times (alpha of them) and a group replicated
// ceil(muK) times, sized so total storage is exactly mu*N per user.
struct MemoryShare {
  bool active = false;
  int rep_low = 0;                  // floor(muK)
  int rep_high = 0;                 // ceil(muK)
  Rat alpha = Rat(0);               // fraction of files at rep_low
  std::int64_t files_low = 0;       // alpha*N
  std::int64_t files_high = 0;
  std::int64_t eta_low = 0;         // batch size within each group
  std::int64_t eta_high = 0;
};

// Pure arithmetic of the split: alpha and group sizes for any (K, mu, N)
// with mu*N integral; callers check eta divisibility separately.
MemoryShare memory_sharing_split(int users, const Rat& mu, std::int64_t files);

struct ValidatedConfig {
  SystemConfig cfg;
  Rat mu_k;                         // mu*K
  bool integer_mu_k = false;
  std::int64_t storage_files = 0;   // per-user file budget floor(mu*N)
  bool storage_floored = false;     // decentralized only: mu*N was fractional
  // centralized, integer muK:
  std::int64_t batch_count = 0;     // C(K, muK)
  std::int64_t eta = 0;             // N / batch_count
  MemoryShare share;                // centralized, fractional muK
};

// Checks ranges and divisibility and precomputes the placement arithmetic.
// Throws SimError with a config error code on violation.
ValidatedConfig validate_config(const SystemConfig& cfg);

// Smallest N >= hint compatible with (K, mu) in centralized mode; used by
// the CLI to turn DivisibilityViolation into an actionable suggestion.
std::int64_t suggest_files(int users, const Rat& mu, std::int64_t hint);

// key=value lines, '#' comments; keys mirror the CLI flag names.
SystemConfig load_config_file(std::istream& in, SystemConfig base = {});

}  // namespace cwdc
