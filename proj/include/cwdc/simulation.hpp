#pragma once

#include <string>

#include "cwdc/analysis.hpp"
#include "cwdc/config.hpp"
#include "cwdc/placement.hpp"

namespace cwdc {

struct RunOptions {
  std::string trace_path;          // JSONL message/block log, empty = off
  std::string placement_dump_path; // placement text dump, empty = off
};

struct RunResult {
  ValidatedConfig valid;
  Placement placement;
  LoadReport report;
  std::int64_t available = 0;      // files that entered the reduce
  std::int64_t lost = 0;           // files nobody stored
  int users_ok = 0;                // reduce outputs matching the oracle
  bool verified = false;           // all users matched
  double seconds = 0.0;
  std::string hash_id;
  std::string field_id;
};

// Full pipeline: synthesize, place, map, shuffle up and down, decode at
// every user, reduce, and check each output against the no-shuffle oracle.
// Decode failures throw; verification mismatches only clear `verified`.
RunResult run_simulation(const SystemConfig& cfg, const RunOptions& opt = {});

}  // namespace cwdc
