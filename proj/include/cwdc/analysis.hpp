#pragma once

#include <string>
#include <vector>

#include "cwdc/config.hpp"
#include "cwdc/placement.hpp"

namespace cwdc {

struct TheoryLoads {
  Rat up;
  Rat down;
};

// Coded-shuffle loads under centralized placement, normalized by N*T.
// Integer muK: up = 1/mu - 1, down = muK/(muK+1) * up. Fractional muK:
// exact mix of the two adjacent integer points with the memory-sharing
// weight alpha.
TheoryLoads theory_centralized(int users, const Rat& mu);

struct DecentralizedTheory {
  Rat up;
  Rat down;
  Rat delta;  // expected fraction of files nobody stores, (1-mu)^K
};

// Expected coded loads under independent uniform placement: sums over the
// replication level j of the expected exclusive-set mass times (K-j)/j
// uplink and (K-j)/(j+1) downlink.
DecentralizedTheory theory_decentralized(int users, const Rat& mu);

// Values each baseline scheme ships once per needed (user, file) pair.
Rat uncoded_load_centralized(int users, const Rat& mu);
Rat uncoded_load_decentralized(int users, const Rat& mu);

// Placement-specific lower bounds from the replication histogram. Exact on
// any placement with no lost files; throws LostFilesPresent otherwise.
Rat lower_bound_uplink(const ReplicationHistogram& h);
Rat lower_bound_downlink(const ReplicationHistogram& h);

// Lower convex envelope of the integer-point centralized optimum over
// mu in [1/K, 1]; piecewise linear between adjacent integer muK points.
// Computed by interpolation, independently of theory_centralized.
TheoryLoads lower_bound_envelope(int users, const Rat& mu);

// Bounds in the presence of lost files: available-file storage fraction
// mu/(1-delta) over the surviving system.
TheoryLoads decentralized_bound(int users, const Rat& mu, const Rat& delta);

// Empirical replication-level density against Binomial(K, mu), plus their
// total variation distance.
struct Concentration {
  std::vector<double> empirical;  // index j = 0..K
  std::vector<double> binomial;
  double tv = 0.0;
};

Concentration concentration_density(const std::vector<ReplicationHistogram>& samples,
                                    const Rat& mu);

struct ShuffleCounters {
  std::int64_t up_bits = 0;
  std::int64_t up_content_bits = 0;
  std::int64_t down_bits = 0;
  std::int64_t down_content_bits = 0;
  std::int64_t up_messages = 0;
  std::int64_t down_blocks = 0;
  int retries = 0;
};

// Everything a run reports about communication. Loads are exact rationals:
// transmitted bits (zero-fill and byte alignment included) and their
// balanced content equivalent, both over N*T.
struct LoadReport {
  ShuffleCounters counters;
  Rat load_up;
  Rat load_down;
  Rat load_up_net;        // content only: transmitted minus pad overhead
  Rat load_down_net;
  std::int64_t padding_up_bits = 0;
  std::int64_t padding_down_bits = 0;
  Rat theory_up;
  Rat theory_down;
  Rat delta_theory;       // 0 for centralized
  Rat delta_measured;
  Rat bound_up;           // envelope (centralized) or delta-aware (decent.)
  Rat bound_down;
  bool has_histogram_bounds = false;  // only without lost files
  Rat hist_bound_up;
  Rat hist_bound_down;
};

LoadReport measure_loads(const ValidatedConfig& v, const ShuffleCounters& counters,
                         const ReplicationHistogram& hist);

}  // namespace cwdc
