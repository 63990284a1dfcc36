#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cwdc/config.hpp"

namespace cwdc {

// One centralized sub-instance: a contiguous block of files split into
// batches of eta, one batch per size-`replication` subset of users in
// lexicographic order. Memory sharing yields two components; plain
// centralized placement yields one covering all files.
struct PlacementComponent {
  int replication = 0;
  std::int64_t file_begin = 0;      // [file_begin, file_end)
  std::int64_t file_end = 0;
  std::int64_t eta = 0;
  std::int64_t batch_count = 0;
};

struct Placement {
  PlacementMode mode = PlacementMode::centralized;
  int users = 0;
  std::int64_t files = 0;
  std::vector<std::vector<std::int64_t>> user_files;  // sorted, per user
  std::vector<PlacementComponent> components;         // centralized only
  std::int64_t storage_budget = 0;                    // floor(mu*N)

  // Owner set of each file as a user bitmask; the shuffle phase groups
  // files by this signature.
  std::vector<std::uint64_t> owner_mask;

  std::int64_t stored_count(int user) const { return std::int64_t(user_files[std::size_t(user)].size()); }
  bool stores(int user, std::int64_t file) const {
    return (owner_mask[std::size_t(file)] >> user) & 1;
  }
};

// Batch t of a component maps to the t-th lexicographic subset; exposed so
// tests can pin the file-to-subset correspondence directly.
std::vector<int> component_batch_subset(int users, const PlacementComponent& c, std::int64_t batch);

Placement centralized_placement(const ValidatedConfig& v);
Placement decentralized_placement(const ValidatedConfig& v);
Placement make_placement(const ValidatedConfig& v);

// count[j] = number of files stored by exactly j of the participating
// users, j = 0..K. participants defaults to everyone.
struct ReplicationHistogram {
  int users = 0;
  std::int64_t files = 0;
  std::vector<std::int64_t> count;
};

ReplicationHistogram replication_histogram(const Placement& p);
ReplicationHistogram replication_histogram(const Placement& p, const std::vector<int>& participants);

// Histogram of an independent uniform draw without materializing the
// placement: owners are only counted per file, so the 64-user bitmask cap
// of the full simulation does not apply. Uses the same per-user generator
// keys as decentralized_placement, so for K <= 64 the result is identical.
ReplicationHistogram sample_replication_histogram(int users, std::int64_t files,
                                                  std::int64_t storage, std::uint64_t seed);

// Fraction of files no participant stores; those drop out of every reduce.
Rat information_loss(const ReplicationHistogram& h);

// One line per user: sorted 1-based file ids, space separated.
// `files` overrides the inferred file count (covers trailing files that no
// user stores); 0 means infer from the largest id seen.
void dump_placement(std::ostream& out, const Placement& p);
Placement load_placement(std::istream& in, PlacementMode mode, std::int64_t files = 0);

}  // namespace cwdc
