#pragma once

#include <cstdint>
#include <vector>

#include "cwdc/combinatorics.hpp"
#include "cwdc/placement.hpp"

namespace cwdc {

// Shuffle geometry for one user subset S. Member k's exclusive set is the
// files stored by exactly S \ {k}; its payload (concatenated values, file
// order ascending) splits into |S|-1 equal chunks handed to the other
// members in ascending user order. All lengths below are exact bit counts;
// both the encoder and every decoder derive them from this one place.
struct SubsetPlan {
  std::uint64_t mask = 0;
  std::vector<int> members;                           // ascending user ids
  std::vector<std::vector<std::int64_t>> target_files;  // per member, sorted
  std::vector<std::int64_t> target_bits;              // payload bits per member
  int value_bits = 0;

  int size() const { return int(members.size()); }
  int split_ways() const { return size() - 1; }
  int member_index(int user) const;

  // Padded chunk length of member t's payload: ceil(R_t / (|S|-1)).
  std::int64_t chunk_bits(int t_idx) const {
    return ceil_div(target_bits[std::size_t(t_idx)], split_ways());
  }

  // Position of sender s among the senders of target t (both member
  // indices); chunks are assigned in ascending user order.
  int chunk_position(int t_idx, int s_idx) const { return s_idx < t_idx ? s_idx : s_idx - 1; }

  // Unpadded bits of the chunk at `pos` of target t's payload.
  std::int64_t chunk_raw_bits(int t_idx, int pos) const {
    std::int64_t c = chunk_bits(t_idx);
    std::int64_t rem = target_bits[std::size_t(t_idx)] - pos * c;
    return std::min(std::max<std::int64_t>(rem, 0), c);
  }

  // Uplink message length of member i: XOR of zero-padded chunks, so the
  // maximum padded chunk among the targets it serves. Zero means silent.
  std::int64_t message_bits(int s_idx) const;

  std::int64_t total_bits() const;                    // sum of target_bits

  // Balanced-content equivalents; measured minus these is pad overhead.
  std::int64_t content_up_bits() const { return ceil_div(total_bits(), split_ways()); }
  std::int64_t content_down_bits() const { return ceil_div(total_bits(), size()); }
};

struct ShufflePlan {
  int users = 0;
  int value_bits = 0;
  std::vector<SubsetPlan> subsets;                    // ascending mask order

  const SubsetPlan* find(std::uint64_t mask) const;
};

// Groups files by owner signature and forms every active subset
// S = W + {k}, k not in W. Single-owner signatures produce |S| = 2 pairs;
// files nobody stores produce nothing and surface as information loss.
ShufflePlan build_shuffle_plan(const Placement& p, int value_bits);

// Sorted list of files at least one user stores; reduce runs over these.
std::vector<std::int64_t> available_files(const Placement& p);

}  // namespace cwdc
