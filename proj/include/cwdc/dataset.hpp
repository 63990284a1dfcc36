#pragma once

#include <cstdint>
#include <vector>

#include "cwdc/bits.hpp"
#include "cwdc/config.hpp"

namespace cwdc {

// Synthetic workload: N file payloads plus one input per user. Content is
// pseudorandom from the run seed; the pipeline never interprets it, it only
// has to be deterministic so independent recomputation agrees bit for bit.
struct Dataset {
  std::vector<BitString> files;    // N entries, file_bits each
  std::vector<BitString> inputs;   // K entries, input_bits each
};

Dataset synthesize_dataset(const SystemConfig& cfg);

// Map and reduce stand-ins built on the keyed hash. Both are pure functions
// of their arguments, which is what makes cross-user recomputation and the
// end-to-end oracle possible.
class ComputeFunctions {
 public:
  ComputeFunctions(int value_bits, int output_bits)
      : value_bits_(value_bits), output_bits_(output_bits) {}

  // Intermediate value v_{k,n} for target user k's input on file n.
  BitString map_value(const BitString& input, const BitString& file) const;

  // Final output: keyed hash over values concatenated in ascending file
  // order. Caller supplies values already ordered; file ids bind position.
  BitString reduce_output(const std::vector<std::pair<std::int64_t, BitString>>& ordered) const;

  int value_bits() const { return value_bits_; }
  int output_bits() const { return output_bits_; }

 private:
  int value_bits_;
  int output_bits_;
};

// Ground truth for user k over the given files, straight from the dataset
// with no shuffling involved; files must be sorted ascending.
BitString oracle_output(const Dataset& data, const ComputeFunctions& fns, int user,
                        const std::vector<std::int64_t>& files);

}  // namespace cwdc
