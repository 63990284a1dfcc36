#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cwdc/bits.hpp"

namespace cwdc {

// Identifier of the keyed-hash construction, recorded in run metadata so that
// result files are traceable to the exact value-generation primitive.
inline constexpr const char* kHashPrimitiveId = "fnv1a64+splitmix64/ctr-v1";

// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z);

// Counter-based stream over mix64; used to expand a key into payload bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// FNV-1a absorption of `data` starting from `key`, finalized with mix64.
std::uint64_t hash_bytes(std::uint64_t key, const std::uint8_t* data, std::size_t len);

std::uint64_t hash_combine(std::uint64_t key, std::uint64_t value);

// Domain-separated key derivation: seed and role string plus two numeric
// coordinates. All randomness in a run funnels through this.
std::uint64_t derive_key(std::uint64_t seed, std::string_view domain,
                         std::uint64_t a = 0, std::uint64_t b = 0);

// Expands a key into `nbits` pseudorandom bits (counter mode).
BitString expand_bits(std::uint64_t key, std::size_t nbits);

// Uniform draw from [0, n) via rejection sampling on the raw 64-bit stream.
// std::uniform_int_distribution is implementation-defined; this is not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace cwdc
