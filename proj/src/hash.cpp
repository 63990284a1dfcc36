#include "cwdc/hash.hpp"

#include "cwdc/errors.hpp"

namespace cwdc {

namespace {
constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ull;
constexpr std::uint64_t kFnvPrime = 0x00000100000001B3ull;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() { return mix64(state_ += kGolden); }

std::uint64_t hash_bytes(std::uint64_t key, const std::uint8_t* data, std::size_t len) {
  std::uint64_t h = kFnvOffset ^ key;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= kFnvPrime;
  }
  return mix64(h);
}

std::uint64_t hash_combine(std::uint64_t key, std::uint64_t value) {
  std::uint8_t buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = std::uint8_t(value >> (8 * i));
  return hash_bytes(key, buf, 8);
}

std::uint64_t derive_key(std::uint64_t seed, std::string_view domain,
                         std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = hash_bytes(seed, reinterpret_cast<const std::uint8_t*>(domain.data()),
                               domain.size());
  h = hash_combine(h, a);
  return hash_combine(h, b);
}

BitString expand_bits(std::uint64_t key, std::size_t nbits) {
  BitString out(nbits);
  std::uint8_t* p = out.data();
  std::size_t nbytes = out.byte_size();
  for (std::size_t blk = 0; blk * 8 < nbytes; ++blk) {
    std::uint64_t w = mix64(key + blk * kGolden);
    for (std::size_t j = 0; j < 8 && blk * 8 + j < nbytes; ++j)
      p[blk * 8 + j] = std::uint8_t(w >> (8 * j));
  }
  if (nbits & 7) p[nbytes - 1] &= std::uint8_t(0xFFu >> (8 - (nbits & 7)));
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw SimError(ErrorCode::BadInput, "uniform_below needs n > 0");
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace cwdc
