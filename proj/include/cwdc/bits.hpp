#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cwdc {

// Packed bit string, LSB-first within each byte. Unused high bits of the
// last byte are kept zero so byte-level comparison and GF(256) arithmetic
// on the underlying buffer stay exact.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t nbits) : bytes_((nbits + 7) / 8), nbits_(nbits) {}

  static BitString from_bytes(const std::uint8_t* data, std::size_t nbits);

  std::size_t bit_size() const { return nbits_; }
  std::size_t byte_size() const { return bytes_.size(); }
  bool empty() const { return nbits_ == 0; }

  bool bit(std::size_t i) const { return (bytes_[i >> 3] >> (i & 7)) & 1; }
  void set_bit(std::size_t i, bool v);

  const std::uint8_t* data() const { return bytes_.data(); }
  std::uint8_t* data() { return bytes_.data(); }

  // Zero-extends or truncates; truncation re-clears the tail bits.
  void resize(std::size_t nbits);

  // XORs `other` into the prefix of this string; other must not be longer.
  void xor_with(const BitString& other);

  BitString slice(std::size_t start, std::size_t len) const;
  void append(const BitString& other);

  bool is_zero() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  void clear_tail();

  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

}  // namespace cwdc
