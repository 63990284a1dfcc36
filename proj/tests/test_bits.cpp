#include <doctest.h>

#include <random>

#include "cwdc/bits.hpp"
#include "cwdc/errors.hpp"
#include "cwdc/hash.hpp"

using namespace cwdc;

namespace {

BitString random_bits(std::mt19937_64& rng, std::size_t nbits) {
  BitString b(nbits);
  for (std::size_t i = 0; i < nbits; ++i) b.set_bit(i, rng() & 1);
  return b;
}

}  // namespace

TEST_CASE("bit get/set round trip and tail stays canonical") {
  BitString b(13);
  CHECK(b.bit_size() == 13);
  CHECK(b.byte_size() == 2);
  b.set_bit(0, true);
  b.set_bit(12, true);
  CHECK(b.bit(0));
  CHECK(b.bit(12));
  CHECK_FALSE(b.bit(5));
  // tail bits above 13 must stay zero for byte-level equality
  CHECK((b.data()[1] & 0xE0) == 0);
  b.set_bit(12, false);
  CHECK(b.data()[1] == 0);
}

TEST_CASE("xor is an involution") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    std::size_t n = 1 + std::size_t(uniform_below(rng, 200));
    BitString a = random_bits(rng, n);
    BitString mask = random_bits(rng, n);
    BitString twice = a;
    twice.xor_with(mask);
    twice.xor_with(mask);
    CHECK(twice == a);
  }
}

TEST_CASE("xor_with zero-extends the shorter operand") {
  BitString a(16);
  a.set_bit(3, true);
  a.set_bit(11, true);
  BitString small(4);
  small.set_bit(3, true);
  a.xor_with(small);
  CHECK_FALSE(a.bit(3));
  CHECK(a.bit(11));
  CHECK_THROWS_AS(small.xor_with(a), SimError);
}

TEST_CASE("slice matches bit-by-bit reference at any alignment") {
  std::mt19937_64 rng(11);
  BitString src = random_bits(rng, 97);
  for (std::size_t start : {std::size_t(0), std::size_t(1), std::size_t(8), std::size_t(13)}) {
    for (std::size_t len : {std::size_t(0), std::size_t(1), std::size_t(8), std::size_t(40)}) {
      BitString s = src.slice(start, len);
      REQUIRE(s.bit_size() == len);
      for (std::size_t i = 0; i < len; ++i) CHECK(s.bit(i) == src.bit(start + i));
    }
  }
  CHECK_THROWS_AS(src.slice(90, 10), SimError);
}

TEST_CASE("append concatenates preserving order") {
  std::mt19937_64 rng(13);
  BitString a = random_bits(rng, 21);
  BitString b = random_bits(rng, 10);
  BitString ab = a;
  ab.append(b);
  REQUIRE(ab.bit_size() == 31);
  for (std::size_t i = 0; i < 21; ++i) CHECK(ab.bit(i) == a.bit(i));
  for (std::size_t i = 0; i < 10; ++i) CHECK(ab.bit(21 + i) == b.bit(i));
  // byte-aligned fast path
  BitString c = random_bits(rng, 24);
  BitString cb = c;
  cb.append(b);
  for (std::size_t i = 0; i < 10; ++i) CHECK(cb.bit(24 + i) == b.bit(i));
}

TEST_CASE("resize truncation clears dropped bits") {
  BitString a(16);
  for (std::size_t i = 0; i < 16; ++i) a.set_bit(i, true);
  a.resize(5);
  a.resize(16);
  for (std::size_t i = 5; i < 16; ++i) CHECK_FALSE(a.bit(i));
}

TEST_CASE("slice then append reassembles the original") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    std::size_t n = 1 + std::size_t(uniform_below(rng, 300));
    BitString src = random_bits(rng, n);
    std::size_t cut = std::size_t(uniform_below(rng, n + 1));
    BitString rebuilt = src.slice(0, cut);
    rebuilt.append(src.slice(cut, n - cut));
    CHECK(rebuilt == src);
  }
}
