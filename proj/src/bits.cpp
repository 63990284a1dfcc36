#include "cwdc/bits.hpp"

#include <algorithm>
#include <cstring>

#include "cwdc/errors.hpp"

namespace cwdc {

BitString BitString::from_bytes(const std::uint8_t* data, std::size_t nbits) {
  BitString out(nbits);
  std::memcpy(out.bytes_.data(), data, out.bytes_.size());
  out.clear_tail();
  return out;
}

void BitString::set_bit(std::size_t i, bool v) {
  if (v)
    bytes_[i >> 3] |= std::uint8_t(1u << (i & 7));
  else
    bytes_[i >> 3] &= std::uint8_t(~(1u << (i & 7)));
}

void BitString::clear_tail() {
  if (nbits_ & 7) bytes_.back() &= std::uint8_t(0xFFu >> (8 - (nbits_ & 7)));
}

void BitString::resize(std::size_t nbits) {
  bytes_.resize((nbits + 7) / 8, 0);
  nbits_ = nbits;
  clear_tail();
}

void BitString::xor_with(const BitString& other) {
  if (other.nbits_ > nbits_)
    throw SimError(ErrorCode::InconsistentLengths, "xor operand longer than destination");
  for (std::size_t i = 0; i < other.bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
}

BitString BitString::slice(std::size_t start, std::size_t len) const {
  if (start + len > nbits_)
    throw SimError(ErrorCode::InconsistentLengths, "slice past end of bit string");
  BitString out(len);
  if ((start & 7) == 0) {
    std::memcpy(out.bytes_.data(), bytes_.data() + (start >> 3), out.bytes_.size());
    out.clear_tail();
  } else {
    for (std::size_t i = 0; i < len; ++i) out.set_bit(i, bit(start + i));
  }
  return out;
}

void BitString::append(const BitString& other) {
  std::size_t off = nbits_;
  resize(nbits_ + other.nbits_);
  if ((off & 7) == 0) {
    std::memcpy(bytes_.data() + (off >> 3), other.bytes_.data(), other.bytes_.size());
    clear_tail();
  } else {
    for (std::size_t i = 0; i < other.nbits_; ++i) set_bit(off + i, other.bit(i));
  }
}

bool BitString::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MuOutOfRange: return "MuOutOfRange";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::ZeroSize: return "ZeroSize";
    case ErrorCode::SimLimitExceeded: return "SimLimitExceeded";
    case ErrorCode::LostFilesPresent: return "LostFilesPresent";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::MissingSegment: return "MissingSegment";
    case ErrorCode::InconsistentLengths: return "InconsistentLengths";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::SizeExceedsField: return "SizeExceedsField";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace cwdc
