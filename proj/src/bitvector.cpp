#include "spikecipher/bitvector.hpp"

#include <stdexcept>

namespace spikecipher {

BitVector BitVector::from_string(std::string_view text) {
  BitVector out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitVector: expected only '0'/'1' characters");
    }
    out.bits_[i] = static_cast<std::uint8_t>(c - '0');
  }
  return out;
}

BitVector BitVector::from_byte(std::uint8_t value) {
  return from_uint(value, 8);
}

BitVector BitVector::from_uint(std::uint64_t value, std::size_t length) {
  if (length > 64) {
    throw std::invalid_argument("BitVector: at most 64 bits fit in an integer");
  }
  BitVector out(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.bits_[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1u);
  }
  return out;
}

int BitVector::bit(std::size_t index) const {
  if (index >= bits_.size()) {
    throw std::out_of_range("BitVector: bit index out of range");
  }
  return bits_[index];
}

void BitVector::set_bit(std::size_t index, int value) {
  if (index >= bits_.size()) {
    throw std::out_of_range("BitVector: bit index out of range");
  }
  if (value != 0 && value != 1) {
    throw std::invalid_argument("BitVector: bit value must be 0 or 1");
  }
  bits_[index] = static_cast<std::uint8_t>(value);
}

BitVector BitVector::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > bits_.size()) {
    throw std::out_of_range("BitVector: slice out of range");
  }
  BitVector out(length);
  for (std::size_t i = 0; i < length; ++i) out.bits_[i] = bits_[offset + i];
  return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(bits_.size() + tail.bits_.size());
  std::size_t i = 0;
  for (const auto b : bits_) out.bits_[i++] = b;
  for (const auto b : tail.bits_) out.bits_[i++] = b;
  return out;
}

std::string BitVector::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i] = static_cast<char>('0' + bits_[i]);
  }
  return out;
}

std::uint8_t BitVector::to_byte() const {
  if (bits_.size() != 8) {
    throw std::invalid_argument("BitVector: to_byte requires exactly 8 bits");
  }
  return static_cast<std::uint8_t>(to_uint());
}

std::uint64_t BitVector::to_uint() const {
  if (bits_.size() > 64) {
    throw std::invalid_argument("BitVector: to_uint requires at most 64 bits");
  }
  std::uint64_t value = 0;
  for (const auto b : bits_) value = (value << 1) | b;
  return value;
}

BitVector BitVector::operator^(const BitVector& rhs) const {
  if (bits_.size() != rhs.bits_.size()) {
    throw std::invalid_argument("BitVector: XOR requires equal lengths");
  }
  BitVector out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = bits_[i] ^ rhs.bits_[i];
  }
  return out;
}

}  // namespace spikecipher
