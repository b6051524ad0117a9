#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spikecipher {

/// Fixed-length bit string. Index 0 is the most significant bit when
/// converting to or from bytes and integers. Length is set at construction;
/// every operation that combines two vectors checks the lengths and throws
/// std::invalid_argument on mismatch.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : bits_(length, 0) {}

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view text);
  /// Eight bits, most significant first.
  static BitVector from_byte(std::uint8_t value);
  /// The low `length` bits of `value`, most significant first.
  static BitVector from_uint(std::uint64_t value, std::size_t length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int bit(std::size_t index) const;
  void set_bit(std::size_t index, int value);

  BitVector slice(std::size_t offset, std::size_t length) const;
  BitVector concat(const BitVector& tail) const;

  std::string to_string() const;
  std::uint8_t to_byte() const;   // requires size() == 8
  std::uint64_t to_uint() const;  // requires size() <= 64

  BitVector operator^(const BitVector& rhs) const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace spikecipher
