#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spikecipher/sdes.hpp"

namespace spikecipher::ecb {

/// Byte-level codec for the 8-bit block pipeline, compiled against one key
/// pair. Block position 1 maps to bit 7 of the byte. The permutations and
/// the keyed F map are baked into constexpr lookup tables, so a block costs
/// a handful of table reads. Produces exactly the same bytes as
/// sdes::encrypt_block / sdes::decrypt_block.
class BlockCipher {
 public:
  explicit BlockCipher(const sdes::KeyPair& keys);

  std::uint8_t encrypt(std::uint8_t block) const;
  std::uint8_t decrypt(std::uint8_t block) const;

 private:
  std::uint8_t k1_;
  std::uint8_t k2_;
};

/// ECB over a byte buffer, one byte per block. Blocks are independent, so
/// the loop is OpenMP-parallel for large buffers; the output does not depend
/// on scheduling.
std::vector<std::uint8_t> encrypt_bytes(std::span<const std::uint8_t> data,
                                        const sdes::KeyPair& keys);
std::vector<std::uint8_t> decrypt_bytes(std::span<const std::uint8_t> data,
                                        const sdes::KeyPair& keys);

/// Serial reference walking the BitVector pipeline byte by byte. Kept as the
/// comparison baseline for the kernel tests and the benchmark.
std::vector<std::uint8_t> encrypt_bytes_serial(std::span<const std::uint8_t> data,
                                               const sdes::KeyPair& keys);
std::vector<std::uint8_t> decrypt_bytes_serial(std::span<const std::uint8_t> data,
                                               const sdes::KeyPair& keys);

}  // namespace spikecipher::ecb
