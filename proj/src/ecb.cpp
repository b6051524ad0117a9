#include "spikecipher/ecb.hpp"

#include <array>
#include <utility>

#include "spikecipher/sdes_tables.hpp"

namespace spikecipher::ecb {

namespace {

using sdes::tables::kExpansion;
using sdes::tables::kIp;
using sdes::tables::kIpInverse;
using sdes::tables::kP4;
using sdes::tables::kS0;
using sdes::tables::kS1;

constexpr int bit_of(std::uint32_t value, int width, int position_1based) {
  return (value >> (width - position_1based)) & 1u;
}

constexpr std::uint8_t permute_byte(std::uint8_t value, const std::array<int, 8>& spec) {
  std::uint8_t out = 0;
  for (const int src : spec) out = static_cast<std::uint8_t>((out << 1) | bit_of(value, 8, src));
  return out;
}

constexpr std::array<std::uint8_t, 256> make_permutation_lut(const std::array<int, 8>& spec) {
  std::array<std::uint8_t, 256> lut{};
  for (int b = 0; b < 256; ++b) lut[b] = permute_byte(static_cast<std::uint8_t>(b), spec);
  return lut;
}

constexpr std::array<std::uint8_t, 16> make_expansion_lut() {
  std::array<std::uint8_t, 16> lut{};
  for (int nib = 0; nib < 16; ++nib) {
    std::uint8_t out = 0;
    for (const int src : kExpansion) {
      out = static_cast<std::uint8_t>((out << 1) | bit_of(static_cast<std::uint32_t>(nib), 4, src));
    }
    lut[nib] = out;
  }
  return lut;
}

// Sub-key already XORed in: 8-bit value -> P4(S0(left nibble) || S1(right)).
constexpr std::array<std::uint8_t, 256> make_f_lut() {
  std::array<std::uint8_t, 256> lut{};
  for (std::uint32_t v = 0; v < 256; ++v) {
    const int s0_row = bit_of(v, 8, 1) * 2 + bit_of(v, 8, 4);
    const int s0_col = bit_of(v, 8, 2) * 2 + bit_of(v, 8, 3);
    const int s1_row = bit_of(v, 8, 5) * 2 + bit_of(v, 8, 8);
    const int s1_col = bit_of(v, 8, 6) * 2 + bit_of(v, 8, 7);
    const std::uint32_t joined =
        (static_cast<std::uint32_t>(kS0[s0_row][s0_col]) << 2) | kS1[s1_row][s1_col];
    std::uint8_t out = 0;
    for (const int src : kP4) out = static_cast<std::uint8_t>((out << 1) | bit_of(joined, 4, src));
    lut[v] = out;
  }
  return lut;
}

constexpr auto kIpLut = make_permutation_lut(kIp);
constexpr auto kIpInverseLut = make_permutation_lut(kIpInverse);
constexpr auto kExpandLut = make_expansion_lut();
constexpr auto kFLut = make_f_lut();

constexpr std::uint8_t run_block(std::uint8_t block, std::uint8_t first_key,
                                 std::uint8_t second_key) {
  const std::uint8_t permuted = kIpLut[block];
  std::uint8_t left = permuted >> 4;
  std::uint8_t right = permuted & 0xF;
  left ^= kFLut[kExpandLut[right] ^ first_key];
  std::swap(left, right);
  left ^= kFLut[kExpandLut[right] ^ second_key];
  return kIpInverseLut[static_cast<std::uint8_t>((left << 4) | right)];
}

// When enabled, short buffers skip thread startup.
constexpr std::int64_t kParallelCutoff = 1 << 14;

}  // namespace

BlockCipher::BlockCipher(const sdes::KeyPair& keys)
    : k1_(keys.k1.to_byte()), k2_(keys.k2.to_byte()) {}

std::uint8_t BlockCipher::encrypt(std::uint8_t block) const {
  return run_block(block, k1_, k2_);
}

std::uint8_t BlockCipher::decrypt(std::uint8_t block) const {
  return run_block(block, k2_, k1_);
}

std::vector<std::uint8_t> encrypt_bytes(std::span<const std::uint8_t> data,
                                        const sdes::KeyPair& keys) {
  const BlockCipher cipher(keys);
  std::vector<std::uint8_t> out(data.size());
  const auto n = static_cast<std::int64_t>(data.size());
#pragma omp parallel for if (n >= kParallelCutoff)
  for (std::int64_t i = 0; i < n; ++i) out[i] = cipher.encrypt(data[i]);
  return out;
}

std::vector<std::uint8_t> decrypt_bytes(std::span<const std::uint8_t> data,
                                        const sdes::KeyPair& keys) {
  const BlockCipher cipher(keys);
  std::vector<std::uint8_t> out(data.size());
  const auto n = static_cast<std::int64_t>(data.size());
#pragma omp parallel for if (n >= kParallelCutoff)
  for (std::int64_t i = 0; i < n; ++i) out[i] = cipher.decrypt(data[i]);
  return out;
}

std::vector<std::uint8_t> encrypt_bytes_serial(std::span<const std::uint8_t> data,
                                               const sdes::KeyPair& keys) {
  std::vector<std::uint8_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = sdes::encrypt_block(BitVector::from_byte(data[i]), keys).to_byte();
  }
  return out;
}

std::vector<std::uint8_t> decrypt_bytes_serial(std::span<const std::uint8_t> data,
                                               const sdes::KeyPair& keys) {
  std::vector<std::uint8_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = sdes::decrypt_block(BitVector::from_byte(data[i]), keys).to_byte();
  }
  return out;
}

}  // namespace spikecipher::ecb
