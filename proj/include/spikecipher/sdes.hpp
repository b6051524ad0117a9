#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spikecipher/bitvector.hpp"

namespace spikecipher::sdes {

/// Permutation described by 1-based source positions: output bit i is input
/// bit sources[i]. The output may be longer than the input when positions
/// repeat, as in the expansion permutation.
struct PermutationSpec {
  std::vector<int> sources;
  int input_len = 0;
};

using SBoxTable = std::array<std::array<std::uint8_t, 4>, 4>;

const PermutationSpec& initial_permutation();          // IP
const PermutationSpec& inverse_initial_permutation();  // IP^-1
const PermutationSpec& expansion_permutation();        // E/P, 4 -> 8 bits
const PermutationSpec& p4_permutation();               // P4
const SBoxTable& sbox0();
const SBoxTable& sbox1();

BitVector permute(const BitVector& input, const PermutationSpec& spec);

/// Inverse of a bijective spec, so that
/// permute(permute(x, spec), invert_spec(spec)) == x. Throws if the spec is
/// not a bijection (repeated or missing source positions).
PermutationSpec invert_spec(const PermutationSpec& spec);

/// E/P applied to a 4-bit half, yielding 8 bits.
BitVector expand_permute(const BitVector& r);

/// Row from bits (1,4), column from bits (2,3); the selected entry as two
/// bits, most significant first.
BitVector sbox_lookup(const BitVector& nibble, const SBoxTable& table);

/// The keyed F map on a 4-bit half: E/P, XOR with the sub-key, S0 on the
/// left nibble and S1 on the right, then P4.
BitVector round_f(const BitVector& r, const BitVector& sub_key);

struct HalfPair {
  BitVector left;
  BitVector right;
  friend bool operator==(const HalfPair&, const HalfPair&) = default;
};

/// One Feistel round: (left XOR F(right, sub_key), right).
HalfPair fk(const BitVector& left, const BitVector& right, const BitVector& sub_key);

HalfPair switch_halves(const BitVector& left, const BitVector& right);

struct KeyPair {
  BitVector k1;
  BitVector k2;
  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

/// IP, round with K1, switch, round with K2, IP^-1.
BitVector encrypt_block(const BitVector& plain, const KeyPair& keys);

/// Same pipeline with the sub-keys in reverse order.
BitVector decrypt_block(const BitVector& cipher, const KeyPair& keys);

}  // namespace spikecipher::sdes
