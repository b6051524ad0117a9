#include "spikecipher/sdes.hpp"

#include <stdexcept>

#include "spikecipher/sdes_tables.hpp"

namespace spikecipher::sdes {

namespace {

PermutationSpec make_spec(const int* first, const int* last, int input_len) {
  return PermutationSpec{std::vector<int>(first, last), input_len};
}

void check_length(const BitVector& v, std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": wrong bit length");
  }
}

}  // namespace

const PermutationSpec& initial_permutation() {
  static const PermutationSpec spec =
      make_spec(tables::kIp.begin(), tables::kIp.end(), 8);
  return spec;
}

const PermutationSpec& inverse_initial_permutation() {
  static const PermutationSpec spec =
      make_spec(tables::kIpInverse.begin(), tables::kIpInverse.end(), 8);
  return spec;
}

const PermutationSpec& expansion_permutation() {
  static const PermutationSpec spec =
      make_spec(tables::kExpansion.begin(), tables::kExpansion.end(), 4);
  return spec;
}

const PermutationSpec& p4_permutation() {
  static const PermutationSpec spec =
      make_spec(tables::kP4.begin(), tables::kP4.end(), 4);
  return spec;
}

const SBoxTable& sbox0() { return tables::kS0; }
const SBoxTable& sbox1() { return tables::kS1; }

BitVector permute(const BitVector& input, const PermutationSpec& spec) {
  if (static_cast<int>(input.size()) != spec.input_len) {
    throw std::invalid_argument("permute: input length does not match spec");
  }
  BitVector out(spec.sources.size());
  for (std::size_t i = 0; i < spec.sources.size(); ++i) {
    const int src = spec.sources[i];
    if (src < 1 || src > spec.input_len) {
      throw std::invalid_argument("permute: source position out of range");
    }
    out.set_bit(i, input.bit(static_cast<std::size_t>(src - 1)));
  }
  return out;
}

PermutationSpec invert_spec(const PermutationSpec& spec) {
  const std::size_t n = spec.sources.size();
  if (static_cast<int>(n) != spec.input_len) {
    throw std::invalid_argument("invert_spec: spec is not a bijection");
  }
  std::vector<int> inverse(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int src = spec.sources[i];
    if (src < 1 || src > spec.input_len || inverse[src - 1] != 0) {
      throw std::invalid_argument("invert_spec: spec is not a bijection");
    }
    inverse[src - 1] = static_cast<int>(i) + 1;
  }
  return PermutationSpec{std::move(inverse), spec.input_len};
}

BitVector expand_permute(const BitVector& r) {
  check_length(r, 4, "expand_permute");
  return permute(r, expansion_permutation());
}

BitVector sbox_lookup(const BitVector& nibble, const SBoxTable& table) {
  check_length(nibble, 4, "sbox_lookup");
  const int row = nibble.bit(0) * 2 + nibble.bit(3);
  const int col = nibble.bit(1) * 2 + nibble.bit(2);
  const std::uint8_t entry = table[row][col];
  BitVector out(2);
  out.set_bit(0, (entry >> 1) & 1);
  out.set_bit(1, entry & 1);
  return out;
}

BitVector round_f(const BitVector& r, const BitVector& sub_key) {
  check_length(r, 4, "round_f");
  check_length(sub_key, 8, "round_f sub-key");
  const BitVector mixed = expand_permute(r) ^ sub_key;
  const BitVector s =
      sbox_lookup(mixed.slice(0, 4), sbox0()).concat(sbox_lookup(mixed.slice(4, 4), sbox1()));
  return permute(s, p4_permutation());
}

HalfPair fk(const BitVector& left, const BitVector& right, const BitVector& sub_key) {
  check_length(left, 4, "fk left");
  check_length(right, 4, "fk right");
  return HalfPair{left ^ round_f(right, sub_key), right};
}

HalfPair switch_halves(const BitVector& left, const BitVector& right) {
  check_length(left, 4, "switch_halves left");
  check_length(right, 4, "switch_halves right");
  return HalfPair{right, left};
}

namespace {

BitVector run_rounds(const BitVector& block, const BitVector& first_key,
                     const BitVector& second_key) {
  check_length(block, 8, "block");
  const BitVector permuted = permute(block, initial_permutation());
  HalfPair halves{permuted.slice(0, 4), permuted.slice(4, 4)};
  halves = fk(halves.left, halves.right, first_key);
  halves = switch_halves(halves.left, halves.right);
  halves = fk(halves.left, halves.right, second_key);
  // No switch after the final round.
  return permute(halves.left.concat(halves.right), inverse_initial_permutation());
}

}  // namespace

BitVector encrypt_block(const BitVector& plain, const KeyPair& keys) {
  check_length(keys.k1, 8, "k1");
  check_length(keys.k2, 8, "k2");
  return run_rounds(plain, keys.k1, keys.k2);
}

BitVector decrypt_block(const BitVector& cipher, const KeyPair& keys) {
  check_length(keys.k1, 8, "k1");
  check_length(keys.k2, 8, "k2");
  return run_rounds(cipher, keys.k2, keys.k1);
}

}  // namespace spikecipher::sdes
