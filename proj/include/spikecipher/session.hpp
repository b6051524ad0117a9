#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spikecipher/bitvector.hpp"
#include "spikecipher/sdes.hpp"
#include "spikecipher/snn.hpp"

namespace spikecipher::session {

/// Deterministic public-seed source: a 64-bit linear congruential step,
/// state' = 6364136223846793005 * state + 1442695040888963407 (mod 2^64).
/// Each draw returns the top 10 (single) or 16 (dual) bits of the new state,
/// most significant first. Single-owner mutable state.
class SeedGenerator {
 public:
  explicit SeedGenerator(std::uint64_t state) : state_(state) {}

  BitVector next_seed(snn::Mode mode);
  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// What crosses the channel: the public seed and the ciphertext. The private
/// network configuration never enters this type.
struct SessionMessage {
  BitVector public_seed;
  std::vector<std::uint8_t> ciphertext;

  friend bool operator==(const SessionMessage&, const SessionMessage&) = default;
};

/// Wire text: seed as '0'/'1' characters, newline, ciphertext as lowercase
/// hex, newline.
std::string serialize_message(const SessionMessage& message);
SessionMessage parse_message(std::string_view text);

/// One side of the channel, holding the pre-shared private network
/// configuration. Construction runs the exhaustive configuration validation
/// and throws std::invalid_argument when it rejects.
class Endpoint {
 public:
  explicit Endpoint(snn::NetworkConfig net);

  const snn::NetworkConfig& network() const { return net_; }
  sdes::KeyPair derive(const BitVector& seed) const;

 private:
  struct Prevalidated {};
  Endpoint(snn::NetworkConfig net, Prevalidated) : net_(std::move(net)) {}

  snn::NetworkConfig net_;

  friend struct SessionRunner;
};

/// Derives the key pair from the seed and encrypts one byte per block.
SessionMessage sender_encrypt(const Endpoint& endpoint,
                              std::span<const std::uint8_t> plaintext,
                              const BitVector& seed);

/// Derives the key pair from the message's public seed and decrypts.
std::vector<std::uint8_t> receiver_decrypt(const Endpoint& endpoint,
                                           const SessionMessage& message);

struct SessionReport {
  SessionMessage message;
  sdes::KeyPair sender_keys;
  sdes::KeyPair receiver_keys;
  bool keys_agree = false;
  bool roundtrip_ok = false;
  std::vector<std::uint8_t> recovered;
};

/// Builds two independent endpoints from the same configuration, draws one
/// seed, encrypts at the first and decrypts at the second. Requires a
/// configuration that passes validate_config (the caller's obligation; the
/// exhaustive scan is not repeated here).
SessionReport run_session(const snn::NetworkConfig& net,
                          std::span<const std::uint8_t> plaintext,
                          SeedGenerator& generator);

}  // namespace spikecipher::session
