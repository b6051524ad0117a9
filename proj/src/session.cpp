#include "spikecipher/session.hpp"

#include <algorithm>
#include <stdexcept>

#include "spikecipher/ecb.hpp"

namespace spikecipher::session {

namespace {

constexpr std::uint64_t kLcgMultiplier = 6364136223846793005ull;
constexpr std::uint64_t kLcgIncrement = 1442695040888963407ull;

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  throw std::invalid_argument("SessionMessage: invalid hex digit");
}

}  // namespace

BitVector SeedGenerator::next_seed(snn::Mode mode) {
  state_ = kLcgMultiplier * state_ + kLcgIncrement;
  const std::size_t bits = snn::seed_length(mode);
  return BitVector::from_uint(state_ >> (64 - bits), bits);
}

std::string serialize_message(const SessionMessage& message) {
  std::string out = message.public_seed.to_string();
  out.push_back('\n');
  for (const std::uint8_t byte : message.ciphertext) {
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0xF]);
  }
  out.push_back('\n');
  return out;
}

SessionMessage parse_message(std::string_view text) {
  const std::size_t newline = text.find('\n');
  if (newline == std::string_view::npos) {
    throw std::invalid_argument("SessionMessage: missing seed line");
  }
  SessionMessage message;
  message.public_seed = BitVector::from_string(text.substr(0, newline));
  std::string_view hex = text.substr(newline + 1);
  if (!hex.empty() && hex.back() == '\n') hex.remove_suffix(1);
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("SessionMessage: hex line must have even length");
  }
  message.ciphertext.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    message.ciphertext.push_back(
        static_cast<std::uint8_t>(hex_value(hex[i]) * 16 + hex_value(hex[i + 1])));
  }
  return message;
}

Endpoint::Endpoint(snn::NetworkConfig net) : net_(std::move(net)) {
  const snn::ValidationReport report = snn::validate_config(net_);
  if (!report.accepted) {
    throw std::invalid_argument("Endpoint: configuration rejected: " + report.reason);
  }
}

sdes::KeyPair Endpoint::derive(const BitVector& seed) const {
  return snn::derive_keys(seed, net_);
}

SessionMessage sender_encrypt(const Endpoint& endpoint,
                              std::span<const std::uint8_t> plaintext,
                              const BitVector& seed) {
  const sdes::KeyPair keys = endpoint.derive(seed);
  return SessionMessage{seed, ecb::encrypt_bytes(plaintext, keys)};
}

std::vector<std::uint8_t> receiver_decrypt(const Endpoint& endpoint,
                                           const SessionMessage& message) {
  const sdes::KeyPair keys = endpoint.derive(message.public_seed);
  return ecb::decrypt_bytes(message.ciphertext, keys);
}

struct SessionRunner {
  static SessionReport run(const snn::NetworkConfig& net,
                           std::span<const std::uint8_t> plaintext,
                           SeedGenerator& generator) {
    const Endpoint sender(net, Endpoint::Prevalidated{});
    const Endpoint receiver(net, Endpoint::Prevalidated{});
    const BitVector seed = generator.next_seed(net.mode);

    SessionReport report;
    report.message = sender_encrypt(sender, plaintext, seed);
    report.sender_keys = sender.derive(seed);
    report.receiver_keys = receiver.derive(report.message.public_seed);
    report.keys_agree = report.sender_keys == report.receiver_keys;
    report.recovered = receiver_decrypt(receiver, report.message);
    report.roundtrip_ok =
        report.recovered.size() == plaintext.size() &&
        std::equal(plaintext.begin(), plaintext.end(), report.recovered.begin());
    return report;
  }
};

SessionReport run_session(const snn::NetworkConfig& net,
                          std::span<const std::uint8_t> plaintext,
                          SeedGenerator& generator) {
  return SessionRunner::run(net, plaintext, generator);
}

}  // namespace spikecipher::session
