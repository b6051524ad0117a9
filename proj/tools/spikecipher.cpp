// Command-line front end: key derivation, file encryption/decryption,
// configuration validation and the two-endpoint session demonstration.
//
// Exit statuses: 0 success, 1 usage error, 2 validation/config error,
// 3 I/O error. Every non-zero status prints a single diagnostic line on
// stderr. Output files are written to a temporary and renamed on success,
// so a failing run never leaves a partial file behind.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spikecipher/bitvector.hpp"
#include "spikecipher/config.hpp"
#include "spikecipher/ecb.hpp"
#include "spikecipher/sdes.hpp"
#include "spikecipher/session.hpp"
#include "spikecipher/snn.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kConfig = 2;
constexpr int kIo = 3;

struct CommandError : std::runtime_error {
  CommandError(int status_in, const std::string& what_in)
      : std::runtime_error(what_in), status(status_in) {}
  int status;
};

spikecipher::snn::NetworkConfig load_config(const std::string& path) {
  try {
    return spikecipher::config::load(path);
  } catch (const spikecipher::config::IoError& error) {
    throw CommandError(kIo, error.what());
  } catch (const spikecipher::config::ConfigError& error) {
    throw CommandError(kConfig, error.what());
  }
}

spikecipher::snn::NetworkConfig load_validated_config(const std::string& path) {
  spikecipher::snn::NetworkConfig net = load_config(path);
  const auto report = spikecipher::snn::validate_config(net);
  if (!report.accepted) {
    throw CommandError(kConfig, "configuration rejected: " + report.reason);
  }
  return net;
}

spikecipher::BitVector parse_seed(const std::string& text, spikecipher::snn::Mode mode) {
  spikecipher::BitVector seed;
  try {
    seed = spikecipher::BitVector::from_string(text);
  } catch (const std::invalid_argument&) {
    throw CommandError(kUsage, "seed must be '0'/'1' characters");
  }
  const std::size_t want = spikecipher::snn::seed_length(mode);
  if (seed.size() != want) {
    throw CommandError(kUsage, "seed must be " + std::to_string(want) +
                                   " bits for this mode, got " +
                                   std::to_string(seed.size()));
  }
  return seed;
}

spikecipher::BitVector parse_key(const std::string& text, const char* name) {
  spikecipher::BitVector key;
  try {
    key = spikecipher::BitVector::from_string(text);
  } catch (const std::invalid_argument&) {
    throw CommandError(kUsage, std::string(name) + " must be '0'/'1' characters");
  }
  if (key.size() != 8) {
    throw CommandError(kUsage, std::string(name) + " must be exactly 8 bits");
  }
  return key;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(kIo, "cannot read " + path);
  std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in),
                                 std::istreambuf_iterator<char>()};
  if (in.bad()) throw CommandError(kIo, "read failed on " + path);
  return data;
}

void write_file_atomic(const std::string& path, std::span<const std::uint8_t> data) {
  std::filesystem::path target(path);
  std::filesystem::path temp(target);
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (out && !data.empty()) {
      out.write(reinterpret_cast<const char*>(data.data()),
                static_cast<std::streamsize>(data.size()));
    }
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw CommandError(kIo, "cannot write " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(temp, ignored);
    throw CommandError(kIo, "cannot rename " + temp.string() + " to " + path);
  }
}

int cmd_keygen(const std::string& config_path, const std::string& seed_text) {
  const auto net = load_validated_config(config_path);
  const auto seed = parse_seed(seed_text, net.mode);
  const auto keys = spikecipher::snn::derive_keys(seed, net);
  std::cout << "K1 = " << keys.k1.to_string() << '\n'
            << "K2 = " << keys.k2.to_string() << '\n';
  return kOk;
}

int cmd_crypt(const std::string& config_path, const std::string& seed_text,
              const std::string& in_path, const std::string& out_path, bool encrypt) {
  const auto net = load_validated_config(config_path);
  const auto seed = parse_seed(seed_text, net.mode);
  const auto keys = spikecipher::snn::derive_keys(seed, net);
  const auto input = read_file(in_path);
  const auto output = encrypt ? spikecipher::ecb::encrypt_bytes(input, keys)
                              : spikecipher::ecb::decrypt_bytes(input, keys);
  write_file_atomic(out_path, output);
  return kOk;
}

int cmd_keys_direct(const std::string& k1_text, const std::string& k2_text,
                    const std::string& direction, const std::string& in_path,
                    const std::string& out_path) {
  const spikecipher::sdes::KeyPair keys{parse_key(k1_text, "--k1"),
                                        parse_key(k2_text, "--k2")};
  const auto input = read_file(in_path);
  const auto output = direction == "encrypt"
                          ? spikecipher::ecb::encrypt_bytes(input, keys)
                          : spikecipher::ecb::decrypt_bytes(input, keys);
  write_file_atomic(out_path, output);
  return kOk;
}

int cmd_validate(const std::string& config_path) {
  const auto net = load_config(config_path);
  const auto report = spikecipher::snn::validate_config(net);
  std::ostringstream margin;
  margin << std::scientific << std::setprecision(12) << report.min_margin;
  std::cout << "margin = " << margin.str() << '\n';
  if (!report.accepted) {
    std::cout << "verdict: rejected (" << report.reason << ")\n";
    std::cerr << "spikecipher: configuration rejected: " << report.reason << '\n';
    return kConfig;
  }
  std::cout << "verdict: accepted\n";
  return kOk;
}

int cmd_session_demo(const std::string& config_path, const std::string& message,
                     std::uint64_t rng_state) {
  const auto net = load_validated_config(config_path);
  const std::vector<std::uint8_t> plaintext(message.begin(), message.end());
  spikecipher::session::SeedGenerator generator(rng_state);
  const auto report = spikecipher::session::run_session(net, plaintext, generator);

  std::cout << spikecipher::session::serialize_message(report.message);
  std::cout << "sender K1 = " << report.sender_keys.k1.to_string() << '\n'
            << "sender K2 = " << report.sender_keys.k2.to_string() << '\n'
            << "receiver K1 = " << report.receiver_keys.k1.to_string() << '\n'
            << "receiver K2 = " << report.receiver_keys.k2.to_string() << '\n'
            << "agreement = " << (report.keys_agree ? "true" : "false") << '\n';
  std::cout << "recovered = ";
  std::cout.write(reinterpret_cast<const char*>(report.recovered.data()),
                  static_cast<std::streamsize>(report.recovered.size()));
  std::cout << '\n';
  return report.keys_agree && report.roundtrip_ok ? kOk : kConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-DES with round keys derived from a shared spiking-neuron "
               "configuration"};
  app.require_subcommand(1);

  std::string config_path, seed_text, k1_text, k2_text, in_path, out_path;
  std::string message, direction;
  std::uint64_t rng_state = 0;

  auto* keygen = app.add_subcommand("keygen", "Derive K1/K2 from a public seed");
  keygen->add_option("--config", config_path, "network configuration file")->required();
  keygen->add_option("--seed", seed_text, "public seed as '0'/'1' characters")->required();

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file under a derived key pair");
  encrypt->add_option("--config", config_path, "network configuration file")->required();
  encrypt->add_option("--seed", seed_text, "public seed as '0'/'1' characters")->required();
  encrypt->add_option("--in", in_path, "plaintext input file")->required();
  encrypt->add_option("--out", out_path, "ciphertext output file")->required();

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a file under a derived key pair");
  decrypt->add_option("--config", config_path, "network configuration file")->required();
  decrypt->add_option("--seed", seed_text, "public seed as '0'/'1' characters")->required();
  decrypt->add_option("--in", in_path, "ciphertext input file")->required();
  decrypt->add_option("--out", out_path, "plaintext output file")->required();

  auto* direct = app.add_subcommand("keys-direct", "Run the block pipeline with explicit keys");
  direct->add_option("direction", direction, "encrypt or decrypt")
      ->required()
      ->check(CLI::IsMember({"encrypt", "decrypt"}));
  direct->add_option("--k1", k1_text, "first round key, 8 bits")->required();
  direct->add_option("--k2", k2_text, "second round key, 8 bits")->required();
  direct->add_option("--in", in_path, "input file")->required();
  direct->add_option("--out", out_path, "output file")->required();

  auto* validate = app.add_subcommand("validate", "Run the exhaustive configuration check");
  validate->add_option("--config", config_path, "network configuration file")->required();

  auto* demo = app.add_subcommand("session-demo", "Demonstrate two-endpoint key agreement");
  demo->add_option("--config", config_path, "network configuration file")->required();
  demo->add_option("--message", message, "plaintext message")->required();
  demo->add_option("--rng-state", rng_state, "seed-generator start state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(keygen)) return cmd_keygen(config_path, seed_text);
    if (app.got_subcommand(encrypt)) {
      return cmd_crypt(config_path, seed_text, in_path, out_path, /*encrypt=*/true);
    }
    if (app.got_subcommand(decrypt)) {
      return cmd_crypt(config_path, seed_text, in_path, out_path, /*encrypt=*/false);
    }
    if (app.got_subcommand(direct)) {
      return cmd_keys_direct(k1_text, k2_text, direction, in_path, out_path);
    }
    if (app.got_subcommand(validate)) return cmd_validate(config_path);
    if (app.got_subcommand(demo)) return cmd_session_demo(config_path, message, rng_state);
  } catch (const CommandError& error) {
    std::cerr << "spikecipher: " << error.what() << '\n';
    return error.status;
  } catch (const std::exception& error) {
    std::cerr << "spikecipher: " << error.what() << '\n';
    return kConfig;
  }
  return kUsage;
}
