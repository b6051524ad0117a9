#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spikecipher/snn.hpp"

namespace spikecipher::config {

/// Malformed or inconsistent configuration contents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the flat `key = value` format: one pair per line, `#` starts a
/// comment, values are decimal numbers except `mode = single|dual`. Dual
/// mode adds the second neuron under `n2.`-prefixed keys. Field-level
/// consistency (tau ordering and positivity) is checked here; the exhaustive
/// threshold scan is not.
snn::NetworkConfig parse(std::string_view text);

/// parse() over the file contents; throws IoError when unreadable.
snn::NetworkConfig load(const std::filesystem::path& path);

/// Canonical text form; parse(serialize(net)) == net.
std::string serialize(const snn::NetworkConfig& net);

}  // namespace spikecipher::config
