#include "spikecipher/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace spikecipher::config {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* begin = value.data();
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("config: value of '" + std::string(key) + "' is not a decimal number");
  }
  return out;
}

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

class KeyMap {
 public:
  void insert(std::string_view key, std::string_view value) {
    if (!entries_.emplace(std::string(key), std::string(value)).second) {
      throw ConfigError("config: duplicate key '" + std::string(key) + "'");
    }
  }

  std::string take(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ConfigError("config: missing required key '" + key + "'");
    }
    std::string value = it->second;
    entries_.erase(it);
    return value;
  }

  void expect_empty() const {
    if (!entries_.empty()) {
      throw ConfigError("config: unknown key '" + entries_.begin()->first + "'");
    }
  }

 private:
  std::map<std::string, std::string> entries_;
};

snn::NeuronConfig take_neuron(KeyMap& keys, const std::string& prefix) {
  snn::NeuronConfig cfg;
  cfg.tau1 = parse_number(prefix + "tau1", keys.take(prefix + "tau1"));
  cfg.tau2 = parse_number(prefix + "tau2", keys.take(prefix + "tau2"));
  cfg.weight = parse_number(prefix + "weight", keys.take(prefix + "weight"));
  cfg.period = parse_number(prefix + "T", keys.take(prefix + "T"));
  cfg.theta = parse_number(prefix + "theta", keys.take(prefix + "theta"));
  return cfg;
}

void append_neuron(std::string& out, const snn::NeuronConfig& cfg,
                   const std::string& prefix) {
  out += prefix + "tau1 = " + format_number(cfg.tau1) + "\n";
  out += prefix + "tau2 = " + format_number(cfg.tau2) + "\n";
  out += prefix + "weight = " + format_number(cfg.weight) + "\n";
  out += prefix + "T = " + format_number(cfg.period) + "\n";
  out += prefix + "theta = " + format_number(cfg.theta) + "\n";
}

}  // namespace

snn::NetworkConfig parse(std::string_view text) {
  KeyMap keys;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    const std::size_t line_end = std::min(text.find('\n', line_start), text.size());
    std::string_view line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;

    const std::size_t comment = line.find('#');
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t equals = line.find('=');
    if (equals == std::string_view::npos) {
      throw ConfigError("config: expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, equals));
    const std::string_view value = trim(line.substr(equals + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config: empty key or value");
    }
    keys.insert(key, value);
  }

  const std::string mode_value = keys.take("mode");
  snn::NetworkConfig net;
  if (mode_value == "single") {
    net.mode = snn::Mode::kSingle;
  } else if (mode_value == "dual") {
    net.mode = snn::Mode::kDual;
  } else {
    throw ConfigError("config: mode must be 'single' or 'dual'");
  }

  net.neuron1 = take_neuron(keys, "");
  if (net.mode == snn::Mode::kDual) {
    net.neuron2 = take_neuron(keys, "n2.");
  }
  keys.expect_empty();

  try {
    snn::validate_fields(net.neuron1);
    if (net.neuron2.has_value()) snn::validate_fields(*net.neuron2);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return net;
}

snn::NetworkConfig load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file: " + path.string());
  }
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read config file: " + path.string());
  }
  return parse(contents.str());
}

std::string serialize(const snn::NetworkConfig& net) {
  std::string out;
  out += net.mode == snn::Mode::kSingle ? "mode = single\n" : "mode = dual\n";
  append_neuron(out, net.neuron1, "");
  if (net.neuron2.has_value()) append_neuron(out, *net.neuron2, "n2.");
  return out;
}

}  // namespace spikecipher::config
