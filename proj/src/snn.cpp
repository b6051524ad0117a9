#include "spikecipher/snn.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace spikecipher::snn {

void validate_fields(const NeuronConfig& cfg) {
  if (!(cfg.tau1 > 0.0) || !(cfg.tau2 > 0.0) || !(cfg.tau1 > cfg.tau2)) {
    throw std::invalid_argument("NeuronConfig: requires tau1 > tau2 > 0");
  }
  if (!(cfg.period > 0.0)) {
    throw std::invalid_argument("NeuronConfig: requires period T > 0");
  }
  if (!(cfg.theta > 0.0)) {
    throw std::invalid_argument("NeuronConfig: requires theta > 0");
  }
  if (cfg.weight == 0.0) {
    throw std::invalid_argument("NeuronConfig: requires weight != 0");
  }
}

std::size_t seed_length(Mode mode) {
  return mode == Mode::kSingle ? 10 : 16;
}

NetworkConfig preset_proposal1() {
  return NetworkConfig{Mode::kSingle, NeuronConfig{0.001, 0.0001, 0.5, 0.001, 0.1}, {}};
}

NetworkConfig preset_proposal2() {
  return NetworkConfig{Mode::kSingle, NeuronConfig{0.01, 0.0001, 0.2, 0.001, 0.1}, {}};
}

double psp(double t, const NeuronConfig& cfg) {
  if (t <= 0.0) return 0.0;
  return std::exp(-t / cfg.tau1) - std::exp(-t / cfg.tau2);
}

std::vector<double> encode_seed(const BitVector& seed, const NeuronConfig& cfg,
                                double horizon) {
  validate_fields(cfg);
  const std::size_t length = seed.size();
  if (length == 0) {
    throw std::invalid_argument("encode_seed: empty seed");
  }
  if (horizon < static_cast<double>(length) * cfg.period) {
    throw std::invalid_argument("encode_seed: horizon shorter than one seed cycle");
  }
  std::vector<double> times;
  for (std::size_t cycle = 0;; ++cycle) {
    const std::size_t base = cycle * length;
    if (static_cast<double>(base) * cfg.period >= horizon) break;
    for (std::size_t i = 0; i < length; ++i) {
      const double t = static_cast<double>(base + i) * cfg.period;
      if (seed.bit(i) == 1 && t < horizon) times.push_back(t);
    }
  }
  return times;
}

double membrane_potential(double t, std::span<const double> spike_times,
                          const NeuronConfig& cfg) {
  double u = 0.0;
  for (const double ti : spike_times) u += cfg.weight * psp(t - ti, cfg);
  return u;
}

BitVector sample_spike_train(const BitVector& seed, const NeuronConfig& cfg,
                             std::size_t n_out) {
  if (n_out == 0) {
    throw std::invalid_argument("sample_spike_train: n_out must be at least 1");
  }
  const double horizon = static_cast<double>(n_out) * cfg.period;
  const std::vector<double> spikes = encode_seed(seed, cfg, horizon);
  BitVector train(n_out);
  for (std::size_t k = 1; k <= n_out; ++k) {
    const double sample_at = (static_cast<double>(k) - 1.0) * cfg.period + cfg.period / 2.0;
    const double u = membrane_potential(sample_at, spikes, cfg);
    train.set_bit(k - 1, u > cfg.theta ? 1 : 0);
  }
  return train;
}

sdes::KeyPair derive_keys_single(const BitVector& seed, const NeuronConfig& cfg) {
  if (seed.size() != 10) {
    throw std::invalid_argument("derive_keys_single: seed must have 10 bits");
  }
  const BitVector train = sample_spike_train(seed, cfg, 16);
  return sdes::KeyPair{train.slice(0, 8), train.slice(8, 8)};
}

sdes::KeyPair derive_keys_dual(const BitVector& seed, const NeuronConfig& cfg1,
                               const NeuronConfig& cfg2) {
  if (seed.size() != 16) {
    throw std::invalid_argument("derive_keys_dual: seed must have 16 bits");
  }
  return sdes::KeyPair{sample_spike_train(seed.slice(0, 8), cfg1, 8),
                       sample_spike_train(seed.slice(8, 8), cfg2, 8)};
}

sdes::KeyPair derive_keys(const BitVector& seed, const NetworkConfig& net) {
  if (seed.size() != seed_length(net.mode)) {
    throw std::invalid_argument("derive_keys: seed length does not match mode");
  }
  if (net.mode == Mode::kSingle) {
    return derive_keys_single(seed, net.neuron1);
  }
  if (!net.neuron2.has_value()) {
    throw std::invalid_argument("derive_keys: dual mode requires a second neuron");
  }
  return derive_keys_dual(seed, net.neuron1, *net.neuron2);
}

namespace {

struct ScanResult {
  double min_margin = std::numeric_limits<double>::infinity();
  bool any_bit_set = false;
};

// Margin scan of one neuron over every seed word of the given length,
// sampling n_out slots per seed. Walks the exact derivation path so the
// reported margin applies to the potentials the key bits are decided on.
ScanResult scan_neuron(const NeuronConfig& cfg, std::size_t seed_bits,
                       std::size_t n_out) {
  const auto seed_count = static_cast<std::int64_t>(1) << seed_bits;
  double min_margin = std::numeric_limits<double>::infinity();
  bool any_bit_set = false;
#pragma omp parallel for reduction(min : min_margin) reduction(|| : any_bit_set)
  for (std::int64_t value = 0; value < seed_count; ++value) {
    const BitVector seed =
        BitVector::from_uint(static_cast<std::uint64_t>(value), seed_bits);
    const double horizon = static_cast<double>(n_out) * cfg.period;
    const std::vector<double> spikes = encode_seed(seed, cfg, horizon);
    for (std::size_t k = 1; k <= n_out; ++k) {
      const double sample_at =
          (static_cast<double>(k) - 1.0) * cfg.period + cfg.period / 2.0;
      const double u = membrane_potential(sample_at, spikes, cfg);
      const double margin = std::abs(u - cfg.theta);
      if (margin < min_margin) min_margin = margin;
      if (u > cfg.theta) any_bit_set = true;
    }
  }
  return ScanResult{min_margin, any_bit_set};
}

}  // namespace

ValidationReport validate_config(const NetworkConfig& net) {
  validate_fields(net.neuron1);
  if (net.mode == Mode::kDual) {
    if (!net.neuron2.has_value()) {
      throw std::invalid_argument("NetworkConfig: dual mode requires two neurons");
    }
    validate_fields(*net.neuron2);
  } else if (net.neuron2.has_value()) {
    throw std::invalid_argument("NetworkConfig: single mode admits exactly one neuron");
  }

  ScanResult scan;
  if (net.mode == Mode::kSingle) {
    scan = scan_neuron(net.neuron1, 10, 16);
  } else {
    const ScanResult first = scan_neuron(net.neuron1, 8, 8);
    const ScanResult second = scan_neuron(*net.neuron2, 8, 8);
    scan.min_margin = std::min(first.min_margin, second.min_margin);
    scan.any_bit_set = first.any_bit_set || second.any_bit_set;
  }

  ValidationReport report;
  report.min_margin = scan.min_margin;
  report.all_zero_keys = !scan.any_bit_set;
  if (report.all_zero_keys) {
    report.accepted = false;
    report.reason = "every seed derives the all-zero key pair";
  } else if (!(scan.min_margin >= kMarginFloor)) {
    report.accepted = false;
    report.reason = "threshold margin below 1e-9; bit decisions not reproducible";
  } else {
    report.accepted = true;
  }
  return report;
}

std::array<std::uint16_t, 1024> single_mode_key_table(const NetworkConfig& net) {
  if (net.mode != Mode::kSingle) {
    throw std::invalid_argument("single_mode_key_table: requires single mode");
  }
  std::array<std::uint16_t, 1024> table{};
#pragma omp parallel for
  for (std::int64_t value = 0; value < 1024; ++value) {
    const sdes::KeyPair keys = derive_keys_single(
        BitVector::from_uint(static_cast<std::uint64_t>(value), 10), net.neuron1);
    table[value] = static_cast<std::uint16_t>((keys.k1.to_byte() << 8) | keys.k2.to_byte());
  }
  return table;
}

std::optional<AffinityWitness> non_affinity_witness(const NetworkConfig& net) {
  const std::array<std::uint16_t, 1024> key = single_mode_key_table(net);
  // Lexicographic scan over (s, t, u). For each s the t-loop is parallel;
  // reducing to the smallest packed (t, u) index keeps the result identical
  // to the serial scan.
  for (std::int64_t s = 0; s < 1024; ++s) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(min : best)
    for (std::int64_t t = 0; t < 1024; ++t) {
      for (std::int64_t u = 0; u < 1024; ++u) {
        if (key[s ^ t ^ u] != (key[s] ^ key[t] ^ key[u])) {
          const std::int64_t packed = (t << 10) | u;
          if (packed < best) best = packed;
          break;  // first u is the smallest for this t
        }
      }
    }
    if (best != std::numeric_limits<std::int64_t>::max()) {
      return AffinityWitness{static_cast<std::uint16_t>(s),
                             static_cast<std::uint16_t>(best >> 10),
                             static_cast<std::uint16_t>(best & 1023)};
    }
  }
  return std::nullopt;
}

}  // namespace spikecipher::snn
