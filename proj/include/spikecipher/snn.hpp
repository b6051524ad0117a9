#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spikecipher/bitvector.hpp"
#include "spikecipher/sdes.hpp"

namespace spikecipher::snn {

/// Constants of one spiking neuron. The post-synaptic kernel is
/// exp(-t/tau1) - exp(-t/tau2) for t > 0; it is positive only when
/// tau1 > tau2 > 0.
struct NeuronConfig {
  double tau1 = 0.0;    // kernel decay constant, seconds
  double tau2 = 0.0;    // kernel rise constant, seconds
  double weight = 0.0;  // synaptic weight
  double period = 0.0;  // slot length T, seconds
  double theta = 0.0;   // firing threshold

  friend bool operator==(const NeuronConfig&, const NeuronConfig&) = default;
};

/// Throws std::invalid_argument unless tau1 > tau2 > 0, period > 0,
/// theta > 0 and weight != 0.
void validate_fields(const NeuronConfig& cfg);

enum class Mode { kSingle, kDual };

/// Seed word length admitted by a mode: 10 bits single, 16 bits dual.
std::size_t seed_length(Mode mode);

struct NetworkConfig {
  Mode mode = Mode::kSingle;
  NeuronConfig neuron1;
  std::optional<NeuronConfig> neuron2;  // present exactly in dual mode

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// Shipped single-neuron presets: tau1/tau2/weight/period of the two
/// published parameter sets, threshold 0.1.
NetworkConfig preset_proposal1();
NetworkConfig preset_proposal2();

/// Post-synaptic potential kernel; zero for t <= 0 (causal).
double psp(double t, const NeuronConfig& cfg);

/// Spike times for a seed word cycled with period L*T (L = seed length):
/// bit i = 1 emits spikes at (i-1 + m*L)*T for every m >= 0 with that time
/// strictly below the horizon. Ascending order. Requires
/// horizon >= L * cfg.period so every seed bit gets at least one slot.
std::vector<double> encode_seed(const BitVector& seed, const NeuronConfig& cfg,
                                double horizon);

/// Membrane potential: weight * sum of psp(t - t_i) over the spike times.
/// Does not depend on cfg.theta.
double membrane_potential(double t, std::span<const double> spike_times,
                          const NeuronConfig& cfg);

/// Samples the thresholded potential at mid-slot instants
/// s_k = (k-1)*T + T/2 for k = 1..n_out over the spike set encoded with
/// horizon n_out*T. Output bit k is 1 iff u(s_k) > theta. Closed form, no
/// integration.
BitVector sample_spike_train(const BitVector& seed, const NeuronConfig& cfg,
                             std::size_t n_out);

/// 10-bit seed, one neuron, one 16-sample train: K1 = bits 1..8,
/// K2 = bits 9..16.
sdes::KeyPair derive_keys_single(const BitVector& seed, const NeuronConfig& cfg);

/// 16-bit seed split in half, one 8-sample train per neuron.
sdes::KeyPair derive_keys_dual(const BitVector& seed, const NeuronConfig& cfg1,
                               const NeuronConfig& cfg2);

/// Dispatches on net.mode; the seed length must match the mode.
sdes::KeyPair derive_keys(const BitVector& seed, const NetworkConfig& net);

struct ValidationReport {
  bool accepted = false;
  double min_margin = 0.0;    // min |u(s_k) - theta| over the exhaustive scan
  bool all_zero_keys = false; // every admissible seed derives the zero key pair
  std::string reason;         // empty when accepted
};

/// Exhaustively evaluates the threshold margin over every admissible seed
/// (1024 seeds x 16 samples single, 256 half-seeds x 8 samples per neuron
/// dual). Rejects when the margin is below 1e-9 or when no seed ever sets a
/// key bit. Field errors throw std::invalid_argument.
ValidationReport validate_config(const NetworkConfig& net);

/// Minimum margin a configuration must keep between every sampled potential
/// and the threshold for the bit decisions to be reproducible in doubles.
inline constexpr double kMarginFloor = 1e-9;

/// 16-bit concatenated key (K1 << 8 | K2) for each of the 1024 single-mode
/// seeds, indexed by seed value.
std::array<std::uint16_t, 1024> single_mode_key_table(const NetworkConfig& net);

struct AffinityWitness {
  std::uint16_t s = 0;
  std::uint16_t t = 0;
  std::uint16_t u = 0;
};

/// Searches the 1024-seed single-mode domain for s, t, u with
/// key(s^t^u) != key(s)^key(t)^key(u) on the concatenated 16-bit keys.
/// Returns the lexicographically first witness, or nullopt when the seed-to-
/// key map is exactly affine. Deterministic.
std::optional<AffinityWitness> non_affinity_witness(const NetworkConfig& net);

}  // namespace spikecipher::snn
