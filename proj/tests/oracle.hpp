#pragma once

// Independent straight-line reference used by the tests. Deliberately shares
// no code or tables with the library: bit strings are plain int vectors, the
// tables are transcribed separately, and every step is written out directly.
// Anything this header computes counts as a second, independent route.

#include <cstdint>
#include <vector>

namespace testoracle {

struct NeuronParams {
  double tau1;
  double tau2;
  double weight;
  double period;
  double theta;
};

// S-DES, one byte per block, bit 0 of the vector = most significant.
std::vector<int> byte_to_bits(std::uint8_t value);
std::uint8_t bits_to_byte(const std::vector<int>& bits);
std::vector<int> round_f(const std::vector<int>& r, const std::vector<int>& sk);
std::vector<int> encrypt_bits(const std::vector<int>& plain, const std::vector<int>& k1,
                              const std::vector<int>& k2);
std::uint8_t encrypt_byte(std::uint8_t plain, std::uint8_t k1, std::uint8_t k2);
std::uint8_t decrypt_byte(std::uint8_t cipher, std::uint8_t k1, std::uint8_t k2);

// Spiking neuron: direct formula evaluation.
double membrane(double t, const std::vector<double>& spikes, const NeuronParams& p);
std::vector<double> seed_spikes(const std::vector<int>& seed, double period, double horizon);
std::vector<int> sample_train(const std::vector<int>& seed, const NeuronParams& p, int n_out);

// Minimum |u - theta| over every seed of the given width, sampling n_out
// slots per seed.
double min_margin(const NeuronParams& p, int seed_bits, int n_out);

}  // namespace testoracle
