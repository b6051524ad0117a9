#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace testoracle {

namespace {

const int kIp[8] = {2, 6, 3, 1, 4, 8, 5, 7};
const int kIpInv[8] = {4, 1, 3, 5, 7, 2, 8, 6};
const int kEp[8] = {4, 1, 2, 3, 2, 3, 4, 1};
const int kP4[4] = {2, 4, 3, 1};

const int kS0[4][4] = {{0, 1, 2, 3}, {3, 0, 2, 1}, {1, 3, 0, 2}, {3, 2, 1, 1}};
const int kS1[4][4] = {{0, 2, 1, 3}, {2, 3, 1, 0}, {2, 1, 0, 3}, {0, 2, 3, 1}};

std::vector<int> apply(const std::vector<int>& in, const int* table, int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = in.at(table[i] - 1);
  return out;
}

std::vector<int> xor_bits(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::logic_error("oracle: xor length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

std::vector<int> sbox(const std::vector<int>& nib, const int table[4][4]) {
  const int row = nib.at(0) * 2 + nib.at(3);
  const int col = nib.at(1) * 2 + nib.at(2);
  const int v = table[row][col];
  return {(v >> 1) & 1, v & 1};
}

}  // namespace

std::vector<int> byte_to_bits(std::uint8_t value) {
  std::vector<int> out(8);
  for (int i = 0; i < 8; ++i) out[i] = (value >> (7 - i)) & 1;
  return out;
}

std::uint8_t bits_to_byte(const std::vector<int>& bits) {
  int v = 0;
  for (const int b : bits) v = (v << 1) | b;
  return static_cast<std::uint8_t>(v);
}

std::vector<int> round_f(const std::vector<int>& r, const std::vector<int>& sk) {
  const std::vector<int> mixed = xor_bits(apply(r, kEp, 8), sk);
  std::vector<int> s = sbox({mixed[0], mixed[1], mixed[2], mixed[3]}, kS0);
  const std::vector<int> s1 = sbox({mixed[4], mixed[5], mixed[6], mixed[7]}, kS1);
  s.insert(s.end(), s1.begin(), s1.end());
  return apply(s, kP4, 4);
}

std::vector<int> encrypt_bits(const std::vector<int>& plain, const std::vector<int>& k1,
                              const std::vector<int>& k2) {
  const std::vector<int> x = apply(plain, kIp, 8);
  std::vector<int> left(x.begin(), x.begin() + 4);
  std::vector<int> right(x.begin() + 4, x.end());

  left = xor_bits(left, round_f(right, k1));
  std::swap(left, right);
  left = xor_bits(left, round_f(right, k2));

  std::vector<int> joined = left;
  joined.insert(joined.end(), right.begin(), right.end());
  return apply(joined, kIpInv, 8);
}

std::uint8_t encrypt_byte(std::uint8_t plain, std::uint8_t k1, std::uint8_t k2) {
  return bits_to_byte(encrypt_bits(byte_to_bits(plain), byte_to_bits(k1), byte_to_bits(k2)));
}

std::uint8_t decrypt_byte(std::uint8_t cipher, std::uint8_t k1, std::uint8_t k2) {
  return bits_to_byte(encrypt_bits(byte_to_bits(cipher), byte_to_bits(k2), byte_to_bits(k1)));
}

double membrane(double t, const std::vector<double>& spikes, const NeuronParams& p) {
  double u = 0.0;
  for (const double ti : spikes) {
    const double dt = t - ti;
    if (dt > 0.0) u += p.weight * (std::exp(-dt / p.tau1) - std::exp(-dt / p.tau2));
  }
  return u;
}

std::vector<double> seed_spikes(const std::vector<int>& seed, double period, double horizon) {
  std::vector<double> times;
  const int length = static_cast<int>(seed.size());
  for (int m = 0;; ++m) {
    if (static_cast<double>(m) * length * period >= horizon) break;
    for (int i = 0; i < length; ++i) {
      const double t = static_cast<double>(i + m * length) * period;
      if (seed[i] == 1 && t < horizon) times.push_back(t);
    }
  }
  return times;
}

std::vector<int> sample_train(const std::vector<int>& seed, const NeuronParams& p, int n_out) {
  const std::vector<double> spikes =
      seed_spikes(seed, p.period, static_cast<double>(n_out) * p.period);
  std::vector<int> out(n_out);
  for (int k = 1; k <= n_out; ++k) {
    const double u = membrane((k - 1) * p.period + p.period / 2.0, spikes, p);
    out[k - 1] = u > p.theta ? 1 : 0;
  }
  return out;
}

double min_margin(const NeuronParams& p, int seed_bits, int n_out) {
  double best = 1e300;
  for (int value = 0; value < (1 << seed_bits); ++value) {
    std::vector<int> seed(seed_bits);
    for (int i = 0; i < seed_bits; ++i) seed[i] = (value >> (seed_bits - 1 - i)) & 1;
    const std::vector<double> spikes =
        seed_spikes(seed, p.period, static_cast<double>(n_out) * p.period);
    for (int k = 1; k <= n_out; ++k) {
      const double u = membrane((k - 1) * p.period + p.period / 2.0, spikes, p);
      const double margin = std::abs(u - p.theta);
      if (margin < best) best = margin;
    }
  }
  return best;
}

}  // namespace testoracle
