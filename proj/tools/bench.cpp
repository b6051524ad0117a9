// Times the ECB kernels (bit-level serial reference vs table-driven serial
// vs table-driven OpenMP) and the exhaustive key-derivation scans at one
// thread vs all threads. The reference path is measured on a capped slice;
// throughput in MiB/s is size-independent.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "spikecipher/ecb.hpp"
#include "spikecipher/sdes.hpp"
#include "spikecipher/snn.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double seconds(F&& body) {
  const auto start = Clock::now();
  body();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double best_of(int repeats, F&& body) {
  double best = seconds(body);
  for (int i = 1; i < repeats; ++i) best = std::min(best, seconds(body));
  return best;
}

double mib_per_s(std::size_t bytes, double secs) {
  return static_cast<double>(bytes) / (1024.0 * 1024.0) / secs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spikecipher kernel benchmark"};
  double mib = 8.0;
  int repeats = 3;
  app.add_option("--mib", mib, "buffer size in MiB for the table-driven paths");
  app.add_option("--repeat", repeats, "repetitions; the best time wins");
  CLI11_PARSE(app, argc, argv);

  const std::size_t bytes = static_cast<std::size_t>(mib * 1024.0 * 1024.0);
  const std::size_t reference_bytes = std::min<std::size_t>(bytes, 256 * 1024);
  const int max_threads = omp_get_max_threads();

  std::mt19937 rng(12345);
  std::vector<std::uint8_t> plain(bytes);
  for (auto& b : plain) b = static_cast<std::uint8_t>(rng() & 0xFF);
  const spikecipher::sdes::KeyPair keys{spikecipher::BitVector::from_byte(0x6f),
                                        spikecipher::BitVector::from_byte(0xdb)};

  const std::span<const std::uint8_t> ref_slice(plain.data(), reference_bytes);
  std::vector<std::uint8_t> ref_out, serial_out, parallel_out;

  const double t_reference = best_of(repeats, [&] {
    ref_out = spikecipher::ecb::encrypt_bytes_serial(ref_slice, keys);
  });

  omp_set_num_threads(1);
  const double t_serial = best_of(repeats, [&] {
    serial_out = spikecipher::ecb::encrypt_bytes(plain, keys);
  });

  omp_set_num_threads(max_threads);
  const double t_parallel = best_of(repeats, [&] {
    parallel_out = spikecipher::ecb::encrypt_bytes(plain, keys);
  });

  bool ok = parallel_out == serial_out;
  for (std::size_t i = 0; ok && i < ref_out.size(); ++i) ok = ref_out[i] == serial_out[i];

  std::printf("ECB encrypt (best of %d)\n", repeats);
  std::printf("  bit-level serial reference  %9.2f MiB/s  (%zu KiB slice)\n",
              mib_per_s(reference_bytes, t_reference), reference_bytes / 1024);
  std::printf("  table-driven, 1 thread      %9.2f MiB/s  (%.1f MiB)\n",
              mib_per_s(bytes, t_serial), mib);
  std::printf("  table-driven, %2d threads    %9.2f MiB/s  (%.1f MiB)\n", max_threads,
              mib_per_s(bytes, t_parallel), mib);
  std::printf("  outputs agree: %s\n", ok ? "yes" : "NO");

  std::printf("single-mode scans, 1024 seeds (best of %d)\n", repeats);
  const auto net = spikecipher::snn::preset_proposal1();
  for (const auto& [label, body] :
       {std::pair<const char*, void (*)(const spikecipher::snn::NetworkConfig&)>{
            "key table     ",
            [](const spikecipher::snn::NetworkConfig& n) {
              volatile auto sink = spikecipher::snn::single_mode_key_table(n)[0];
              (void)sink;
            }},
        {"validate      ",
         [](const spikecipher::snn::NetworkConfig& n) {
           volatile bool sink = spikecipher::snn::validate_config(n).accepted;
           (void)sink;
         }},
        {"non-affinity  ",
         [](const spikecipher::snn::NetworkConfig& n) {
           volatile bool sink = spikecipher::snn::non_affinity_witness(n).has_value();
           (void)sink;
         }}}) {
    omp_set_num_threads(1);
    const double t1 = best_of(repeats, [&] { body(net); });
    omp_set_num_threads(max_threads);
    const double tn = best_of(repeats, [&] { body(net); });
    std::printf("  %s 1 thread %8.2f ms | %2d threads %8.2f ms\n", label, t1 * 1e3,
                max_threads, tn * 1e3);
  }

  return ok ? 0 : 1;
}
