#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spikecipher/ecb.hpp"
#include "spikecipher/session.hpp"
#include "spikecipher/snn.hpp"

using spikecipher::BitVector;
namespace session = spikecipher::session;
namespace snn = spikecipher::snn;
namespace ecb = spikecipher::ecb;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& text) {
  return std::vector<std::uint8_t>(text.begin(), text.end());
}

std::string hex_of(const std::vector<std::uint8_t>& data) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

}  // namespace

TEST_CASE("seed generator draws the frozen sequences") {
  SUBCASE("single mode from state zero") {
    session::SeedGenerator gen(0);
    CHECK(gen.next_seed(snn::Mode::kSingle) == BitVector::from_string("0001010000"));
    CHECK(gen.state() == 0x14057b7ef767814full);
  }
  SUBCASE("dual mode takes sixteen top bits of the same step") {
    session::SeedGenerator gen(0);
    CHECK(gen.next_seed(snn::Mode::kDual) == BitVector::from_string("0001010000000101"));
    CHECK(gen.next_seed(snn::Mode::kDual) == BitVector::from_string("0001101000001000"));
  }
  SUBCASE("state 42 opens with the demo seed") {
    session::SeedGenerator gen(42);
    CHECK(gen.next_seed(snn::Mode::kSingle) == BitVector::from_string("1001000101"));
  }
  SUBCASE("equal states replay the same stream") {
    session::SeedGenerator a(777), b(777);
    for (int i = 0; i < 50; ++i) {
      CHECK(a.next_seed(snn::Mode::kSingle) == b.next_seed(snn::Mode::kSingle));
    }
    CHECK(a.state() == b.state());
  }
}

TEST_CASE("messages serialize to the seed line plus hex line") {
  const session::SessionMessage message{BitVector::from_string("0100111010"),
                                        {0xa1, 0x1e, 0x45}};
  CHECK(session::serialize_message(message) == "0100111010\na11e45\n");
  CHECK(session::parse_message("0100111010\na11e45\n") == message);
  CHECK(session::parse_message("0100111010\na11e45") == message);

  SUBCASE("empty ciphertext is representable") {
    const session::SessionMessage empty{BitVector::from_string("0000000001"), {}};
    CHECK(session::parse_message(session::serialize_message(empty)) == empty);
  }

  SUBCASE("round-trips arbitrary messages") {
    session::SeedGenerator gen(3);
    for (int i = 0; i < 20; ++i) {
      session::SessionMessage m{gen.next_seed(snn::Mode::kSingle),
                                {static_cast<std::uint8_t>(i * 37), 0xff, 0x00}};
      CHECK(session::parse_message(session::serialize_message(m)) == m);
    }
  }

  SUBCASE("malformed wire text throws") {
    CHECK_THROWS_AS(session::parse_message("0100111010"), std::invalid_argument);
    CHECK_THROWS_AS(session::parse_message("01002\nab\n"), std::invalid_argument);
    CHECK_THROWS_AS(session::parse_message("0100111010\nabc\n"), std::invalid_argument);
    CHECK_THROWS_AS(session::parse_message("0100111010\nzz\n"), std::invalid_argument);
    CHECK_THROWS_AS(session::parse_message("0100111010\nAB\n"), std::invalid_argument);
  }

  SUBCASE("the message decomposes into seed and ciphertext") {
    const auto& [seed, ciphertext] = message;
    CHECK(seed == BitVector::from_string("0100111010"));
    CHECK(ciphertext == std::vector<std::uint8_t>{0xa1, 0x1e, 0x45});
  }
}

TEST_CASE("endpoints validate their configuration at construction") {
  CHECK_NOTHROW(session::Endpoint{snn::preset_proposal1()});

  auto rejected = snn::preset_proposal1();
  rejected.neuron1.theta = 1000.0;  // no potential ever crosses: all-zero keys
  CHECK_THROWS_AS(session::Endpoint{rejected}, std::invalid_argument);

  auto malformed = snn::preset_proposal1();
  malformed.neuron1.tau2 = malformed.neuron1.tau1;
  CHECK_THROWS_AS(session::Endpoint{malformed}, std::invalid_argument);

  const session::Endpoint endpoint{snn::preset_proposal1()};
  const BitVector seed = BitVector::from_string("0100111010");
  const auto kp = endpoint.derive(seed);
  CHECK(kp.k1 == BitVector::from_string("01101111"));
  CHECK(kp.k2 == BitVector::from_string("11011011"));
}

TEST_CASE("matching endpoints agree on keys without exchanging them") {
  const session::Endpoint sender{snn::preset_proposal1()};
  const session::Endpoint receiver{snn::preset_proposal1()};
  const BitVector seed = BitVector::from_string("0100111010");
  const auto plain = bytes_of("Saleh al-omari");

  const session::SessionMessage message = session::sender_encrypt(sender, plain, seed);
  CHECK(message.public_seed == seed);
  // Frozen ciphertext for this message, seed and preset.
  CHECK(hex_of(message.ciphertext) == "a11e455b405f1e45a6c1d61e6e37");

  const auto recovered = session::receiver_decrypt(receiver, message);
  CHECK(recovered == plain);

  const auto sender_keys = sender.derive(seed);
  const auto receiver_keys = receiver.derive(message.public_seed);
  CHECK(sender_keys.k1 == receiver_keys.k1);
  CHECK(sender_keys.k2 == receiver_keys.k2);

  SUBCASE("the ciphertext is exactly the ECB encryption under derived keys") {
    CHECK(message.ciphertext == ecb::encrypt_bytes(plain, sender_keys));
  }
}

TEST_CASE("mismatched private configurations fail to agree") {
  const session::Endpoint sender{snn::preset_proposal1()};
  const session::Endpoint receiver{snn::preset_proposal2()};
  const BitVector seed = BitVector::from_string("0100111010");

  const auto sender_keys = sender.derive(seed);
  const auto receiver_keys = receiver.derive(seed);
  CHECK_FALSE(sender_keys.k1 == receiver_keys.k1);

  const auto plain = bytes_of("Saleh al-omari");
  const auto message = session::sender_encrypt(sender, plain, seed);
  const auto recovered = session::receiver_decrypt(receiver, message);
  CHECK_FALSE(recovered == plain);
}

TEST_CASE("run_session reports a complete agreement transcript") {
  const auto plain = bytes_of("attack at dawn");
  session::SeedGenerator gen(42);
  const auto report = session::run_session(snn::preset_proposal1(), plain, gen);

  CHECK(report.keys_agree);
  CHECK(report.roundtrip_ok);
  CHECK(report.recovered == plain);
  CHECK(report.message.public_seed == BitVector::from_string("1001000101"));
  CHECK(report.sender_keys.k1 == report.receiver_keys.k1);
  CHECK(report.sender_keys.k2 == report.receiver_keys.k2);
  CHECK(report.message.ciphertext ==
        ecb::encrypt_bytes(plain, report.sender_keys));

  SUBCASE("the generator advances so sessions draw fresh seeds") {
    session::SeedGenerator replay(42);
    const auto first = session::run_session(snn::preset_proposal1(), plain, replay);
    const auto second = session::run_session(snn::preset_proposal1(), plain, replay);
    CHECK(first.message == report.message);
    CHECK_FALSE(second.message.public_seed == first.message.public_seed);
    CHECK(second.keys_agree);
    CHECK(second.roundtrip_ok);
  }

  SUBCASE("dual mode sessions work end to end") {
    snn::NetworkConfig dual;
    dual.mode = snn::Mode::kDual;
    dual.neuron1 = snn::preset_proposal1().neuron1;
    dual.neuron2 = snn::preset_proposal2().neuron1;
    REQUIRE(snn::validate_config(dual).accepted);
    session::SeedGenerator dual_gen(7);
    const auto dual_report = session::run_session(dual, plain, dual_gen);
    CHECK(dual_report.keys_agree);
    CHECK(dual_report.roundtrip_ok);
    CHECK(dual_report.message.public_seed.size() == 16);
  }
}
