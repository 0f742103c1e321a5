#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "uec/codec.hpp"
#include "uec/combinatorics.hpp"
#include "uec/errors.hpp"
#include "uec/model.hpp"

using uec::BitString;
using uec::CodecParams;
using uec::DecodeError;
using uec::Symbol;

namespace {
const std::vector<Symbol> kBanana = {1, 0, 2, 0, 2, 0};  // over (a,b,n,x)
}

TEST_CASE("banana layout: 2 + 2 + 4 + 6 = 14 bits") {
  const CodecParams params{4, 6};
  const uec::CodewordLayout layout = uec::codeword_layout(kBanana, params);
  CHECK(layout.distinct == 3);
  CHECK(layout.distinct_bits == 2);
  CHECK(layout.support_bits == 2);      // C(4,3) = 4
  CHECK(layout.composition_bits == 4);  // C(5,2) = 10
  CHECK(layout.arrangement_bits == 6);  // 6!/(3!1!2!) = 60
  CHECK(layout.total_bits() == 14);

  const BitString bits = uec::encode(kBanana, params);
  CHECK(bits.bit_count == 14);
  CHECK(uec::decode(bits, params) == kBanana);
}

TEST_CASE("singleton alphabet needs zero bits") {
  const CodecParams params{1, 9};
  const std::vector<Symbol> seq(9, 0);
  const BitString bits = uec::encode(seq, params);
  CHECK(bits.bit_count == 0);
  CHECK(uec::decode(bits, params) == seq);
  CHECK(uec::codeword_length_bits(uec::type_of(seq, 1), params) == 0);
}

TEST_CASE("encode input validation") {
  const CodecParams params{3, 4};
  CHECK_THROWS_AS(uec::encode(std::vector<Symbol>{0, 1, 3, 0}, params),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::encode(std::vector<Symbol>{}, params),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::encode(std::vector<Symbol>{0, 1}, params),
                  std::invalid_argument);
}

TEST_CASE("decode rejects malformed payloads") {
  const CodecParams params{4, 6};
  // All-zero 14-bit payload parses as d=1, whose codeword is only 4 bits.
  BitString zeros;
  zeros.bytes = {0, 0};
  zeros.bit_count = 14;
  CHECK_THROWS_AS(uec::decode(zeros, params), DecodeError);

  BitString truncated = uec::encode(kBanana, params);
  truncated.bit_count -= 3;
  CHECK_THROWS_AS(uec::decode(truncated, params), DecodeError);

  // d field beyond min(n,k): for k=5, n=3 the 2-bit field caps at d=3.
  const CodecParams narrow{5, 3};
  BitString bad;
  bad.bytes = {0xC0};  // d field = 3 -> d = 4 > min(3,5)
  bad.bit_count = 2;
  CHECK_THROWS_AS(uec::decode(bad, narrow), DecodeError);
}

TEST_CASE("round trip and injectivity, exhaustive small instances") {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 5; ++n) {
      const CodecParams params{k, n};
      std::set<std::vector<bool>> codewords;
      uec::for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
        const BitString bits = uec::encode(seq, params);
        const std::vector<Symbol> back = uec::decode(bits, params);
        CHECK(std::equal(back.begin(), back.end(), seq.begin(), seq.end()));
        std::vector<bool> key(bits.bit_count + 1, false);
        for (std::uint64_t b = 0; b < bits.bit_count; ++b) key[b] = bits.bit(b);
        key.back() = true;  // length marker so equal prefixes differ
        CHECK(codewords.insert(key).second);
      });
    }
  }
}

TEST_CASE("layout width caps") {
  // total <= ceil(log2 n) + ceil(log2 C(k,d)) + ceil(log2 C(n-1,d-1))
  //          + n H(empirical) + 3.
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 5; ++n) {
      const CodecParams params{k, n};
      uec::for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
        const uec::CodewordLayout layout = uec::codeword_layout(seq, params);
        const uec::TypeVector type = uec::type_of(seq, k);
        double empirical_bits = 0.0;
        for (std::uint64_t mu : type.counts) {
          if (mu > 0) {
            empirical_bits += static_cast<double>(mu) *
                              std::log2(static_cast<double>(n) /
                                        static_cast<double>(mu));
          }
        }
        const double cap =
            std::ceil(std::log2(static_cast<double>(n))) +
            std::ceil(uec::binomial(k, layout.distinct).log2()) +
            std::ceil(uec::binomial(n - 1, layout.distinct - 1).log2()) +
            empirical_bits + 3.0;
        CHECK(static_cast<double>(layout.total_bits()) <= cap + 1e-9);
        CHECK(layout.total_bits() == std::uint64_t{layout.distinct_bits} +
                                         layout.support_bits +
                                         layout.composition_bits +
                                         layout.arrangement_bits);
      });
    }
  }
}

TEST_CASE("codeword length matches encode for every sequence of each type") {
  const CodecParams params{3, 4};
  uec::for_each_sequence(3, 4, [&](std::span<const Symbol> seq) {
    const uec::TypeVector type = uec::type_of(seq, 3);
    CHECK(uec::codeword_length_bits(type, params) ==
          uec::encode(seq, params).bit_count);
  });
}

TEST_CASE("ideal codelength examples") {
  // k = 1: q = 1/n, so n = 8 costs exactly 3 bits.
  const CodecParams one{1, 8};
  const uec::TypeVector constant{{8}, 8};
  CHECK(uec::ideal_codelength_bits(constant, one) == doctest::Approx(3.0));

  // banana type: log2(6*4*10) + 6*H(1/2,1/6,1/3).
  const CodecParams params{4, 6};
  const uec::TypeVector type{{3, 1, 2, 0}, 6};
  const double entropy =
      0.5 * std::log2(2.0) + (1.0 / 6.0) * std::log2(6.0) +
      (1.0 / 3.0) * std::log2(3.0);
  CHECK(uec::ideal_codelength_bits(type, params) ==
        doctest::Approx(std::log2(240.0) + 6.0 * entropy).epsilon(1e-12));
  CHECK(uec::codeword_length_bits(type, params) <=
        uec::ideal_codelength_bits(type, params) + 4.0);
}

TEST_CASE("implied coding distribution is a sub-probability") {
  // sum over all sequences of 2^(-ideal codelength) <= 1.
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const CodecParams params{k, n};
      double total = 0.0;
      uec::for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
        const uec::TypeVector type{{counts.begin(), counts.end()}, n};
        total += uec::multinomial(type).to_double() *
                 std::exp2(-uec::ideal_codelength_bits(type, params));
      });
      CHECK(total <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("container frames round trip") {
  std::vector<std::uint8_t> container;
  uec::append_frame(container, kBanana, 4);
  uec::append_frame(container, std::vector<Symbol>{3, 3}, 4);
  uec::append_frame(container, std::vector<Symbol>(5, 0), 1);  // empty payload
  CHECK(container.size() >= 3 * 6);

  std::size_t offset = 0;
  const uec::Frame first = uec::read_frame(container, offset);
  CHECK(first.symbols == kBanana);
  CHECK(first.alphabet_size == 4);
  const uec::Frame second = uec::read_frame(container, offset);
  CHECK(second.symbols == std::vector<Symbol>{3, 3});
  const uec::Frame third = uec::read_frame(container, offset);
  CHECK(third.symbols == std::vector<Symbol>(5, 0));
  CHECK(third.alphabet_size == 1);
  CHECK(offset == container.size());
}

TEST_CASE("container rejects corruption") {
  std::vector<std::uint8_t> container;
  uec::append_frame(container, kBanana, 4);

  std::size_t offset = 0;
  std::vector<std::uint8_t> bad_magic = container;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(uec::read_frame(bad_magic, offset), DecodeError);

  offset = 0;
  std::vector<std::uint8_t> truncated(container.begin(), container.end() - 1);
  CHECK_THROWS_AS(uec::read_frame(truncated, offset), DecodeError);

  offset = 0;
  std::vector<std::uint8_t> dirty_padding = container;
  dirty_padding.back() |= 0x01;  // 14-bit payload leaves 2 pad bits
  CHECK_THROWS_AS(uec::read_frame(dirty_padding, offset), DecodeError);
}
