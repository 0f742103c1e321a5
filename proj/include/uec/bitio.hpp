// bitio.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// MSB-first bit packing. Field values are written big-endian within their
// fixed widths; bytes fill from the high bit down.

#ifndef UEC_BITIO_HPP_
#define UEC_BITIO_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "uec/bignum.hpp"
#include "uec/errors.hpp"

namespace uec {

struct BitString {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bit_count = 0;

  bool bit(std::uint64_t index) const {
    return (bytes[index / 8] >> (7 - index % 8)) & 1u;
  }
};

class BitWriter {
 public:
  void push_bit(bool value) {
    if (out_.bit_count % 8 == 0) out_.bytes.push_back(0);
    if (value) out_.bytes.back() |= static_cast<std::uint8_t>(1u << (7 - out_.bit_count % 8));
    ++out_.bit_count;
  }

  // Writes `width` bits, most significant first. The value must fit.
  void write_big(const BigUint& value, std::uint32_t width) {
    for (std::uint32_t i = width; i-- > 0;) push_bit(value.bit(i));
  }

  void write_uint(std::uint64_t value, std::uint32_t width) {
    for (std::uint32_t i = width; i-- > 0;) push_bit((value >> i) & 1u);
  }

  std::uint64_t bit_count() const { return out_.bit_count; }
  BitString take() { return std::move(out_); }

 private:
  BitString out_;
};

class BitReader {
 public:
  BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_count)
      : bytes_(bytes), bit_count_(bit_count) {}
  explicit BitReader(const BitString& bits)
      : BitReader(bits.bytes, bits.bit_count) {}

  bool read_bit() {
    if (pos_ >= bit_count_) throw DecodeError("bitstream truncated");
    const bool value = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    ++pos_;
    return value;
  }

  BigUint read_big(std::uint32_t width) {
    BigUint value(0);
    for (std::uint32_t i = 0; i < width; ++i) {
      value <<= 1;
      if (read_bit()) value += BigUint(1);
    }
    return value;
  }

  std::uint64_t read_uint(std::uint32_t width) {
    std::uint64_t value = 0;
    for (std::uint32_t i = 0; i < width; ++i) {
      value = (value << 1) | static_cast<std::uint64_t>(read_bit());
    }
    return value;
  }

  std::uint64_t bits_consumed() const { return pos_; }
  std::uint64_t bits_available() const { return bit_count_ - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t bit_count_ = 0;
  std::uint64_t pos_ = 0;
};

}  // namespace uec

#endif  // UEC_BITIO_HPP_
