// codec.cpp
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

#include "uec/codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uec/combinatorics.hpp"
#include "uec/errors.hpp"

namespace uec {

namespace {

constexpr char kMagic[4] = {'U', 'E', 'C', '1'};

void validate_params(const CodecParams& params) {
  if (params.alphabet_size == 0) {
    throw std::invalid_argument("codec: alphabet must be nonempty");
  }
  if (params.block_length == 0) {
    throw std::invalid_argument("codec: block length must be positive");
  }
}

// Bits needed to address `count` distinct values: ceil(log2 count).
std::uint32_t width_for_count(const BigUint& count) {
  BigUint top = count;
  top -= BigUint(1);
  return static_cast<std::uint32_t>(top.bit_length());
}

std::uint32_t width_for_count(std::uint64_t count) {
  return width_for_count(BigUint(count));
}

struct FieldWidths {
  std::uint32_t distinct_bits;
  std::uint32_t support_bits;
  std::uint32_t composition_bits;
  std::uint32_t arrangement_bits;
};

FieldWidths widths_for(const TypeVector& type, const CodecParams& params) {
  const std::uint32_t d = type.distinct_count();
  FieldWidths w{};
  w.distinct_bits = width_for_count(
      std::min<std::uint64_t>(params.block_length, params.alphabet_size));
  w.support_bits = width_for_count(binomial(params.alphabet_size, d));
  w.composition_bits = width_for_count(binomial(params.block_length - 1, d - 1));
  w.arrangement_bits = width_for_count(multinomial(type));
  return w;
}

void write_varint(std::vector<std::uint8_t>& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value) | 0x80u);
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

std::uint64_t read_varint(std::span<const std::uint8_t> data, std::size_t& offset) {
  std::uint64_t value = 0;
  std::uint32_t shift = 0;
  while (true) {
    if (offset >= data.size()) throw DecodeError("container truncated in varint");
    if (shift >= 64) throw DecodeError("container varint overflows 64 bits");
    const std::uint8_t byte = data[offset++];
    value |= std::uint64_t{byte & 0x7Fu} << shift;
    if (!(byte & 0x80u)) return value;
    shift += 7;
  }
}

}  // namespace

CodewordLayout codeword_layout(std::span<const Symbol> sequence,
                               const CodecParams& params) {
  validate_params(params);
  if (sequence.empty()) throw std::invalid_argument("encode: empty sequence");
  if (sequence.size() != params.block_length) {
    throw std::invalid_argument("encode: sequence length does not match block");
  }
  const TypeVector type = type_of(sequence, params.alphabet_size);

  CodewordLayout layout;
  layout.distinct = type.distinct_count();
  const FieldWidths w = widths_for(type, params);
  layout.distinct_bits = w.distinct_bits;
  layout.support_bits = w.support_bits;
  layout.composition_bits = w.composition_bits;
  layout.arrangement_bits = w.arrangement_bits;

  std::vector<std::uint32_t> support;
  std::vector<std::uint64_t> parts;
  support.reserve(layout.distinct);
  parts.reserve(layout.distinct);
  for (std::uint32_t s = 0; s < params.alphabet_size; ++s) {
    if (type.counts[s] > 0) {
      support.push_back(s);
      parts.push_back(type.counts[s]);
    }
  }
  layout.support_rank = subset_rank(support, params.alphabet_size);
  layout.composition_rank = composition_rank(parts);
  layout.arrangement_rank = arrangement_rank(sequence, type);
  return layout;
}

BitString encode(std::span<const Symbol> sequence, const CodecParams& params) {
  const CodewordLayout layout = codeword_layout(sequence, params);
  BitWriter writer;
  writer.write_uint(layout.distinct - 1, layout.distinct_bits);
  writer.write_big(layout.support_rank, layout.support_bits);
  writer.write_big(layout.composition_rank, layout.composition_bits);
  writer.write_big(layout.arrangement_rank, layout.arrangement_bits);
  return writer.take();
}

std::vector<Symbol> decode_prefix(BitReader& reader, const CodecParams& params) {
  validate_params(params);
  const std::uint64_t max_distinct =
      std::min<std::uint64_t>(params.block_length, params.alphabet_size);

  const std::uint64_t d_field = reader.read_uint(width_for_count(max_distinct));
  if (d_field >= max_distinct) {
    throw DecodeError("distinct-count field out of range");
  }
  const std::uint32_t d = static_cast<std::uint32_t>(d_field) + 1;

  const BigUint support_count = binomial(params.alphabet_size, d);
  const BigUint support_rank = reader.read_big(width_for_count(support_count));
  if (support_rank >= support_count) {
    throw DecodeError("support-rank field out of range");
  }
  const std::vector<std::uint32_t> support =
      subset_unrank(support_rank, d, params.alphabet_size);

  const BigUint composition_count = binomial(params.block_length - 1, d - 1);
  const BigUint composition_field =
      reader.read_big(width_for_count(composition_count));
  if (composition_field >= composition_count) {
    throw DecodeError("composition-rank field out of range");
  }
  const std::vector<std::uint64_t> parts =
      composition_unrank(composition_field, params.block_length, d);

  TypeVector type;
  type.counts.assign(params.alphabet_size, 0);
  type.n = params.block_length;
  for (std::uint32_t j = 0; j < d; ++j) type.counts[support[j]] = parts[j];

  const BigUint arrangement_count = multinomial(type);
  const BigUint arrangement_field =
      reader.read_big(width_for_count(arrangement_count));
  if (arrangement_field >= arrangement_count) {
    throw DecodeError("arrangement-rank field out of range");
  }
  return arrangement_unrank(arrangement_field, type);
}

std::vector<Symbol> decode(const BitString& bits, const CodecParams& params) {
  BitReader reader(bits);
  std::vector<Symbol> sequence = decode_prefix(reader, params);
  if (reader.bits_consumed() != bits.bit_count) {
    throw DecodeError("codeword length does not match payload bit count");
  }
  return sequence;
}

std::uint64_t codeword_length_bits(const TypeVector& type,
                                   const CodecParams& params) {
  validate_params(params);
  if (type.alphabet_size() != params.alphabet_size || type.n != params.block_length) {
    throw std::invalid_argument("codeword_length: type does not match params");
  }
  const FieldWidths w = widths_for(type, params);
  return std::uint64_t{w.distinct_bits} + w.support_bits + w.composition_bits +
         w.arrangement_bits;
}

double ideal_codelength_bits(const TypeVector& type, const CodecParams& params) {
  validate_params(params);
  const std::uint32_t d = type.distinct_count();
  const double n = static_cast<double>(params.block_length);
  double bits = std::log2(n) + log2_binomial(params.alphabet_size, d) +
                log2_binomial(params.block_length - 1, d - 1);
  for (std::uint64_t mu : type.counts) {
    if (mu > 0) {
      bits += static_cast<double>(mu) * std::log2(n / static_cast<double>(mu));
    }
  }
  return bits;
}

void append_frame(std::vector<std::uint8_t>& out, std::span<const Symbol> sequence,
                  std::uint32_t alphabet_size) {
  const CodecParams params{alphabet_size, sequence.size()};
  const BitString bits = encode(sequence, params);
  out.insert(out.end(), kMagic, kMagic + 4);
  write_varint(out, sequence.size());
  write_varint(out, alphabet_size);
  out.insert(out.end(), bits.bytes.begin(), bits.bytes.end());
}

Frame read_frame(std::span<const std::uint8_t> data, std::size_t& offset) {
  if (data.size() - offset < 4 ||
      !std::equal(kMagic, kMagic + 4, data.begin() + offset)) {
    throw DecodeError("bad container magic");
  }
  offset += 4;
  const std::uint64_t n = read_varint(data, offset);
  const std::uint64_t k = read_varint(data, offset);
  if (n == 0 || k == 0 || k > 0xFFFFFFFFull) {
    throw DecodeError("container header out of range");
  }
  const CodecParams params{static_cast<std::uint32_t>(k), n};

  const std::span<const std::uint8_t> payload = data.subspan(offset);
  BitReader reader(payload, std::uint64_t{payload.size()} * 8);
  Frame frame;
  frame.alphabet_size = params.alphabet_size;
  frame.symbols = decode_prefix(reader, params);

  const std::uint64_t used_bits = reader.bits_consumed();
  const std::size_t used_bytes = static_cast<std::size_t>((used_bits + 7) / 8);
  if (used_bytes > payload.size()) throw DecodeError("container truncated");
  for (std::uint64_t b = used_bits; b < std::uint64_t{used_bytes} * 8; ++b) {
    if ((payload[b / 8] >> (7 - b % 8)) & 1u) {
      throw DecodeError("nonzero padding bits");
    }
  }
  offset += used_bytes;
  return frame;
}

}  // namespace uec
