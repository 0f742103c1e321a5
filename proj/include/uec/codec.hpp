// codec.hpp
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
// Lossless enumerative codec for fixed-length blocks over a known alphabet.
// A block is serialized as four fixed-width big-endian fields:
//
//   distinct count d-1        width ceil(log2 min(n,k))
//   support subset rank       width ceil(log2 C(k,d))      (colex)
//   multiplicity composition  width ceil(log2 C(n-1,d-1))  (lex)
//   arrangement rank          width ceil(log2 n!/prod mu!) (lex)
//
// Each width is computable from (k,n) and the previously decoded fields, so
// the stream is self-delimiting given the header.

#ifndef UEC_CODEC_HPP_
#define UEC_CODEC_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "uec/bignum.hpp"
#include "uec/bitio.hpp"
#include "uec/model.hpp"

namespace uec {

struct CodecParams {
  std::uint32_t alphabet_size = 0;  // k
  std::uint64_t block_length = 0;   // n
};

struct CodewordLayout {
  std::uint32_t distinct = 0;  // d, in [1, min(n,k)]
  std::uint32_t distinct_bits = 0;
  BigUint support_rank;
  std::uint32_t support_bits = 0;
  BigUint composition_rank;
  std::uint32_t composition_bits = 0;
  BigUint arrangement_rank;
  std::uint32_t arrangement_bits = 0;

  std::uint64_t total_bits() const {
    return std::uint64_t{distinct_bits} + support_bits + composition_bits +
           arrangement_bits;
  }
};

CodewordLayout codeword_layout(std::span<const Symbol> sequence,
                               const CodecParams& params);

BitString encode(std::span<const Symbol> sequence, const CodecParams& params);

// Requires the bitstring to contain exactly one codeword.
std::vector<Symbol> decode(const BitString& bits, const CodecParams& params);

// Decodes one codeword from the reader, leaving it positioned after it.
std::vector<Symbol> decode_prefix(BitReader& reader, const CodecParams& params);

// Total codeword bits for any sequence of the given type, without
// materializing a bitstring.
std::uint64_t codeword_length_bits(const TypeVector& type,
                                   const CodecParams& params);

// Idealized codelength -log2 q for the coding distribution
// q(x) = (1/N_d) prod (mu_j/n)^mu_j with N_d = n C(k,d) C(n-1,d-1):
// log2 N_d + sum_j mu_j log2(n/mu_j). The concrete codeword is never more
// than 4 bits longer (one ceiling per field).
double ideal_codelength_bits(const TypeVector& type, const CodecParams& params);

// ---------------------------------------------------------------------------
// Container format "UEC1": magic bytes, then n and k as unsigned LEB128
// varints, then the codeword bits packed MSB-first and zero-padded to a byte
// boundary. A stream is a sequence of such frames; the last frame's explicit
// n field carries any short tail block.
// ---------------------------------------------------------------------------

void append_frame(std::vector<std::uint8_t>& out, std::span<const Symbol> sequence,
                  std::uint32_t alphabet_size);

struct Frame {
  std::vector<Symbol> symbols;
  std::uint32_t alphabet_size = 0;
};

// Reads the frame starting at `offset` and advances it past the frame.
Frame read_frame(std::span<const std::uint8_t> data, std::size_t& offset);

}  // namespace uec

#endif  // UEC_CODEC_HPP_
