// combinatorics.hpp
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
// Exact big-integer ranking/unranking primitives behind the enumerative
// codec: binomials, colex subset ranks, lex composition ranks, and lex
// within-type (multinomial) sequence ranks. Ranks are 0-based and every
// rank path is integer-exact; floating point appears only in the log2
// helpers.

#ifndef UEC_COMBINATORICS_HPP_
#define UEC_COMBINATORICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "uec/bignum.hpp"
#include "uec/model.hpp"

namespace uec {

// Exact C(n, r); 0 when r > n.
BigUint binomial(std::uint64_t n, std::uint64_t r);

// log2 C(n, r) via lgamma; -inf when r > n.
double log2_binomial(std::uint64_t n, std::uint64_t r);
double log2_factorial(std::uint64_t n);

// Exact n! / prod_i counts_i! for counts summing to n.
BigUint multinomial(std::span<const std::uint64_t> counts);
BigUint multinomial(const TypeVector& type);
double log2_multinomial(const TypeVector& type);

// Colexicographic bijection between size-d subsets of [0, universe) and
// [0, C(universe, d)). Subsets are sorted ascending.
BigUint subset_rank(std::span<const std::uint32_t> subset, std::uint32_t universe);
std::vector<std::uint32_t> subset_unrank(BigUint rank, std::uint32_t size,
                                         std::uint32_t universe);

// Lexicographic bijection between compositions of `total` into `count`
// positive parts and [0, C(total-1, count-1)).
BigUint composition_rank(std::span<const std::uint64_t> parts);
std::vector<std::uint64_t> composition_unrank(BigUint rank, std::uint64_t total,
                                              std::uint64_t count);

// Lexicographic bijection between sequences of a given type and
// [0, multinomial(type)).
BigUint arrangement_rank(std::span<const Symbol> sequence, const TypeVector& type);
std::vector<Symbol> arrangement_unrank(BigUint rank, const TypeVector& type);

// Number of k-tuples of nonnegative integers summing to n, as a double
// (used only for enumeration guards).
double type_count_estimate(std::uint32_t k, std::uint64_t n);

/// Lexicographically enumerates all k-tuples of nonnegative multiplicities
/// summing to n. The span passed to `fn` is reused between calls.
template <typename Fn>
void for_each_type(std::uint32_t k, std::uint64_t n, Fn&& fn) {
  std::vector<std::uint64_t> counts(k, 0);
  // Walk positions 0..k-2 as an odometer; the last coordinate absorbs the
  // remainder so every tuple sums to n.
  counts[k - 1] = n;
  if (k == 1) {
    fn(std::span<const std::uint64_t>(counts));
    return;
  }
  std::uint64_t used = 0;  // sum of counts[0..k-2]
  while (true) {
    counts[k - 1] = n - used;
    fn(std::span<const std::uint64_t>(counts));
    // Advance: increment the rightmost prefix position that still has slack,
    // zeroing everything after it.
    std::size_t pos = k - 1;
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (used < n) {
        ++counts[pos];
        ++used;
        advanced = true;
        break;
      }
      used -= counts[pos];
      counts[pos] = 0;
    }
    if (!advanced) break;
  }
}

/// Enumerates all k^n sequences of length n in lexicographic order. The span
/// passed to `fn` is reused between calls.
template <typename Fn>
void for_each_sequence(std::uint32_t k, std::uint64_t n, Fn&& fn) {
  std::vector<Symbol> seq(n, 0);
  while (true) {
    fn(std::span<const Symbol>(seq));
    std::size_t pos = n;
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++seq[pos] < k) {
        advanced = true;
        break;
      }
      seq[pos] = 0;
    }
    if (!advanced) break;
  }
}

}  // namespace uec

#endif  // UEC_COMBINATORICS_HPP_
