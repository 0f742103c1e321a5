// combinatorics.cpp
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

#include "uec/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uec {

BigUint binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return BigUint(0);
  if (r > n - r) r = n - r;
  BigUint result(1);
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= (n - r + i);
    result.div_exact(static_cast<std::uint32_t>(i));
  }
  return result;
}

double log2_factorial(std::uint64_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
}

double log2_binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return -std::numeric_limits<double>::infinity();
  return log2_factorial(n) - log2_factorial(r) - log2_factorial(n - r);
}

BigUint multinomial(std::span<const std::uint64_t> counts) {
  // n! / prod counts_i! as a product of binomials over prefix sums.
  BigUint result(1);
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) {
    total += c;
    result *= binomial(total, c);
  }
  return result;
}

BigUint multinomial(const TypeVector& type) {
  return multinomial(std::span<const std::uint64_t>(type.counts));
}

double log2_multinomial(const TypeVector& type) {
  double value = log2_factorial(type.n);
  for (std::uint64_t c : type.counts) {
    if (c > 1) value -= log2_factorial(c);
  }
  return value;
}

BigUint subset_rank(std::span<const std::uint32_t> subset, std::uint32_t universe) {
  BigUint rank(0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= universe) {
      throw std::invalid_argument("subset_rank: element out of range");
    }
    if (i > 0 && subset[i] <= subset[i - 1]) {
      throw std::invalid_argument("subset_rank: subset must be strictly ascending");
    }
    rank += binomial(subset[i], static_cast<std::uint64_t>(i) + 1);
  }
  return rank;
}

std::vector<std::uint32_t> subset_unrank(BigUint rank, std::uint32_t size,
                                         std::uint32_t universe) {
  if (size > universe) {
    throw std::invalid_argument("subset_unrank: subset larger than universe");
  }
  if (rank >= binomial(universe, size)) {
    throw std::out_of_range("subset_unrank: rank out of range");
  }
  std::vector<std::uint32_t> subset(size);
  std::uint32_t ceiling = universe;
  for (std::uint32_t i = size; i >= 1; --i) {
    // Largest c < ceiling with C(c, i) <= rank.
    std::uint32_t c = i - 1;
    BigUint coeff(0);  // C(c, i) with c = i-1 is 0
    while (c + 1 < ceiling) {
      // C(c+1, i) = C(c, i) * (c+1) / (c+1-i)
      BigUint next = c < i ? BigUint(1) : coeff * (c + 1);
      if (c >= i) next.div_exact(c + 1 - i);
      if (next > rank) break;
      coeff = next;
      ++c;
    }
    subset[i - 1] = c;
    rank -= coeff;
    ceiling = c;
  }
  return subset;
}

BigUint composition_rank(std::span<const std::uint64_t> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("composition_rank: no parts");
  }
  std::uint64_t total = 0;
  for (std::uint64_t part : parts) {
    if (part == 0) throw std::invalid_argument("composition_rank: zero part");
    total += part;
  }
  BigUint rank(0);
  std::uint64_t remaining = total;
  const std::uint64_t count = parts.size();
  for (std::uint64_t j = 0; j + 1 < count; ++j) {
    // Compositions with a smaller value at position j, the prefix fixed:
    // sum over v in [1, parts[j]-1] of C(remaining-v-1, count-j-2), which
    // telescopes to C(remaining-1, count-j-1) - C(remaining-parts[j], count-j-1).
    const std::uint64_t slots = count - j - 1;
    rank += binomial(remaining - 1, slots);
    rank -= binomial(remaining - parts[j], slots);
    remaining -= parts[j];
  }
  return rank;
}

std::vector<std::uint64_t> composition_unrank(BigUint rank, std::uint64_t total,
                                              std::uint64_t count) {
  if (count == 0 || total < count) {
    throw std::invalid_argument("composition_unrank: infeasible shape");
  }
  if (rank >= binomial(total - 1, count - 1)) {
    throw std::out_of_range("composition_unrank: rank out of range");
  }
  std::vector<std::uint64_t> parts(count);
  std::uint64_t remaining = total;
  for (std::uint64_t j = 0; j + 1 < count; ++j) {
    const std::uint64_t slots = count - j - 1;
    std::uint64_t value = 1;
    while (true) {
      const BigUint block = binomial(remaining - value - 1, slots - 1);
      if (rank < block) break;
      rank -= block;
      ++value;
    }
    parts[j] = value;
    remaining -= value;
  }
  parts[count - 1] = remaining;
  return parts;
}

BigUint arrangement_rank(std::span<const Symbol> sequence, const TypeVector& type) {
  if (sequence.size() != type.n) {
    throw std::invalid_argument("arrangement_rank: length does not match type");
  }
  std::vector<std::uint64_t> remaining = type.counts;
  BigUint arrangements = multinomial(type);
  BigUint rank(0);
  std::uint64_t positions_left = type.n;
  for (Symbol s : sequence) {
    if (s >= remaining.size() || remaining[s] == 0) {
      throw std::invalid_argument("arrangement_rank: sequence does not match type");
    }
    // Sequences that place any smaller still-available symbol here:
    // arrangements * remaining[s'] / positions_left summed over s' < s.
    std::uint64_t smaller = 0;
    for (Symbol t = 0; t < s; ++t) smaller += remaining[t];
    if (smaller > 0) {
      BigUint block = arrangements * smaller;
      block.div_exact(static_cast<std::uint32_t>(positions_left));
      rank += block;
    }
    arrangements *= remaining[s];
    arrangements.div_exact(static_cast<std::uint32_t>(positions_left));
    --remaining[s];
    --positions_left;
  }
  return rank;
}

std::vector<Symbol> arrangement_unrank(BigUint rank, const TypeVector& type) {
  if (rank >= multinomial(type)) {
    throw std::out_of_range("arrangement_unrank: rank out of range");
  }
  std::vector<std::uint64_t> remaining = type.counts;
  BigUint arrangements = multinomial(type);
  std::vector<Symbol> sequence;
  sequence.reserve(type.n);
  std::uint64_t positions_left = type.n;
  while (positions_left > 0) {
    for (Symbol s = 0; s < remaining.size(); ++s) {
      if (remaining[s] == 0) continue;
      BigUint block = arrangements * remaining[s];
      block.div_exact(static_cast<std::uint32_t>(positions_left));
      if (rank < block) {
        sequence.push_back(s);
        arrangements = std::move(block);
        --remaining[s];
        break;
      }
      rank -= block;
    }
    --positions_left;
  }
  return sequence;
}

double type_count_estimate(std::uint32_t k, std::uint64_t n) {
  return std::exp2(log2_binomial(n + k - 1, k - 1));
}

}  // namespace uec
