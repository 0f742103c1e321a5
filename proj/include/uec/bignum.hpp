// bignum.hpp
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

#ifndef UEC_BIGNUM_HPP_
#define UEC_BIGNUM_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uec {

/// Unsigned arbitrary-precision integer for exact combinatorial counts and
/// enumerative ranks. Little-endian 32-bit limbs, no trailing zero limbs.
/// Division is only ever by word-sized divisors, which is all the ranking
/// algorithms need.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return limbs_.empty(); }

  // Number of bits in the binary representation; 0 for the value 0.
  std::size_t bit_length() const;
  bool bit(std::size_t index) const;

  double to_double() const;  // saturates to +inf on overflow
  double log2() const;       // -inf for the value 0
  std::uint64_t to_uint64() const;  // throws std::overflow_error if too wide
  std::string to_string() const;    // decimal

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
  BigUint& operator*=(const BigUint& rhs);
  BigUint& operator*=(std::uint64_t rhs);
  BigUint& operator<<=(std::size_t bits);

  // Divides in place by a word-sized divisor, returning the remainder.
  std::uint32_t div_mod_small(std::uint32_t divisor);
  // In-place division that must leave no remainder.
  BigUint& div_exact(std::uint32_t divisor);

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }
  friend BigUint operator*(BigUint a, std::uint64_t b) { return a *= b; }
  friend BigUint operator<<(BigUint a, std::size_t bits) { return a <<= bits; }

 private:
  void trim();

  std::vector<std::uint32_t> limbs_;
};

}  // namespace uec

#endif  // UEC_BIGNUM_HPP_
