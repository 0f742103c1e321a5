// bignum.cpp
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

#include "uec/bignum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uec {

namespace {
constexpr std::uint64_t kLimbBase = std::uint64_t{1} << 32;
}  // namespace

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xFFFFFFFFu));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return 32 * (limbs_.size() - 1) +
         (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool BigUint::bit(std::size_t index) const {
  const std::size_t limb = index / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (index % 32)) & 1u;
}

double BigUint::to_double() const {
  double result = 0.0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    result = result * 4294967296.0 + static_cast<double>(*it);
  }
  return result;
}

double BigUint::log2() const {
  if (limbs_.empty()) return -std::numeric_limits<double>::infinity();
  // Top 64 bits give full double precision; the rest is pure exponent.
  const std::size_t nbits = bit_length();
  std::uint64_t top = 0;
  const std::size_t hi = nbits - 1;
  const std::size_t lo = nbits > 64 ? nbits - 64 : 0;
  for (std::size_t i = hi + 1; i-- > lo;) {
    top = (top << 1) | static_cast<std::uint64_t>(bit(i));
  }
  return std::log2(static_cast<double>(top)) + static_cast<double>(lo);
}

std::uint64_t BigUint::to_uint64() const {
  if (bit_length() > 64) throw std::overflow_error("BigUint exceeds 64 bits");
  std::uint64_t value = 0;
  if (!limbs_.empty()) value = limbs_[0];
  if (limbs_.size() > 1) value |= std::uint64_t{limbs_[1]} << 32;
  return value;
}

std::string BigUint::to_string() const {
  if (limbs_.empty()) return "0";
  BigUint scratch = *this;
  std::string digits;
  while (!scratch.is_zero()) {
    const std::uint32_t chunk = scratch.div_mod_small(1000000000u);
    if (scratch.is_zero()) {
      digits.insert(0, std::to_string(chunk));
    } else {
      std::string part = std::to_string(chunk);
      digits.insert(0, std::string(9 - part.size(), '0') + part);
    }
  }
  return digits;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum & 0xFFFFFFFFu);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (*this < rhs) throw std::underflow_error("BigUint subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> product(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t a = limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = product[i + j] + a * rhs.limbs_[j] + carry;
      product[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFu);
      carry = cur >> 32;
    }
    std::size_t pos = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = product[pos] + carry;
      product[pos] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFu);
      carry = cur >> 32;
      ++pos;
    }
  }
  limbs_ = std::move(product);
  trim();
  return *this;
}

BigUint& BigUint::operator*=(std::uint64_t rhs) {
  if (rhs >> 32) return *this *= BigUint(rhs);
  if (rhs == 0 || is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = std::uint64_t{limb} * rhs + carry;
    limb = static_cast<std::uint32_t>(cur & 0xFFFFFFFFu);
    carry = cur >> 32;
  }
  while (carry) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xFFFFFFFFu));
    carry >>= 32;
  }
  return *this;
}

BigUint& BigUint::operator<<=(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  const std::size_t limb_shift = bits / 32;
  const std::size_t bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  if (bit_shift != 0) {
    std::uint32_t carry = 0;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
      const std::uint32_t next =
          static_cast<std::uint32_t>(limbs_[i] >> (32 - bit_shift));
      limbs_[i] = (limbs_[i] << bit_shift) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  return *this;
}

std::uint32_t BigUint::div_mod_small(std::uint32_t divisor) {
  if (divisor == 0) throw std::domain_error("BigUint division by zero");
  std::uint64_t remainder = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const std::uint64_t cur = (remainder << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    remainder = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(remainder);
}

BigUint& BigUint::div_exact(std::uint32_t divisor) {
  if (div_mod_small(divisor) != 0) {
    throw std::logic_error("BigUint::div_exact: nonzero remainder");
  }
  return *this;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() <=> b.limbs_.size();
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace uec
