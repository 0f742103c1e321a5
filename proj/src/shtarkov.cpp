// shtarkov.cpp
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

#include "uec/shtarkov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "uec/combinatorics.hpp"
#include "uec/errors.hpp"

namespace uec {

namespace {

constexpr double kMaxEnumeration = 1e7;

/// Streaming log-sum-exp in base 2 with compensated mantissa accumulation.
/// Terms are fed in a fixed enumeration order, so results are bit-stable
/// across runs.
class Log2SumAccumulator {
 public:
  void add(double log2_term) {
    if (log2_term == -std::numeric_limits<double>::infinity()) return;
    if (empty_) {
      max_ = log2_term;
      sum_ = 1.0;
      comp_ = 0.0;
      empty_ = false;
      return;
    }
    if (log2_term <= max_) {
      add_mantissa(std::exp2(log2_term - max_));
    } else {
      const double scale = std::exp2(max_ - log2_term);
      sum_ = sum_ * scale + comp_ * scale;
      comp_ = 0.0;
      max_ = log2_term;
      add_mantissa(1.0);
    }
  }

  double log2_total() const {
    if (empty_) return -std::numeric_limits<double>::infinity();
    return max_ + std::log2(sum_ + comp_);
  }

 private:
  void add_mantissa(double value) {
    const double y = value - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }

  bool empty_ = true;
  double max_ = 0.0;
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double log2_pairing(std::span<const std::uint64_t> counts_desc,
                    std::span<const double> values_desc) {
  double log2_prob = 0.0;
  for (std::size_t i = 0; i < counts_desc.size(); ++i) {
    if (counts_desc[i] == 0) break;
    if (values_desc[i] <= 0.0) return -std::numeric_limits<double>::infinity();
    log2_prob += static_cast<double>(counts_desc[i]) * std::log2(values_desc[i]);
  }
  return log2_prob;
}

void check_type_scale(std::uint32_t k, std::uint64_t n) {
  if (type_count_estimate(k, n) > kMaxEnumeration) {
    throw InstanceTooLargeError("shtarkov: too many types to enumerate");
  }
}

std::string describe(const Distribution& base) {
  std::ostringstream os;
  os << "permutations(k=" << base.size() << ")";
  return os.str();
}

}  // namespace

double log2_max_likelihood_permutation(const TypeVector& type,
                                       const Distribution& base) {
  if (type.alphabet_size() != base.size()) {
    throw std::invalid_argument("max_likelihood_permutation: dimension mismatch");
  }
  const std::vector<std::uint64_t> counts = type.sorted_counts_desc();
  return log2_pairing(counts, base.sorted());
}

double max_likelihood_permutation(const TypeVector& type, const Distribution& base) {
  return std::exp2(log2_max_likelihood_permutation(type, base));
}

ShtarkovReport shtarkov_sum_permutation_class(const Distribution& base,
                                              std::uint64_t n,
                                              ShtarkovMethod method) {
  if (n == 0) throw std::invalid_argument("shtarkov: n must be positive");
  const std::uint32_t k = base.size();
  Log2SumAccumulator acc;

  if (method == ShtarkovMethod::kExhaustive) {
    if (std::pow(static_cast<double>(k), static_cast<double>(n)) >
        kMaxEnumeration) {
      throw InstanceTooLargeError("shtarkov: too many sequences to enumerate");
    }
    for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
      acc.add(log2_max_likelihood_permutation(type_of(seq, k), base));
    });
  } else {
    check_type_scale(k, n);
    TypeVector type;
    type.n = n;
    std::vector<std::uint64_t> sorted;
    for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
      type.counts.assign(counts.begin(), counts.end());
      sorted.assign(counts.begin(), counts.end());
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      const double log2_phat = log2_pairing(sorted, base.sorted());
      acc.add(log2_multinomial(type) + log2_phat);
    });
  }

  ShtarkovReport report;
  report.log2_sum = acc.log2_total();
  report.n = n;
  report.class_summary = describe(base);
  report.method = method;
  return report;
}

EnvelopeBracket shtarkov_sum_envelope_class(const EnvelopeClass& env,
                                            std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("shtarkov: n must be positive");
  const std::uint32_t k = env.size();
  check_type_scale(k, n);

  Log2SumAccumulator upper;
  TypeVector type;
  type.n = n;
  std::vector<std::uint64_t> sorted;
  for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
    type.counts.assign(counts.begin(), counts.end());
    sorted.assign(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    upper.add(log2_multinomial(type) + log2_pairing(sorted, env.envelope()));
  });

  const Distribution member = env.greedy_member();
  const ShtarkovReport member_report = shtarkov_sum_permutation_class(member, n);

  EnvelopeBracket bracket;
  bracket.log2_upper = upper.log2_total();
  bracket.log2_lower = member_report.log2_sum;
  bracket.n = n;
  std::ostringstream os;
  os << "envelope(k=" << k << ")";
  bracket.class_summary = os.str();
  return bracket;
}

}  // namespace uec
