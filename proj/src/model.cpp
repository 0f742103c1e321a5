// model.cpp
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

#include "uec/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uec {

namespace {

// (1-p)^n without cancellation for small p.
double pow_one_minus(double p, std::uint64_t n) {
  if (p >= 1.0) return 0.0;
  if (p < 0.5) return std::exp(static_cast<double>(n) * std::log1p(-p));
  return std::pow(1.0 - p, static_cast<double>(n));
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("Distribution: empty probability vector");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("Distribution: negative or NaN probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12 * std::max(1.0, std::abs(sum)) &&
      std::abs(sum - 1.0) > kProbTol) {
    throw std::invalid_argument("Distribution: probabilities do not sum to 1");
  }
  // Stable sort keeps ties in ascending original-index order.
  std::vector<std::uint32_t> order(probs_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return probs_[a] > probs_[b];
                   });
  sorted_.reserve(probs_.size());
  for (std::uint32_t idx : order) sorted_.push_back(probs_[idx]);
}

double Distribution::entropy_bits() const {
  double h = 0.0;
  for (double p : probs_) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double zipf_normalizer(double alpha, std::uint32_t k) {
  // Summed from the smallest term up, with compensation.
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint32_t i = k; i >= 1; --i) {
    const double term = std::pow(static_cast<double>(i), -alpha);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Distribution zipf_distribution(double alpha, std::uint32_t k) {
  return make_zipf_class(alpha, k).distribution();
}

ZipfClass make_zipf_class(double alpha, std::uint32_t k) {
  if (!(alpha > 1.0)) {
    throw std::invalid_argument("zipf: power must exceed 1");
  }
  if (k == 0) throw std::invalid_argument("zipf: support must be positive");
  return ZipfClass{alpha, k, zipf_normalizer(alpha, k)};
}

Distribution ZipfClass::distribution() const {
  std::vector<double> probs(support);
  for (std::uint32_t i = 0; i < support; ++i) {
    probs[i] = std::pow(static_cast<double>(i + 1), -alpha) / c_norm;
  }
  return Distribution(std::move(probs));
}

std::uint32_t TypeVector::distinct_count() const {
  std::uint32_t d = 0;
  for (std::uint64_t c : counts) {
    if (c > 0) ++d;
  }
  return d;
}

std::vector<std::uint64_t> TypeVector::sorted_counts_desc() const {
  std::vector<std::uint64_t> sorted = counts;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

TypeVector type_of(std::span<const Symbol> sequence, std::uint32_t k) {
  if (sequence.empty()) throw std::invalid_argument("type_of: empty sequence");
  if (k == 0) throw std::invalid_argument("type_of: alphabet must be nonempty");
  TypeVector type;
  type.counts.assign(k, 0);
  type.n = sequence.size();
  for (Symbol s : sequence) {
    if (s >= k) throw std::invalid_argument("type_of: symbol index out of range");
    ++type.counts[s];
  }
  return type;
}

std::uint64_t Profile::distinct_count() const {
  std::uint64_t d = 0;
  for (const auto& [mult, count] : prevalences) d += count;
  return d;
}

Profile profile_of(const TypeVector& type) {
  Profile profile;
  profile.n = type.n;
  for (std::uint64_t c : type.counts) {
    if (c > 0) ++profile.prevalences[c];
  }
  return profile;
}

double expected_distinct(const Distribution& p, std::uint64_t n) {
  if (n == 0) return 0.0;
  double total = 0.0;
  for (double prob : p.probs()) {
    total += 1.0 - pow_one_minus(prob, n);
  }
  return total;
}

PoissonOccupancy poisson_occupancy(const Distribution& p, std::uint64_t n) {
  PoissonOccupancy occ;
  for (double prob : p.probs()) {
    const double lambda = static_cast<double>(n) * prob;
    const double decay = std::exp(-lambda);
    occ.distinct_mean += -std::expm1(-lambda);
    occ.singleton_mean += lambda * decay;
    occ.doubleton_mean += 0.5 * lambda * lambda * decay;
  }
  return occ;
}

double expected_distinct_poisson(const Distribution& p, std::uint64_t n) {
  return poisson_occupancy(p, n).distinct_mean;
}

EnvelopeClass::EnvelopeClass(std::vector<double> envelope)
    : envelope_(std::move(envelope)) {
  if (envelope_.empty()) {
    throw std::invalid_argument("EnvelopeClass: empty envelope");
  }
  for (std::size_t i = 0; i < envelope_.size(); ++i) {
    if (!(envelope_[i] >= 0.0)) {
      throw std::invalid_argument("EnvelopeClass: negative envelope entry");
    }
    if (i > 0 && envelope_[i] > envelope_[i - 1] + kProbTol) {
      throw std::invalid_argument("EnvelopeClass: envelope must be nonincreasing");
    }
  }
}

bool EnvelopeClass::contains(const Distribution& d) const {
  if (d.size() != size()) return false;
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (d.sorted()[i] > envelope_[i] + kProbTol) return false;
  }
  return true;
}

Distribution EnvelopeClass::greedy_member() const {
  std::vector<double> probs(envelope_.size(), 0.0);
  double remaining = 1.0;
  for (std::size_t i = 0; i < envelope_.size() && remaining > 0.0; ++i) {
    probs[i] = std::min(envelope_[i], remaining);
    remaining -= probs[i];
  }
  if (remaining > kProbTol) {
    throw std::invalid_argument(
        "EnvelopeClass: envelope mass below 1, class is empty");
  }
  return Distribution(std::move(probs));
}

PermutationClass::PermutationClass(Distribution base) : base_(std::move(base)) {}

bool PermutationClass::contains(const Distribution& d) const {
  if (d.size() != base_.size()) return false;
  for (std::uint32_t i = 0; i < d.size(); ++i) {
    if (std::abs(d.sorted()[i] - base_.sorted()[i]) > kProbTol) return false;
  }
  return true;
}

DistinctBoundedClass::DistinctBoundedClass(double max_expected_distinct,
                                           std::uint32_t k, std::uint64_t n)
    : max_expected_distinct_(max_expected_distinct), k_(k), n_(n) {
  if (!(max_expected_distinct > 0.0)) {
    throw std::invalid_argument("DistinctBoundedClass: bound must be positive");
  }
  if (k == 0 || n == 0) {
    throw std::invalid_argument("DistinctBoundedClass: k and n must be positive");
  }
}

bool DistinctBoundedClass::contains(const Distribution& d) const {
  if (d.size() != k_) return false;
  return expected_distinct(d, n_) <= max_expected_distinct_ + kProbTol;
}

}  // namespace uec
