// model.hpp
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
// Probability-model layer: finite distributions, power-law construction,
// unordered distribution classes, and sequence statistics (types, profiles,
// distinct-element expectations). Everything here is immutable after
// construction and safe for concurrent use.

#ifndef UEC_MODEL_HPP_
#define UEC_MODEL_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace uec {

using Symbol = std::uint32_t;  // 0-based symbol index in [0, k)

// Absolute tolerance for probability comparisons and class membership.
inline constexpr double kProbTol = 1e-12;

/// A finite probability vector together with its nonincreasing sorted view.
/// Ties in the sorted view are broken by ascending original index so that
/// every derived quantity is deterministic.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  std::uint32_t size() const { return static_cast<std::uint32_t>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<double>& sorted() const { return sorted_; }
  double entropy_bits() const;

 private:
  std::vector<double> probs_;
  std::vector<double> sorted_;
};

// Normalization constant sum_{i=1..k} i^-alpha, by direct summation.
double zipf_normalizer(double alpha, std::uint32_t k);

// Power-law distribution p_i = i^-alpha / C. Requires alpha > 1, k >= 1.
Distribution zipf_distribution(double alpha, std::uint32_t k);

struct ZipfClass {
  double alpha = 0.0;
  std::uint32_t support = 0;
  double c_norm = 0.0;
  Distribution distribution() const;
};
ZipfClass make_zipf_class(double alpha, std::uint32_t k);

/// Per-symbol multiplicities of a sequence over a k-symbol alphabet.
struct TypeVector {
  std::vector<std::uint64_t> counts;
  std::uint64_t n = 0;

  std::uint32_t alphabet_size() const {
    return static_cast<std::uint32_t>(counts.size());
  }
  std::uint32_t distinct_count() const;
  std::vector<std::uint64_t> sorted_counts_desc() const;
};

TypeVector type_of(std::span<const Symbol> sequence, std::uint32_t k);

/// Prevalences: for each multiplicity m >= 1 that occurs, the number of
/// symbols appearing exactly m times. Zero-count multiplicities are omitted.
struct Profile {
  std::map<std::uint64_t, std::uint64_t> prevalences;
  std::uint64_t n = 0;

  std::uint64_t distinct_count() const;
};

Profile profile_of(const TypeVector& type);

// E[number of distinct symbols] = sum_i 1 - (1-p_i)^n under n i.i.d. draws.
double expected_distinct(const Distribution& p, std::uint64_t n);

/// Occupancy moments when the sample size is Poisson(n) so per-symbol counts
/// are independent Poisson(n*p_i):
///   distinct_mean   = sum_i 1 - exp(-n p_i)
///   singleton_mean  = sum_i (n p_i) exp(-n p_i)
///   doubleton_mean  = sum_i (n p_i)^2 exp(-n p_i) / 2
struct PoissonOccupancy {
  double distinct_mean = 0.0;
  double singleton_mean = 0.0;
  double doubleton_mean = 0.0;
};

PoissonOccupancy poisson_occupancy(const Distribution& p, std::uint64_t n);
double expected_distinct_poisson(const Distribution& p, std::uint64_t n);

/// Distributions whose sorted probabilities are dominated pointwise by a
/// fixed nonincreasing envelope.
class EnvelopeClass {
 public:
  explicit EnvelopeClass(std::vector<double> envelope);

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(envelope_.size());
  }
  const std::vector<double>& envelope() const { return envelope_; }
  bool contains(const Distribution& d) const;

  // Waterfilled member: assigns min(envelope, remaining mass) greedily from
  // the largest envelope entry down. Throws if the envelope cannot carry a
  // full unit of mass.
  Distribution greedy_member() const;

 private:
  std::vector<double> envelope_;
};

/// All relabelings of a fixed base distribution.
class PermutationClass {
 public:
  explicit PermutationClass(Distribution base);

  const Distribution& base() const { return base_; }
  bool contains(const Distribution& d) const;

 private:
  Distribution base_;
};

/// Distributions over [k] whose expected distinct-symbol count after n draws
/// is at most max_expected_distinct.
class DistinctBoundedClass {
 public:
  DistinctBoundedClass(double max_expected_distinct, std::uint32_t k,
                       std::uint64_t n);

  double bound() const { return max_expected_distinct_; }
  std::uint32_t alphabet_size() const { return k_; }
  std::uint64_t sequence_length() const { return n_; }
  bool contains(const Distribution& d) const;

 private:
  double max_expected_distinct_;
  std::uint32_t k_;
  std::uint64_t n_;
};

}  // namespace uec

#endif  // UEC_MODEL_HPP_
