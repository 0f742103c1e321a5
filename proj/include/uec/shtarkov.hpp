// shtarkov.hpp
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
// Worst-case redundancy engine: exact sums S = sum_x max_{p in class} p(x)
// at desk scale. log2 S is the minimax pointwise regret of the class.

#ifndef UEC_SHTARKOV_HPP_
#define UEC_SHTARKOV_HPP_

#include <cstdint>
#include <string>

#include "uec/model.hpp"

namespace uec {

enum class ShtarkovMethod {
  kExhaustive,      // sum over all k^n sequences
  kProfileGrouped,  // sum over types weighted by multinomial counts
};

struct ShtarkovReport {
  double log2_sum = 0.0;
  std::uint64_t n = 0;
  std::string class_summary;
  ShtarkovMethod method = ShtarkovMethod::kProfileGrouped;
};

// Maximum probability any relabeling of `base` assigns to a sequence of the
// given type: sorted multiplicities paired with sorted probabilities.
double max_likelihood_permutation(const TypeVector& type, const Distribution& base);
double log2_max_likelihood_permutation(const TypeVector& type,
                                       const Distribution& base);

// Exact S over the class of all relabelings of `base`, length n.
// Guarded: the type count (or k^n for the exhaustive method) must stay at
// desk scale; throws InstanceTooLargeError otherwise.
ShtarkovReport shtarkov_sum_permutation_class(
    const Distribution& base, std::uint64_t n,
    ShtarkovMethod method = ShtarkovMethod::kProfileGrouped);

/// For an envelope class the per-sequence maximizer is not pinned down by a
/// rearrangement argument, so the sum is reported as a bracket:
///   upper: product of envelope entries paired with sorted multiplicities
///          (dominates every member, may exceed the true maximum), and
///   lower: the exact sum for the waterfilled member distribution.
struct EnvelopeBracket {
  double log2_upper = 0.0;
  double log2_lower = 0.0;
  std::uint64_t n = 0;
  std::string class_summary;
};

EnvelopeBracket shtarkov_sum_envelope_class(const EnvelopeClass& env,
                                            std::uint64_t n);

}  // namespace uec

#endif  // UEC_SHTARKOV_HPP_
