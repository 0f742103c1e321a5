// bounds.hpp
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
// Closed-form evaluators for the redundancy bounds. Every report carries a
// per-term breakdown that recombines exactly to the value, plus the formula
// being evaluated. Outputs are in bits. Where a formula treats a count as a
// real number but a binomial needs an integer, the argument is rounded to
// the nearest integer and clamped; both raw and clamped values appear in the
// report. Asymptotic (1 + o(1)) factors are evaluated as 1 and recorded as
// margin notes, never folded silently into the value.

#ifndef UEC_BOUNDS_HPP_
#define UEC_BOUNDS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <span>

namespace uec {

struct BoundReport {
  std::string name;
  std::string claim;  // formula this evaluator computes
  double value = 0.0;
  std::vector<std::pair<std::string, double>> terms;
  std::vector<std::pair<std::string, double>> params;

  double term(const std::string& key) const;
};

// n * log2((k - n) / (n^alpha * C_{k,alpha})); requires n <= k^(1/alpha).
BoundReport worst_case_lower_bound_zipf(double alpha, std::uint32_t k,
                                        std::uint64_t n);

// d * log2(k n / d^2) + (2 log2 e + 1) d + log2(n + 1); 0 < d <= min(n,k).
BoundReport distinct_upper_bound(std::uint32_t k, std::uint64_t n, double d);

// log2 C(k,d) - d log2(n/d + 1/6) - d log2(pi e)
//   - sum_{lambda_i < 0.7} (3 lambda_i - lambda_i log2 lambda_i).
BoundReport distinct_lower_bound(std::uint32_t k, std::uint64_t n, double d,
                                 std::span<const double> lambdas);

// (c^(-1/alpha) + c^2/(alpha-1)) n^(1/alpha), with the two exact
// intermediates (head count of envelope entries >= 1/n, tail mass sum).
BoundReport envelope_distinct_bound(double alpha, double c, std::uint32_t k,
                                    std::uint64_t n);

// Exact small-rate sums sum_{lambda<0.7} lambda and sum -lambda log2 lambda
// for the power law, next to their closed-form approximations.
BoundReport zipf_small_lambda_sums(double alpha, std::uint32_t k,
                                   std::uint64_t n);

// Matching upper/lower expected-redundancy bounds for the unordered
// power-law envelope with coefficient c; requires k > n.
BoundReport zipf_theorem_bounds(double alpha, double c, std::uint32_t k,
                                std::uint64_t n);

}  // namespace uec

#endif  // UEC_BOUNDS_HPP_
