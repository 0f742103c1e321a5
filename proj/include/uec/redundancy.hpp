// redundancy.hpp
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
// Expected-redundancy laboratory: exact achieved redundancy of the
// enumerative code against a fixed source, an exact minimax oracle for
// finite classes (channel-capacity iteration), Poisson type entropy, and
// Monte Carlo checks of the occupancy concentration inequalities.

#ifndef UEC_REDUNDANCY_HPP_
#define UEC_REDUNDANCY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "uec/model.hpp"

namespace uec {

struct RedundancyReport {
  double achieved_bits = 0.0;             // E[log2 p/q] for the implied q
  double entropy_bits = 0.0;              // n * H(p)
  double expected_codelength_bits = 0.0;  // E[-log2 q]
  std::uint64_t n = 0;
  std::uint32_t alphabet_size = 0;
};

// Exact expectation over types; guarded at desk scale.
RedundancyReport achieved_redundancy(const Distribution& p, std::uint64_t n);

/// Result of the capacity iteration. The true minimax value lies within
/// gap_bits/2 of value_bits; `prior` is the witness mixture over members and
/// `mixture` the induced coding distribution over outcomes.
struct CapacityResult {
  double value_bits = 0.0;
  double gap_bits = 0.0;
  std::vector<double> prior;
  std::vector<double> mixture;
  std::uint64_t iterations = 0;
  bool converged = false;
};

// Exact capacity of the member -> outcome channel via alternating
// maximization. Rows of `likelihood` must each sum to 1.
CapacityResult channel_capacity(const std::vector<std::vector<double>>& likelihood,
                                double tol, std::uint64_t max_iterations = 100000);

enum class OutcomeSpace { kSequences, kTypes };

// Minimax expected redundancy min_q max_p E_p[log2 p/q] over a finite class,
// computed as the capacity of the member -> sample channel.
CapacityResult minimax_expected_redundancy(
    std::span<const Distribution> members, std::uint64_t n, double tol,
    OutcomeSpace space = OutcomeSpace::kSequences);

struct EquivalenceResult {
  double sequence_value = 0.0;
  double type_value = 0.0;
  bool equal = false;  // |difference| <= 2 * tol
};

// Runs the oracle over sequence likelihoods and over type likelihoods; the
// two minimax values agree because every sequence of a type is equiprobable.
EquivalenceResult type_redundancy_equivalence_check(
    std::span<const Distribution> members, std::uint64_t n, double tol);

// Entropy of Poisson(lambda) in bits, summed until the tail mass is below
// 1e-15. Requires lambda > 0.
double poisson_entropy(double lambda);

// Closed-form cap for lambda in (0,1):
//   lambda*(log2 e - log2 lambda) + exp(-lambda)*lambda^2/(1-lambda).
double poisson_entropy_bound(double lambda);

/// Exact type entropy under Poisson sampling, H = sum_i H(Poisson(n p_i)),
/// split at lambda = 0.7 together with the matching closed-form caps
/// sum_{lambda<0.7} (3 lambda - lambda log2 lambda) and
/// sum_{lambda>=0.7} 0.5 log2(2 pi e (lambda + 1/12)).
struct PoissonTypeEntropyReport {
  std::vector<double> lambdas;
  double total_bits = 0.0;
  double low_part_bits = 0.0;
  double high_part_bits = 0.0;
  double low_cap_bits = 0.0;
  double high_cap_bits = 0.0;
};

PoissonTypeEntropyReport type_entropy_poisson(const Distribution& p,
                                              std::uint64_t n);

/// Monte Carlo check of the lower-deviation bound for the Poisson-sampled
/// distinct count: Pr[distinct < mean - sqrt(2 v s)] <= exp(-s), with v the
/// expected singleton count.
struct ConcentrationReport {
  double s = 0.0;
  double threshold = 0.0;   // distinct_mean - sqrt(2 v s)
  double tail_bound = 0.0;  // exp(-s)
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool pass = false;  // estimate <= tail_bound + 3 * std_error
};

ConcentrationReport concentration_check(const Distribution& p, std::uint64_t n,
                                        double s, std::uint64_t trials,
                                        std::uint64_t seed);

/// Both sides of the Poisson halving inequality
/// minimax(P^n) >= minimax(P^poisson(n)) / 2, the Poisson side computed over
/// types with the sample length truncated at n + 10 sqrt(n) (tail mass must
/// be below 1e-8; the residual is folded into a shared sink outcome).
struct PoissonHalvingResult {
  double fixed_length_value = 0.0;
  double poisson_value = 0.0;
  double truncation_mass = 0.0;
  std::uint64_t max_length = 0;
  bool holds = false;  // fixed >= poisson/2 - tol
};

PoissonHalvingResult lower_bound_poisson_halving_check(
    std::span<const Distribution> members, std::uint64_t n, double tol);

}  // namespace uec

#endif  // UEC_REDUNDANCY_HPP_
