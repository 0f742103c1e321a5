// redundancy.cpp
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

#include "uec/redundancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "uec/codec.hpp"
#include "uec/combinatorics.hpp"
#include "uec/errors.hpp"
#include "uec/random.hpp"

namespace uec {

namespace {

constexpr double kMaxEnumeration = 1e7;
constexpr double kLog2E = std::numbers::log2e;

double poisson_pmf(double lambda, std::uint64_t count) {
  if (lambda == 0.0) return count == 0 ? 1.0 : 0.0;
  return std::exp(-lambda + static_cast<double>(count) * std::log(lambda) -
                  std::lgamma(static_cast<double>(count) + 1.0));
}

// log2 Pr_p[type] = log2 multinomial + sum mu_i log2 p_i; -inf if the type
// uses a zero-probability symbol.
double log2_type_probability(const TypeVector& type, const Distribution& p) {
  double log2_prob = log2_multinomial(type);
  for (std::uint32_t i = 0; i < type.counts.size(); ++i) {
    const std::uint64_t mu = type.counts[i];
    if (mu == 0) continue;
    if (p.probs()[i] <= 0.0) return -std::numeric_limits<double>::infinity();
    log2_prob += static_cast<double>(mu) * std::log2(p.probs()[i]);
  }
  return log2_prob;
}

std::vector<std::vector<double>> sequence_likelihoods(
    std::span<const Distribution> members, std::uint64_t n) {
  const std::uint32_t k = members.front().size();
  if (std::pow(static_cast<double>(k), static_cast<double>(n)) >
      kMaxEnumeration) {
    throw InstanceTooLargeError("minimax: sequence space too large");
  }
  std::vector<std::vector<double>> likelihood(members.size());
  for (auto& row : likelihood) row.reserve(static_cast<std::size_t>(
      std::pow(static_cast<double>(k), static_cast<double>(n))));
  for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      double prob = 1.0;
      for (Symbol s : seq) prob *= members[i].probs()[s];
      likelihood[i].push_back(prob);
    }
  });
  return likelihood;
}

std::vector<std::vector<double>> type_likelihoods(
    std::span<const Distribution> members, std::uint64_t n) {
  const std::uint32_t k = members.front().size();
  if (type_count_estimate(k, n) > kMaxEnumeration) {
    throw InstanceTooLargeError("minimax: type space too large");
  }
  std::vector<std::vector<double>> likelihood(members.size());
  TypeVector type;
  type.n = n;
  for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
    type.counts.assign(counts.begin(), counts.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      likelihood[i].push_back(std::exp2(log2_type_probability(type, members[i])));
    }
  });
  return likelihood;
}

void check_members(std::span<const Distribution> members) {
  if (members.empty()) {
    throw std::invalid_argument("minimax: class must be nonempty");
  }
  for (const auto& member : members) {
    if (member.size() != members.front().size()) {
      throw std::invalid_argument("minimax: members must share an alphabet");
    }
  }
}

}  // namespace

RedundancyReport achieved_redundancy(const Distribution& p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("achieved_redundancy: n must be positive");
  const std::uint32_t k = p.size();
  if (type_count_estimate(k, n) > kMaxEnumeration) {
    throw InstanceTooLargeError("achieved_redundancy: too many types");
  }
  const CodecParams params{k, n};
  double expected_codelength = 0.0;
  TypeVector type;
  type.n = n;
  for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
    type.counts.assign(counts.begin(), counts.end());
    const double log2_prob = log2_type_probability(type, p);
    if (log2_prob == -std::numeric_limits<double>::infinity()) return;
    expected_codelength += std::exp2(log2_prob) * ideal_codelength_bits(type, params);
  });

  RedundancyReport report;
  report.entropy_bits = static_cast<double>(n) * p.entropy_bits();
  report.expected_codelength_bits = expected_codelength;
  report.achieved_bits = expected_codelength - report.entropy_bits;
  report.n = n;
  report.alphabet_size = k;
  return report;
}

CapacityResult channel_capacity(const std::vector<std::vector<double>>& likelihood,
                                double tol, std::uint64_t max_iterations) {
  if (likelihood.empty()) {
    throw std::invalid_argument("channel_capacity: no members");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("channel_capacity: tol must be > 0");
  const std::size_t members = likelihood.size();
  const std::size_t outcomes = likelihood.front().size();
  for (const auto& row : likelihood) {
    if (row.size() != outcomes) {
      throw std::invalid_argument("channel_capacity: ragged likelihood table");
    }
    double sum = 0.0;
    for (double w : row) {
      if (!(w >= 0.0)) {
        throw std::invalid_argument("channel_capacity: negative likelihood");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("channel_capacity: row does not sum to 1");
    }
  }

  CapacityResult result;
  result.prior.assign(members, 1.0 / static_cast<double>(members));
  result.mixture.assign(outcomes, 0.0);
  std::vector<double> divergence(members, 0.0);

  for (std::uint64_t iter = 1; iter <= max_iterations; ++iter) {
    for (std::size_t x = 0; x < outcomes; ++x) {
      double q = 0.0;
      for (std::size_t i = 0; i < members; ++i) {
        q += result.prior[i] * likelihood[i][x];
      }
      result.mixture[x] = q;
    }
    double upper = -std::numeric_limits<double>::infinity();
    double lower = 0.0;
    for (std::size_t i = 0; i < members; ++i) {
      double d = 0.0;
      for (std::size_t x = 0; x < outcomes; ++x) {
        const double w = likelihood[i][x];
        if (w > 0.0) d += w * std::log2(w / result.mixture[x]);
      }
      divergence[i] = d;
      upper = std::max(upper, d);
      lower += result.prior[i] * d;
    }
    result.iterations = iter;
    result.value_bits = 0.5 * (upper + lower);
    result.gap_bits = upper - lower;
    if (result.gap_bits <= tol) {
      result.converged = true;
      break;
    }
    double normalizer = 0.0;
    for (std::size_t i = 0; i < members; ++i) {
      result.prior[i] *= std::exp2(divergence[i] - upper);
      normalizer += result.prior[i];
    }
    for (auto& w : result.prior) w /= normalizer;
  }
  return result;
}

CapacityResult minimax_expected_redundancy(std::span<const Distribution> members,
                                           std::uint64_t n, double tol,
                                           OutcomeSpace space) {
  check_members(members);
  if (n == 0) throw std::invalid_argument("minimax: n must be positive");
  const auto likelihood = space == OutcomeSpace::kSequences
                              ? sequence_likelihoods(members, n)
                              : type_likelihoods(members, n);
  return channel_capacity(likelihood, tol);
}

EquivalenceResult type_redundancy_equivalence_check(
    std::span<const Distribution> members, std::uint64_t n, double tol) {
  EquivalenceResult result;
  result.sequence_value =
      minimax_expected_redundancy(members, n, tol, OutcomeSpace::kSequences)
          .value_bits;
  result.type_value =
      minimax_expected_redundancy(members, n, tol, OutcomeSpace::kTypes)
          .value_bits;
  result.equal = std::abs(result.sequence_value - result.type_value) <= 2.0 * tol;
  return result;
}

double poisson_entropy(double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("poisson_entropy: lambda must be positive");
  }
  // Summed outward from the mode so terms never underflow prematurely; stops
  // once the accounted mass is within 1e-15 of 1.
  const double log_lambda = std::log(lambda);
  const std::uint64_t mode = static_cast<std::uint64_t>(lambda);
  const double pmf_mode =
      std::exp(-lambda + static_cast<double>(mode) * log_lambda -
               std::lgamma(static_cast<double>(mode) + 1.0));
  double entropy = 0.0;
  double mass = 0.0;
  double pmf = pmf_mode;
  for (std::uint64_t m = mode;; --m) {
    if (pmf > 0.0) {
      entropy -= pmf * std::log2(pmf);
      mass += pmf;
    }
    if (m == 0 || pmf <= 0.0) break;
    pmf *= static_cast<double>(m) / lambda;
  }
  pmf = pmf_mode;
  for (std::uint64_t m = mode + 1;; ++m) {
    pmf *= lambda / static_cast<double>(m);
    if (pmf <= 0.0) break;
    entropy -= pmf * std::log2(pmf);
    mass += pmf;
    if (1.0 - mass < 1e-15 && static_cast<double>(m) > lambda) break;
  }
  return entropy;
}

double poisson_entropy_bound(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("poisson_entropy_bound: lambda must be in (0,1)");
  }
  return lambda * (kLog2E - std::log2(lambda)) +
         std::exp(-lambda) * lambda * lambda / (1.0 - lambda);
}

PoissonTypeEntropyReport type_entropy_poisson(const Distribution& p,
                                              std::uint64_t n) {
  PoissonTypeEntropyReport report;
  report.lambdas.reserve(p.size());
  for (double prob : p.probs()) {
    const double lambda = static_cast<double>(n) * prob;
    report.lambdas.push_back(lambda);
    if (lambda <= 0.0) continue;
    const double h = poisson_entropy(lambda);
    report.total_bits += h;
    if (lambda < 0.7) {
      report.low_part_bits += h;
      report.low_cap_bits += 3.0 * lambda - lambda * std::log2(lambda);
    } else {
      report.high_part_bits += h;
      report.high_cap_bits +=
          0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e *
                          (lambda + 1.0 / 12.0));
    }
  }
  return report;
}

ConcentrationReport concentration_check(const Distribution& p, std::uint64_t n,
                                        double s, std::uint64_t trials,
                                        std::uint64_t seed) {
  if (!(s > 0.0)) throw std::invalid_argument("concentration_check: s must be > 0");
  if (trials < 10000) {
    throw std::invalid_argument("concentration_check: need at least 1e4 trials");
  }
  const PoissonOccupancy occ = poisson_occupancy(p, n);
  ConcentrationReport report;
  report.s = s;
  report.threshold = occ.distinct_mean - std::sqrt(2.0 * occ.singleton_mean * s);
  report.tail_bound = std::exp(-s);
  report.trials = trials;
  report.seed = seed;

  // Under Poisson sampling the per-symbol counts are independent, so the
  // distinct count is a sum of independent Bernoulli(1 - exp(-n p_i)).
  std::vector<double> hit_probs;
  hit_probs.reserve(p.size());
  for (double prob : p.probs()) {
    hit_probs.push_back(-std::expm1(-static_cast<double>(n) * prob));
  }
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint32_t distinct = 0;
    for (double q : hit_probs) {
      if (uniform_unit(rng) < q) ++distinct;
    }
    if (static_cast<double>(distinct) < report.threshold) ++hits;
  }
  report.hits = hits;
  report.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  report.std_error = std::sqrt(report.tail_bound * (1.0 - report.tail_bound) /
                               static_cast<double>(trials));
  report.pass = report.estimate <= report.tail_bound + 3.0 * report.std_error;
  return report;
}

PoissonHalvingResult lower_bound_poisson_halving_check(
    std::span<const Distribution> members, std::uint64_t n, double tol) {
  check_members(members);
  if (n == 0) throw std::invalid_argument("halving check: n must be positive");
  const std::uint32_t k = members.front().size();

  PoissonHalvingResult result;
  result.max_length =
      n + static_cast<std::uint64_t>(std::ceil(10.0 * std::sqrt(static_cast<double>(n))));

  // Truncation mass of the shared Poisson(n) length distribution.
  {
    double cumulative = 0.0;
    double pmf = std::exp(-static_cast<double>(n));
    for (std::uint64_t m = 0; m <= result.max_length; ++m) {
      cumulative += pmf;
      pmf *= static_cast<double>(n) / static_cast<double>(m + 1);
    }
    result.truncation_mass = std::max(0.0, 1.0 - cumulative);
  }
  if (result.truncation_mass > 1e-8) {
    throw std::invalid_argument("halving check: truncation mass too large");
  }

  if (type_count_estimate(k + 1, result.max_length) > kMaxEnumeration) {
    throw InstanceTooLargeError("halving check: Poisson type space too large");
  }

  // Poisson-side likelihoods over types of any total <= max_length; the
  // independent Poisson marginals give the type probability directly. The
  // tail beyond the truncation is merged into one sink outcome per member
  // (merging outcomes can only lower the capacity, so the check stays
  // conservative).
  std::vector<std::vector<double>> likelihood(members.size());
  TypeVector type;
  // Enumerate tuples over k+1 coordinates summing to max_length; the last
  // coordinate is slack, the first k form the type.
  for_each_type(k + 1, result.max_length, [&](std::span<const std::uint64_t> counts) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      double prob = 1.0;
      for (std::uint32_t j = 0; j < k; ++j) {
        prob *= poisson_pmf(static_cast<double>(n) * members[i].probs()[j],
                            counts[j]);
      }
      likelihood[i].push_back(prob);
    }
  });
  for (std::size_t i = 0; i < members.size(); ++i) {
    double sum = 0.0;
    for (double w : likelihood[i]) sum += w;
    likelihood[i].push_back(std::max(0.0, 1.0 - sum));
  }

  const CapacityResult poisson = channel_capacity(likelihood, tol);
  const CapacityResult fixed =
      minimax_expected_redundancy(members, n, tol, OutcomeSpace::kTypes);

  result.poisson_value = poisson.value_bits;
  result.fixed_length_value = fixed.value_bits;
  result.holds = result.fixed_length_value >= 0.5 * result.poisson_value - tol;
  return result;
}

}  // namespace uec
