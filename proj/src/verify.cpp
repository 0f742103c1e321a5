// verify.cpp
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

#include "uec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "uec/bounds.hpp"
#include "uec/codec.hpp"
#include "uec/combinatorics.hpp"
#include "uec/random.hpp"
#include "uec/redundancy.hpp"
#include "uec/shtarkov.hpp"

namespace uec {

namespace {

CheckResult make_check(std::string name, std::string claim, double measured,
                       double bound, bool pass, std::string detail = "",
                       bool fatal = true) {
  CheckResult check;
  check.name = std::move(name);
  check.claim = std::move(claim);
  check.measured = measured;
  check.bound = bound;
  check.pass = pass;
  check.fatal = fatal;
  check.detail = std::move(detail);
  return check;
}

BigUint pow2(std::uint64_t exponent) {
  BigUint value(1);
  value <<= exponent;
  return value;
}

BigUint big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigUint value(1);
  for (std::uint64_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

// N_d = n * C(k,d) * C(n-1,d-1), the subset/composition normalizer.
BigUint layout_normalizer(std::uint32_t k, std::uint64_t n, std::uint32_t d) {
  BigUint value(n);
  value *= binomial(k, d);
  value *= binomial(n - 1, d - 1);
  return value;
}

std::string fmt_kn(std::uint32_t k, std::uint64_t n) {
  std::ostringstream os;
  os << "k=" << k << ",n=" << n;
  return os.str();
}

// The test battery for criterion-3-style grids: power laws, uniform, and
// seeded simplex draws, twelve distributions per alphabet size.
std::vector<Distribution> grid_distributions(std::uint32_t k,
                                             std::mt19937_64& rng) {
  std::vector<Distribution> out;
  out.push_back(zipf_distribution(1.5, k));
  out.push_back(zipf_distribution(2.0, k));
  out.push_back(Distribution(std::vector<double>(k, 1.0 / k)));
  while (out.size() < 12) out.push_back(sample_distribution(rng, k));
  return out;
}

// --------------------------------------------------------------------------
// codec suite
// --------------------------------------------------------------------------

CheckResult check_round_trip_exhaustive() {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 5; ++n) {
      const CodecParams params{k, n};
      for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
        ++cases;
        const std::vector<Symbol> back = decode(encode(seq, params), params);
        if (!std::equal(back.begin(), back.end(), seq.begin(), seq.end())) {
          ++failures;
        }
      });
    }
  }
  return make_check("codec_round_trip_exhaustive",
                    "decode(encode(x)) = x for all x, k<=4, n<=5",
                    static_cast<double>(failures), 0.0, failures == 0,
                    "cases=" + std::to_string(cases));
}

CheckResult check_round_trip_randomized(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x524f554e44545249ull);
  std::uint64_t failures = 0;
  const std::uint64_t cases = 10000;
  for (std::uint64_t t = 0; t < cases; ++t) {
    const std::uint32_t k =
        1 + static_cast<std::uint32_t>(uniform_unit(rng) * 64.0);
    const std::uint64_t n =
        1 + static_cast<std::uint64_t>(uniform_unit(rng) * 256.0);
    std::vector<Symbol> seq(n);
    for (auto& s : seq) {
      s = static_cast<Symbol>(uniform_unit(rng) * k);
      if (s >= k) s = k - 1;
    }
    const CodecParams params{k, n};
    const std::vector<Symbol> back = decode(encode(seq, params), params);
    if (back != seq) ++failures;
  }
  return make_check("codec_round_trip_randomized",
                    "decode(encode(x)) = x, 1e4 seeded cases, k<=64, n<=256",
                    static_cast<double>(failures), 0.0, failures == 0,
                    "cases=" + std::to_string(cases));
}

// Exact sum_x 2^(-|codeword(x)|) <= 1 over all sequences, as integers scaled
// by 2^(max length).
CheckResult check_kraft_exact() {
  bool pass = true;
  double worst_ratio = 0.0;
  std::string worst;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const CodecParams params{k, n};
      std::uint64_t max_bits = 0;
      TypeVector type;
      type.n = n;
      for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
        type.counts.assign(counts.begin(), counts.end());
        max_bits = std::max(max_bits, codeword_length_bits(type, params));
      });
      BigUint scaled_sum(0);
      for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
        type.counts.assign(counts.begin(), counts.end());
        const std::uint64_t bits = codeword_length_bits(type, params);
        scaled_sum += multinomial(type) * pow2(max_bits - bits);
      });
      const BigUint budget = pow2(max_bits);
      if (scaled_sum > budget) pass = false;
      const double ratio = scaled_sum.to_double() / budget.to_double();
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = fmt_kn(k, n);
      }
    }
  }
  return make_check("codec_kraft_exact",
                    "sum_x 2^(-|codeword(x)|) <= 1 (exact integers)",
                    worst_ratio, 1.0, pass, "worst at " + worst);
}

// Exact sum_x q(x) <= 1 for q(x) = (1/N_d) prod (mu_j/n)^mu_j, cleared to a
// common integer denominator n^n * prod_d N_d.
CheckResult check_implied_q_subprobability() {
  bool pass = true;
  double worst_ratio = 0.0;
  std::string worst;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const std::uint32_t dmax = static_cast<std::uint32_t>(
          std::min<std::uint64_t>(n, k));
      std::vector<BigUint> normalizers(dmax + 1, BigUint(1));
      for (std::uint32_t d = 1; d <= dmax; ++d) {
        normalizers[d] = layout_normalizer(k, n, d);
      }
      BigUint denominator = big_pow(n, n);
      for (std::uint32_t d = 1; d <= dmax; ++d) denominator *= normalizers[d];

      BigUint numerator(0);
      TypeVector type;
      type.n = n;
      for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
        type.counts.assign(counts.begin(), counts.end());
        const std::uint32_t d = type.distinct_count();
        BigUint contribution = multinomial(type);
        for (std::uint64_t mu : counts) {
          if (mu > 0) contribution *= big_pow(mu, mu);
        }
        for (std::uint32_t other = 1; other <= dmax; ++other) {
          if (other != d) contribution *= normalizers[other];
        }
        numerator += contribution;
      });
      if (numerator > denominator) pass = false;
      const double ratio = numerator.to_double() / denominator.to_double();
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = fmt_kn(k, n);
      }
    }
  }
  return make_check("codec_implied_q_subprobability",
                    "sum_x (1/N_d) prod (mu_j/n)^mu_j <= 1 (exact rationals)",
                    worst_ratio, 1.0, pass, "worst at " + worst);
}

CheckResult check_dominance() {
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 5; ++n) {
      const CodecParams params{k, n};
      for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
        const TypeVector type = type_of(seq, k);
        const double concrete =
            static_cast<double>(codeword_length_bits(type, params));
        const double ideal = ideal_codelength_bits(type, params);
        worst_excess = std::max(worst_excess, concrete - ideal);
      });
    }
  }
  return make_check("codec_dominance",
                    "|codeword(x)| <= ideal_codelength(type(x)) + 4",
                    worst_excess, 4.0, worst_excess <= 4.0 + 1e-9);
}

CheckResult check_type_sufficiency() {
  std::uint64_t violations = 0;
  for (std::uint32_t k = 2; k <= 4; ++k) {
    const std::uint64_t n = 4;
    const CodecParams params{k, n};
    std::map<std::vector<std::uint64_t>, std::uint64_t> length_by_type;
    for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
      const TypeVector type = type_of(seq, k);
      const std::uint64_t bits = encode(seq, params).bit_count;
      auto [it, inserted] = length_by_type.try_emplace(type.counts, bits);
      if (!inserted && it->second != bits) ++violations;
      // Relabeled multisets must also agree: compare against the sorted key.
      std::vector<std::uint64_t> sorted = type.sorted_counts_desc();
      TypeVector canonical{sorted, n};
      if (codeword_length_bits(canonical, params) != bits) ++violations;
    });
  }
  return make_check("codec_type_sufficiency",
                    "|codeword| is constant on types and relabelings",
                    static_cast<double>(violations), 0.0, violations == 0);
}

CheckResult check_length_formula() {
  std::uint64_t violations = 0;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const std::uint64_t n = 4;
    const CodecParams params{k, n};
    for_each_sequence(k, n, [&](std::span<const Symbol> seq) {
      const TypeVector type = type_of(seq, k);
      if (codeword_length_bits(type, params) != encode(seq, params).bit_count) {
        ++violations;
      }
    });
  }
  return make_check("codec_length_formula",
                    "codeword_length(type(x)) = |encode(x)| for all x",
                    static_cast<double>(violations), 0.0, violations == 0);
}

// --------------------------------------------------------------------------
// shtarkov suite
// --------------------------------------------------------------------------

CheckResult check_grouped_equals_naive(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5348544152ull);
  double worst = 0.0;
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      std::vector<Distribution> bases;
      bases.push_back(Distribution(std::vector<double>(k, 1.0 / k)));
      if (k > 1) bases.push_back(zipf_distribution(2.0, k));
      bases.push_back(sample_distribution(rng, k));
      for (const auto& base : bases) {
        const double grouped =
            shtarkov_sum_permutation_class(base, n, ShtarkovMethod::kProfileGrouped)
                .log2_sum;
        const double naive =
            shtarkov_sum_permutation_class(base, n, ShtarkovMethod::kExhaustive)
                .log2_sum;
        worst = std::max(worst, std::abs(grouped - naive) /
                                    std::max(1.0, std::abs(naive)));
      }
    }
  }
  return make_check("shtarkov_grouped_equals_naive",
                    "type-grouped S = per-sequence S (rel 1e-10), k<=4, n<=4",
                    worst, 1e-10, worst <= 1e-10);
}

CheckResult check_rearrangement_vs_bruteforce(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5245415252ull);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t k =
        2 + static_cast<std::uint32_t>(uniform_unit(rng) * 4.0);
    const std::uint64_t n =
        1 + static_cast<std::uint64_t>(uniform_unit(rng) * 4.0);
    const Distribution base = sample_distribution(rng, std::min(k, 5u));
    TypeVector type;
    type.n = n;
    for_each_type(base.size(), n, [&](std::span<const std::uint64_t> counts) {
      type.counts.assign(counts.begin(), counts.end());
      const double fast = max_likelihood_permutation(type, base);
      // Brute force over all permutations of the base probabilities.
      std::vector<double> perm = base.probs();
      std::sort(perm.begin(), perm.end());
      double best = 0.0;
      do {
        double prob = 1.0;
        for (std::uint32_t i = 0; i < perm.size(); ++i) {
          prob *= std::pow(perm[i], static_cast<double>(counts[i]));
        }
        best = std::max(best, prob);
      } while (std::next_permutation(perm.begin(), perm.end()));
      worst = std::max(worst, std::abs(fast - best) / std::max(best, 1e-300));
    });
  }
  return make_check("shtarkov_rearrangement_vs_bruteforce",
                    "sorted pairing attains max over all k! relabelings",
                    worst, 1e-9, worst <= 1e-9, "20 seeded bases, k<=5, n<=4");
}

CheckResult check_theorem1_grid() {
  double min_margin = std::numeric_limits<double>::infinity();
  std::string worst;
  int points = 0;
  for (double alpha : {1.5, 2.0, 3.0}) {
    for (std::uint32_t k : {8u, 16u}) {
      const auto n_max = static_cast<std::uint64_t>(
          std::floor(std::pow(static_cast<double>(k), 1.0 / alpha) + 1e-9));
      const Distribution base = zipf_distribution(alpha, k);
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double log2_sum = shtarkov_sum_permutation_class(base, n).log2_sum;
        const double bound = worst_case_lower_bound_zipf(alpha, k, n).value;
        const double margin = log2_sum - bound;
        ++points;
        if (margin < min_margin) {
          min_margin = margin;
          std::ostringstream os;
          os << "alpha=" << alpha << ",k=" << k << ",n=" << n;
          worst = os.str();
        }
      }
    }
  }
  return make_check("shtarkov_theorem1_grid",
                    "log2 S >= n*log2((k-n)/(n^alpha*C)) on the power-law grid",
                    min_margin, 0.0, min_margin >= -1e-9,
                    "points=" + std::to_string(points) + ", tightest at " + worst);
}

CheckResult check_log_kfact_cap(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x4b46414354ull);
  double max_excess = -std::numeric_limits<double>::infinity();
  int points = 0;
  auto probe = [&](const Distribution& base, std::uint64_t n) {
    const double log2_sum = shtarkov_sum_permutation_class(base, n).log2_sum;
    max_excess = std::max(max_excess, log2_sum - log2_factorial(base.size()));
    ++points;
  };
  for (double alpha : {1.5, 2.0, 3.0}) {
    for (std::uint32_t k : {8u, 16u}) {
      const auto n_max = static_cast<std::uint64_t>(
          std::floor(std::pow(static_cast<double>(k), 1.0 / alpha) + 1e-9));
      const Distribution base = zipf_distribution(alpha, k);
      for (std::uint64_t n = 1; n <= n_max; ++n) probe(base, n);
    }
  }
  for (int i = 0; i < 10; ++i) probe(sample_distribution(rng, 8), 3);
  return make_check("shtarkov_log_kfact_cap",
                    "log2 S(permutation class) <= log2 k!", max_excess, 0.0,
                    max_excess <= 1e-9, "points=" + std::to_string(points));
}

CheckResult check_shtarkov_monotonicity(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x4d4f4e4full);
  double min_step = std::numeric_limits<double>::infinity();
  std::vector<Distribution> bases;
  bases.push_back(zipf_distribution(2.0, 4));
  bases.push_back(Distribution(std::vector<double>(5, 0.2)));
  bases.push_back(sample_distribution(rng, 4));
  for (const auto& base : bases) {
    double prev = shtarkov_sum_permutation_class(base, 1).log2_sum;
    for (std::uint64_t n = 2; n <= 4; ++n) {
      const double cur = shtarkov_sum_permutation_class(base, n).log2_sum;
      min_step = std::min(min_step, cur - prev);
      prev = cur;
    }
  }
  return make_check("shtarkov_monotonicity",
                    "log2 S(class, n+1) >= log2 S(class, n)", min_step, 0.0,
                    min_step >= -1e-9);
}

CheckResult check_envelope_bracket() {
  // The exact sorted distribution used as its own envelope collapses the
  // bracket; a doubled power-law envelope must contain the member value.
  const Distribution zipf8 = zipf_distribution(2.0, 8);
  const EnvelopeClass exact(zipf8.sorted());
  const EnvelopeBracket collapsed = shtarkov_sum_envelope_class(exact, 3);
  const double perm = shtarkov_sum_permutation_class(zipf8, 3).log2_sum;
  const double collapse_err =
      std::max(std::abs(collapsed.log2_upper - perm),
               std::abs(collapsed.log2_lower - perm));

  std::vector<double> doubled = zipf8.sorted();
  for (auto& f : doubled) f *= 2.0;
  const EnvelopeBracket bracket = shtarkov_sum_envelope_class(EnvelopeClass(doubled), 3);
  const bool contains =
      bracket.log2_lower <= perm + 1e-9 && perm <= bracket.log2_upper + 1e-9;

  return make_check("shtarkov_envelope_bracket",
                    "envelope bracket contains the member-class log2 S",
                    collapse_err, 1e-9, collapse_err <= 1e-9 && contains,
                    contains ? "doubled-envelope bracket contains member value"
                             : "doubled-envelope bracket violated");
}

CheckResult check_thm1_example() {
  const double c_norm = zipf_normalizer(2.0, 16);
  const double bound = 2.0 * std::log2(14.0 / (4.0 * c_norm));
  const double log2_sum =
      shtarkov_sum_permutation_class(zipf_distribution(2.0, 16), 2).log2_sum;
  return make_check("shtarkov_thm1_point",
                    "log2 S(perm(zipf(2,16)), n=2) >= 2*log2(14/(4*C))",
                    log2_sum, bound, log2_sum >= bound - 1e-9);
}

// --------------------------------------------------------------------------
// redundancy suite
// --------------------------------------------------------------------------

std::vector<std::vector<Distribution>> tiny_classes() {
  std::vector<std::vector<Distribution>> classes;
  classes.push_back({Distribution({1.0, 0.0}), Distribution({0.0, 1.0})});
  classes.push_back({Distribution({0.8, 0.2}), Distribution({0.2, 0.8})});
  classes.push_back({Distribution({0.6, 0.4}), Distribution({0.4, 0.6})});
  {
    std::vector<Distribution> perms;
    std::vector<double> p = zipf_distribution(2.0, 3).probs();
    std::sort(p.begin(), p.end());
    do {
      perms.push_back(Distribution(p));
    } while (std::next_permutation(p.begin(), p.end()));
    classes.push_back(std::move(perms));
  }
  {
    std::vector<Distribution> perms;
    std::vector<double> p = {0.2, 0.3, 0.5};
    do {
      perms.push_back(Distribution(p));
    } while (std::next_permutation(p.begin(), p.end()));
    classes.push_back(std::move(perms));
  }
  return classes;
}

CheckResult check_minimax_singleton(double tol) {
  const std::vector<Distribution> members = {Distribution({0.5, 0.5})};
  const double value = minimax_expected_redundancy(members, 4, tol).value_bits;
  return make_check("minimax_singleton",
                    "single-member class has zero minimax redundancy",
                    std::abs(value), 1e-9, std::abs(value) <= 1e-9);
}

CheckResult check_minimax_point_masses(double tol) {
  const std::vector<Distribution> members = {Distribution({1.0, 0.0}),
                                             Distribution({0.0, 1.0})};
  const double value = minimax_expected_redundancy(members, 1, tol).value_bits;
  return make_check("minimax_two_point_masses",
                    "two point masses at n=1 cost exactly 1 bit",
                    value, 1.0, std::abs(value - 1.0) <= 1e-6);
}

CheckResult check_type_equivalence(double tol) {
  double worst = 0.0;
  int count = 0;
  for (const auto& members : tiny_classes()) {
    for (std::uint64_t n : {2ull, 3ull}) {
      const EquivalenceResult eq =
          type_redundancy_equivalence_check(members, n, tol);
      worst = std::max(worst, std::abs(eq.sequence_value - eq.type_value));
      ++count;
    }
  }
  return make_check("minimax_type_equivalence",
                    "minimax over sequences = minimax over types",
                    worst, 2.0 * tol, worst <= 2.0 * tol,
                    "classes*lengths=" + std::to_string(count));
}

CheckResult check_poisson_halving(double tol) {
  double min_margin = std::numeric_limits<double>::infinity();
  int count = 0;
  for (const auto& members : tiny_classes()) {
    for (std::uint64_t n : {2ull, 3ull}) {
      const PoissonHalvingResult result =
          lower_bound_poisson_halving_check(members, n, tol);
      min_margin = std::min(min_margin, result.fixed_length_value -
                                            0.5 * result.poisson_value);
      ++count;
    }
  }
  return make_check("minimax_poisson_halving",
                    "minimax(P^n) >= minimax(P^poisson(n)) / 2",
                    min_margin, 0.0, min_margin >= -tol,
                    "classes*lengths=" + std::to_string(count));
}

CheckResult check_upper_dominance_grid(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x444f4d31ull);
  double max_excess = -std::numeric_limits<double>::infinity();
  double min_margin = std::numeric_limits<double>::infinity();
  double min_achieved = std::numeric_limits<double>::infinity();
  int points = 0;
  for (std::uint32_t k : {2u, 4u, 8u}) {
    const std::vector<Distribution> dists = grid_distributions(k, rng);
    for (std::uint64_t n : {2ull, 4ull, 8ull}) {
      for (const auto& p : dists) {
        const double achieved = achieved_redundancy(p, n).achieved_bits;
        const double d = expected_distinct(p, n);
        const double bound = distinct_upper_bound(k, n, d).value;
        max_excess = std::max(max_excess, achieved - bound);
        min_margin = std::min(min_margin, bound - achieved);
        min_achieved = std::min(min_achieved, achieved);
        ++points;
      }
    }
  }
  std::ostringstream os;
  os << "points=" << points << ", min margin=" << min_margin
     << " bits, min achieved=" << min_achieved;
  return make_check("redundancy_upper_dominance_grid",
                    "achieved <= d*log2(kn/d^2) + (2log2(e)+1)d + log2(n+1)",
                    max_excess, 0.0,
                    max_excess <= 1e-9 && min_achieved >= -1e-9, os.str());
}

CheckResult check_small_lambda_ratio() {
  const BoundReport report = zipf_small_lambda_sums(2.0, 10000, 100);
  const double r1 = report.term("lambda_ratio");
  const double r2 = report.term("entropy_ratio");
  const bool pass = r1 >= 0.5 && r1 <= 2.0 && r2 >= 0.5 && r2 <= 2.0;
  std::ostringstream os;
  os << "lambda_ratio=" << r1 << ", entropy_ratio=" << r2;
  return make_check("bounds_small_lambda_ratio",
                    "exact small-rate sums within [0.5,2] of closed forms "
                    "at alpha=2, k=1e4, n=1e2",
                    std::max(r1, r2), 2.0, pass, os.str());
}

CheckResult check_theorem_bounds_grid() {
  double min_gap = std::numeric_limits<double>::infinity();
  int points = 0;
  for (double alpha : {1.5, 2.0, 3.0}) {
    for (std::uint64_t n : {16ull, 256ull}) {
      for (std::uint64_t ratio : {2ull, 8ull, 64ull}) {
        const std::uint32_t k = static_cast<std::uint32_t>(ratio * n);
        const BoundReport report = zipf_theorem_bounds(alpha, 1.0, k, n);
        min_gap = std::min(min_gap, report.term("upper") - report.term("lower"));
        ++points;
      }
    }
  }
  return make_check("bounds_theorem_upper_ge_lower",
                    "power-law envelope upper bound >= lower bound",
                    min_gap, 0.0, min_gap >= 0.0,
                    "points=" + std::to_string(points));
}

CheckResult check_theta_scaling() {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::uint64_t n : {16ull, 64ull, 256ull}) {
    const std::uint32_t k = static_cast<std::uint32_t>(8 * n);
    const BoundReport report = zipf_theorem_bounds(2.0, 1.0, k, n);
    const double normalized =
        report.term("upper") /
        (std::sqrt(static_cast<double>(n)) * std::log2(static_cast<double>(k)));
    lo = std::min(lo, normalized);
    hi = std::max(hi, normalized);
  }
  std::ostringstream os;
  os << "normalized range [" << lo << ", " << hi << "]";
  return make_check("bounds_theta_scaling",
                    "upper/(n^(1/alpha) log2 k) varies by < 4x across n",
                    hi / lo, 4.0, hi / lo < 4.0, os.str());
}

CheckResult check_witness_profile_cap(double tol) {
  // The near-optimal witness mixture should give every type no more mass
  // than 1/C(k, distinct) since at least that many types share a profile.
  std::vector<double> p = zipf_distribution(2.0, 3).probs();
  std::sort(p.begin(), p.end());
  std::vector<Distribution> members;
  do {
    members.push_back(Distribution(p));
  } while (std::next_permutation(p.begin(), p.end()));
  const std::uint64_t n = 2;
  const CapacityResult capacity =
      minimax_expected_redundancy(members, n, tol, OutcomeSpace::kTypes);
  double worst = 0.0;
  std::size_t index = 0;
  TypeVector type;
  type.n = n;
  for_each_type(3, n, [&](std::span<const std::uint64_t> counts) {
    type.counts.assign(counts.begin(), counts.end());
    const double cap = std::exp2(-log2_binomial(3, type.distinct_count()));
    worst = std::max(worst, capacity.mixture[index] / cap);
    ++index;
  });
  return make_check("minimax_witness_profile_cap",
                    "witness q(type) <= 1/C(k, distinct(type))", worst, 1.0,
                    true, "margin report on permutations of zipf(2,3), n=2",
                    /*fatal=*/false);
}

CheckResult check_distinct_lower_margin(double tol) {
  // The closed-form lower bound carries (1 + o(1)) factors, so at desk scale
  // it is reported as a margin, not asserted.
  std::vector<double> p = zipf_distribution(2.0, 4).probs();
  std::sort(p.begin(), p.end());
  std::vector<Distribution> members;
  do {
    members.push_back(Distribution(p));
  } while (std::next_permutation(p.begin(), p.end()));
  const std::uint64_t n = 2;
  const double minimax =
      minimax_expected_redundancy(members, n, tol, OutcomeSpace::kTypes)
          .value_bits;
  const Distribution base = zipf_distribution(2.0, 4);
  std::vector<double> lambdas;
  for (double prob : base.probs()) lambdas.push_back(2.0 * prob);
  const double evaluator =
      distinct_lower_bound(4, n, expected_distinct(base, n), lambdas).value;
  std::ostringstream os;
  os << "minimax=" << minimax << ", closed form=" << evaluator;
  return make_check("minimax_vs_distinct_lower_margin",
                    "minimax >= closed-form lower bound (margin report)",
                    minimax - evaluator, 0.0, true, os.str(), /*fatal=*/false);
}

// --------------------------------------------------------------------------
// concentration suite
// --------------------------------------------------------------------------

CheckResult check_poisson_entropy_bound_grid() {
  double max_excess = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 69; ++i) {
    const double lambda = 0.01 * i;
    max_excess = std::max(
        max_excess, poisson_entropy(lambda) - poisson_entropy_bound(lambda));
  }
  return make_check("poisson_entropy_bound_grid",
                    "H(Poisson(lambda)) <= lambda(log2 e - log2 lambda)"
                    " + e^-lambda lambda^2/(1-lambda), lambda in 0.01..0.69",
                    max_excess, 0.0, max_excess <= 0.0);
}

CheckResult check_high_lambda_cap() {
  double max_excess = -std::numeric_limits<double>::infinity();
  for (double lambda : {0.7, 0.9, 1.0, 1.5, 2.0, 4.0, 8.0, 16.0, 64.0}) {
    const double cap = 0.5 * std::log2(2.0 * std::numbers::pi *
                                       std::numbers::e * (lambda + 1.0 / 12.0));
    max_excess = std::max(max_excess, poisson_entropy(lambda) - cap);
  }
  return make_check("poisson_entropy_gaussian_cap",
                    "H(Poisson(lambda)) <= 0.5*log2(2 pi e (lambda+1/12))",
                    max_excess, 0.0, max_excess <= 0.0);
}

CheckResult check_poissonization_gap(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x44504f49ull);
  double worst = -std::numeric_limits<double>::infinity();
  int points = 0;
  auto probe = [&](const Distribution& p, std::uint64_t n) {
    const double d = expected_distinct(p, n);
    const PoissonOccupancy occ = poisson_occupancy(p, n);
    const double gap = std::abs(occ.distinct_mean - d);
    const double cap = 2.0 * occ.doubleton_mean / static_cast<double>(n);
    worst = std::max(worst, gap - cap);
    ++points;
  };
  for (std::uint32_t k : {2u, 8u, 32u}) {
    for (std::uint64_t n : {2ull, 8ull, 32ull}) {
      probe(zipf_distribution(2.0, k), n);
      probe(Distribution(std::vector<double>(k, 1.0 / k)), n);
    }
  }
  probe(zipf_distribution(1.5, 16), 4);
  probe(sample_distribution(rng, 6), 5);
  return make_check("poissonization_distinct_gap",
                    "|E distinct(poisson) - E distinct| < 2 E[doubletons]/n",
                    worst, 0.0, worst < 0.0, "pairs=" + std::to_string(points));
}

CheckResult check_concentration_mc(const VerifyConfig& config) {
  double worst = -std::numeric_limits<double>::infinity();
  bool pass = true;
  int runs = 0;
  const std::vector<std::pair<Distribution, std::uint64_t>> sources = {
      {Distribution(std::vector<double>(16, 1.0 / 16.0)), 16},
      {zipf_distribution(2.0, 64), 32},
  };
  for (const auto& [p, n] : sources) {
    for (double s : {1.0, 2.0, 3.0}) {
      const ConcentrationReport report =
          concentration_check(p, n, s, config.trials, config.seed);
      pass = pass && report.pass;
      worst = std::max(worst, report.estimate -
                                  (report.tail_bound + 3.0 * report.std_error));
      ++runs;
    }
  }
  return make_check("concentration_lower_tail_mc",
                    "Pr[distinct < mean - sqrt(2vs)] <= e^-s (+3 SE), Monte Carlo",
                    worst, 0.0, pass, "runs=" + std::to_string(runs));
}

CheckResult check_type_entropy_caps() {
  double max_excess = -std::numeric_limits<double>::infinity();
  const std::vector<std::pair<Distribution, std::uint64_t>> sources = {
      {Distribution(std::vector<double>(4, 0.25)), 2},
      {zipf_distribution(2.0, 32), 8},
      {zipf_distribution(1.5, 16), 4},
  };
  for (const auto& [p, n] : sources) {
    const PoissonTypeEntropyReport report = type_entropy_poisson(p, n);
    max_excess = std::max(max_excess,
                          report.total_bits -
                              (report.low_cap_bits + report.high_cap_bits));
  }
  return make_check("poisson_type_entropy_caps",
                    "H(type) <= sum(3l - l log2 l | l<0.7)"
                    " + sum(0.5 log2(2 pi e (l+1/12)) | l>=0.7)",
                    max_excess, 0.0, max_excess <= 0.0);
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& check : checks) {
    if (check.fatal && !check.pass) return false;
  }
  return true;
}

SuiteResult run_codec_suite(const VerifyConfig& config) {
  SuiteResult suite;
  suite.name = "codec";
  suite.checks.push_back(check_round_trip_exhaustive());
  suite.checks.push_back(check_round_trip_randomized(config.seed));
  suite.checks.push_back(check_kraft_exact());
  suite.checks.push_back(check_implied_q_subprobability());
  suite.checks.push_back(check_dominance());
  suite.checks.push_back(check_type_sufficiency());
  suite.checks.push_back(check_length_formula());
  return suite;
}

SuiteResult run_shtarkov_suite(const VerifyConfig& config) {
  SuiteResult suite;
  suite.name = "shtarkov";
  suite.checks.push_back(check_grouped_equals_naive(config.seed));
  suite.checks.push_back(check_rearrangement_vs_bruteforce(config.seed));
  suite.checks.push_back(check_theorem1_grid());
  suite.checks.push_back(check_thm1_example());
  suite.checks.push_back(check_log_kfact_cap(config.seed));
  suite.checks.push_back(check_shtarkov_monotonicity(config.seed));
  suite.checks.push_back(check_envelope_bracket());
  return suite;
}

SuiteResult run_redundancy_suite(const VerifyConfig& config) {
  SuiteResult suite;
  suite.name = "redundancy";
  suite.checks.push_back(check_minimax_singleton(config.tol));
  suite.checks.push_back(check_minimax_point_masses(config.tol));
  suite.checks.push_back(check_type_equivalence(config.tol));
  suite.checks.push_back(check_poisson_halving(config.tol));
  suite.checks.push_back(check_upper_dominance_grid(config.seed));
  suite.checks.push_back(check_small_lambda_ratio());
  suite.checks.push_back(check_theorem_bounds_grid());
  suite.checks.push_back(check_theta_scaling());
  suite.checks.push_back(check_witness_profile_cap(config.tol));
  suite.checks.push_back(check_distinct_lower_margin(config.tol));
  return suite;
}

SuiteResult run_concentration_suite(const VerifyConfig& config) {
  SuiteResult suite;
  suite.name = "concentration";
  suite.checks.push_back(check_poisson_entropy_bound_grid());
  suite.checks.push_back(check_high_lambda_cap());
  suite.checks.push_back(check_poissonization_gap(config.seed));
  suite.checks.push_back(check_concentration_mc(config));
  suite.checks.push_back(check_type_entropy_caps());
  return suite;
}

std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyConfig& config) {
  std::vector<SuiteResult> suites;
  const bool all = which == "all";
  if (all || which == "codec") suites.push_back(run_codec_suite(config));
  if (all || which == "shtarkov") suites.push_back(run_shtarkov_suite(config));
  if (all || which == "redundancy") {
    suites.push_back(run_redundancy_suite(config));
  }
  if (all || which == "concentration") {
    suites.push_back(run_concentration_suite(config));
  }
  if (suites.empty()) {
    throw std::invalid_argument("unknown suite: " + which);
  }
  return suites;
}

nlohmann::ordered_json suites_json(const std::vector<SuiteResult>& suites,
                                   const VerifyConfig& config) {
  nlohmann::ordered_json doc;
  doc["config"] = {{"seed", config.seed},
                   {"trials", config.trials},
                   {"tol", config.tol}};
  bool all_pass = true;
  auto& suite_array = doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& suite : suites) {
    nlohmann::ordered_json entry;
    entry["suite"] = suite.name;
    entry["pass"] = suite.passed();
    all_pass = all_pass && suite.passed();
    auto& checks = entry["checks"] = nlohmann::ordered_json::array();
    for (const auto& check : suite.checks) {
      checks.push_back({{"name", check.name},
                        {"claim", check.claim},
                        {"measured", check.measured},
                        {"bound", check.bound},
                        {"pass", check.pass},
                        {"fatal", check.fatal},
                        {"detail", check.detail}});
    }
    suite_array.push_back(std::move(entry));
  }
  doc["pass"] = all_pass;
  return doc;
}

}  // namespace uec
