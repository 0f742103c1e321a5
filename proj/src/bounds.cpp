// bounds.cpp
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

#include "uec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uec/combinatorics.hpp"
#include "uec/model.hpp"

namespace uec {

namespace {

constexpr double kLog2E = std::numbers::log2e;

double log2_pi_e() { return std::log2(std::numbers::pi * std::numbers::e); }

std::uint64_t clamp_to_index(double value, std::uint64_t lo, std::uint64_t hi) {
  const double rounded = std::round(value);
  if (rounded < static_cast<double>(lo)) return lo;
  if (rounded > static_cast<double>(hi)) return hi;
  return static_cast<std::uint64_t>(rounded);
}

}  // namespace

double BoundReport::term(const std::string& key) const {
  for (const auto& [name, value] : terms) {
    if (name == key) return value;
  }
  throw std::out_of_range("BoundReport: no term named " + key);
}

BoundReport worst_case_lower_bound_zipf(double alpha, std::uint32_t k,
                                        std::uint64_t n) {
  if (!(alpha > 1.0)) throw std::invalid_argument("bound: alpha must exceed 1");
  if (k == 0 || n == 0) throw std::invalid_argument("bound: k, n must be positive");
  const double n_alpha = std::pow(static_cast<double>(n), alpha);
  if (n_alpha > static_cast<double>(k) * (1.0 + 1e-9)) {
    throw std::invalid_argument("bound: requires n <= k^(1/alpha)");
  }
  const double c_norm = zipf_normalizer(alpha, k);
  const double ratio = (static_cast<double>(k) - static_cast<double>(n)) /
                       (n_alpha * c_norm);
  BoundReport report;
  report.name = "worst_case_lower_bound_zipf";
  report.claim = "log2 S >= n*log2((k-n)/(n^alpha*C))";
  report.terms = {{"log2_ratio", std::log2(ratio)}};
  report.params = {{"alpha", alpha},
                   {"k", static_cast<double>(k)},
                   {"n", static_cast<double>(n)},
                   {"c_norm", c_norm}};
  report.value = static_cast<double>(n) * report.term("log2_ratio");
  return report;
}

BoundReport distinct_upper_bound(std::uint32_t k, std::uint64_t n, double d) {
  const double max_d = static_cast<double>(std::min<std::uint64_t>(n, k));
  if (!(d > 0.0) || d > max_d + 1e-9) {
    throw std::invalid_argument("distinct_upper_bound: d out of range");
  }
  BoundReport report;
  report.name = "distinct_upper_bound";
  report.claim = "Rbar <= d*log2(k*n/d^2) + (2*log2(e)+1)*d + log2(n+1)";
  const double support_term =
      d * std::log2(static_cast<double>(k) * static_cast<double>(n) / (d * d));
  const double per_distinct_term = (2.0 * kLog2E + 1.0) * d;
  const double length_term = std::log2(static_cast<double>(n) + 1.0);
  report.terms = {{"support_term", support_term},
                  {"per_distinct_term", per_distinct_term},
                  {"length_term", length_term}};
  report.params = {{"k", static_cast<double>(k)},
                   {"n", static_cast<double>(n)},
                   {"d", d}};
  report.value = support_term + per_distinct_term + length_term;
  return report;
}

BoundReport distinct_lower_bound(std::uint32_t k, std::uint64_t n, double d,
                                 std::span<const double> lambdas) {
  if (!(d > 0.0) || d > static_cast<double>(k) + 1e-9) {
    throw std::invalid_argument("distinct_lower_bound: d out of range");
  }
  const std::uint64_t d_clamped = clamp_to_index(d, 1, k);
  double small_lambda_sum = 0.0;
  for (double lambda : lambdas) {
    if (lambda > 0.0 && lambda < 0.7) {
      small_lambda_sum += 3.0 * lambda - lambda * std::log2(lambda);
    }
  }
  BoundReport report;
  report.name = "distinct_lower_bound";
  report.claim =
      "Rbar >= log2 C(k,d) - d*log2(n/d + 1/6) - d*log2(pi*e)"
      " - sum_{lambda<0.7}(3*lambda - lambda*log2 lambda)";
  const double choose_term = log2_binomial(k, d_clamped);
  const double width_term =
      d * std::log2(static_cast<double>(n) / d + 1.0 / 6.0);
  const double pi_e_term = d * log2_pi_e();
  report.terms = {{"choose_term", choose_term},
                  {"width_term", width_term},
                  {"pi_e_term", pi_e_term},
                  {"small_lambda_term", small_lambda_sum},
                  // evaluated value of the (1 + o(1)) factor; margin only
                  {"asymptotic_factor", 1.0}};
  report.params = {{"k", static_cast<double>(k)},
                   {"n", static_cast<double>(n)},
                   {"d_raw", d},
                   {"d_clamped", static_cast<double>(d_clamped)}};
  report.value = choose_term - width_term - pi_e_term - small_lambda_sum;
  return report;
}

BoundReport envelope_distinct_bound(double alpha, double c, std::uint32_t k,
                                    std::uint64_t n) {
  if (!(alpha > 1.0)) throw std::invalid_argument("bound: alpha must exceed 1");
  if (!(c > 0.0)) throw std::invalid_argument("bound: c must be positive");
  const double n_pow = std::pow(static_cast<double>(n), 1.0 / alpha);
  const double head_coefficient = std::pow(c, -1.0 / alpha);
  const double tail_coefficient = c * c / (alpha - 1.0);

  // Exact intermediates for the envelope f(i) = c i^-alpha on [1..k].
  double head_count = 0.0;
  double tail_sum = 0.0;
  const double cutoff = 1.0 / static_cast<double>(n);
  for (std::uint32_t i = 1; i <= k; ++i) {
    const double f = c * std::pow(static_cast<double>(i), -alpha);
    if (f >= cutoff) {
      head_count += 1.0;
    } else {
      tail_sum += static_cast<double>(n) * f;
    }
  }

  BoundReport report;
  report.name = "envelope_distinct_bound";
  report.claim = "d <= (c^(-1/alpha) + c^2/(alpha-1)) * n^(1/alpha)";
  report.terms = {{"head_coefficient", head_coefficient},
                  {"tail_coefficient", tail_coefficient},
                  {"head_count_exact", head_count},
                  {"tail_sum_exact", tail_sum}};
  report.params = {{"alpha", alpha},
                   {"c", c},
                   {"k", static_cast<double>(k)},
                   {"n", static_cast<double>(n)}};
  report.value = (head_coefficient + tail_coefficient) * n_pow;
  return report;
}

BoundReport zipf_small_lambda_sums(double alpha, std::uint32_t k,
                                   std::uint64_t n) {
  if (!(alpha > 1.0)) throw std::invalid_argument("bound: alpha must exceed 1");
  const double c_norm = zipf_normalizer(alpha, k);
  const double rate_scale = 10.0 * static_cast<double>(n) / (7.0 * c_norm);
  const std::uint64_t threshold_index =
      static_cast<std::uint64_t>(std::floor(std::pow(rate_scale, 1.0 / alpha)));
  if (k <= threshold_index) {
    throw std::invalid_argument(
        "zipf_small_lambda_sums: no small-rate tail below support size");
  }

  double exact_lambda_sum = 0.0;
  double exact_entropy_sum = 0.0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    const double lambda = static_cast<double>(n) *
                          std::pow(static_cast<double>(i), -alpha) / c_norm;
    if (lambda < 0.7) {
      exact_lambda_sum += lambda;
      exact_entropy_sum -= lambda * std::log2(lambda);
    }
  }

  const double approx_lambda_sum =
      (7.0 / (10.0 * (alpha - 1.0))) * std::pow(rate_scale, 1.0 / alpha);
  const double approx_entropy_sum =
      ((11.2 * alpha - 4.2) / (10.0 * (alpha - 1.0) * (alpha - 1.0))) *
          std::pow(rate_scale, 1.0 / alpha) +
      (7.0 / 10.0) * std::log2(rate_scale);

  BoundReport report;
  report.name = "zipf_small_lambda_sums";
  report.claim =
      "sum_{lambda<0.7} lambda ~ (7/(10(alpha-1)))*(10n/(7C))^(1/alpha); "
      "sum -lambda*log2 lambda ~ ((11.2a-4.2)/(10(a-1)^2))*(10n/(7C))^(1/alpha)"
      " + (7/10)*log2(10n/(7C))";
  report.terms = {{"exact_lambda_sum", exact_lambda_sum},
                  {"approx_lambda_sum", approx_lambda_sum},
                  {"lambda_ratio", exact_lambda_sum / approx_lambda_sum},
                  {"exact_entropy_sum", exact_entropy_sum},
                  {"approx_entropy_sum", approx_entropy_sum},
                  {"entropy_ratio", exact_entropy_sum / approx_entropy_sum}};
  report.params = {{"alpha", alpha},
                   {"k", static_cast<double>(k)},
                   {"n", static_cast<double>(n)},
                   {"c_norm", c_norm},
                   {"threshold_index", static_cast<double>(threshold_index)}};
  report.value = exact_entropy_sum;
  return report;
}

BoundReport zipf_theorem_bounds(double alpha, double c, std::uint32_t k,
                                std::uint64_t n) {
  if (!(alpha > 1.0)) throw std::invalid_argument("bound: alpha must exceed 1");
  if (!(c > 0.0)) throw std::invalid_argument("bound: c must be positive");
  if (k <= n) throw std::invalid_argument("zipf_theorem_bounds: requires k > n");

  const double c_norm = zipf_normalizer(alpha, k);
  const double n_pow = std::pow(static_cast<double>(n), 1.0 / alpha);
  const double c1 = std::pow(c, -1.0 / alpha) + c * c / (alpha - 1.0);
  const double c1_prime = std::pow(c_norm, 1.0 / alpha) +
                          std::pow(c_norm, -2.0) / (alpha - 1.0);
  const double c2 =
      ((32.2 * alpha - 25.2) / (10.0 * (alpha - 1.0) * (alpha - 1.0))) *
          (10.0 / (7.0 * c_norm)) -
      c1_prime * log2_pi_e();

  const std::uint64_t d_upper = clamp_to_index(c1 * n_pow, 1, k);
  const std::uint64_t d_lower = clamp_to_index(c1_prime * n_pow, 1, k);

  const double upper_choose = log2_binomial(k, d_upper);
  const double upper_linear = c1 * (2.0 - 1.0 / alpha + 2.0 * kLog2E) * n_pow *
                              std::log2(static_cast<double>(n) / c1);
  const double upper_length = std::log2(static_cast<double>(n) + 1.0);
  const double upper = upper_choose + upper_linear + upper_length;

  const double lower_choose = log2_binomial(k, d_lower);
  const double lower_linear = c1_prime * (1.0 - 1.0 / alpha) * n_pow *
                              std::log2(static_cast<double>(n) / c1_prime);
  const double lower_c2 = c2 * n_pow;
  const double lower_log = (7.0 / 10.0) *
                           std::log2(10.0 * static_cast<double>(n) /
                                     (7.0 * c_norm));
  const double lower = lower_choose - lower_linear - lower_c2 - lower_log;

  BoundReport report;
  report.name = "zipf_theorem_bounds";
  report.claim = "Rbar(envelope c*i^-alpha, k) = Theta(n^(1/alpha) * log2 k)";
  report.terms = {{"upper", upper},
                  {"upper_choose", upper_choose},
                  {"upper_linear", upper_linear},
                  {"upper_length", upper_length},
                  {"lower", lower},
                  {"lower_choose", lower_choose},
                  {"lower_linear", lower_linear},
                  {"lower_c2", lower_c2},
                  {"lower_log", lower_log},
                  {"c1", c1},
                  {"c1_prime", c1_prime},
                  {"c2", c2}};
  report.params = {{"alpha", alpha},
                   {"c", c},
                   {"k", static_cast<double>(k)},
                   {"n", static_cast<double>(n)},
                   {"c_norm", c_norm},
                   {"d_upper_raw", c1 * n_pow},
                   {"d_upper_clamped", static_cast<double>(d_upper)},
                   {"d_lower_raw", c1_prime * n_pow},
                   {"d_lower_clamped", static_cast<double>(d_lower)}};
  report.value = upper;
  return report;
}

}  // namespace uec
