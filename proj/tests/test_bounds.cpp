#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "uec/bounds.hpp"
#include "uec/combinatorics.hpp"
#include "uec/model.hpp"
#include "uec/redundancy.hpp"

using uec::BoundReport;

namespace {
constexpr double kLog2E = std::numbers::log2e;
}

TEST_CASE("worst-case lower bound evaluator") {
  const double c16 = uec::zipf_normalizer(2.0, 16);
  const BoundReport at_n1 = uec::worst_case_lower_bound_zipf(2.0, 16, 1);
  CHECK(at_n1.value == doctest::Approx(std::log2(15.0 / c16)).epsilon(1e-12));
  CHECK(at_n1.value ==
        doctest::Approx(1.0 * at_n1.term("log2_ratio")).epsilon(1e-12));

  // Boundary n = k^(1/alpha) is accepted, one past it is rejected.
  CHECK_NOTHROW(uec::worst_case_lower_bound_zipf(2.0, 16, 4));
  CHECK_THROWS_AS(uec::worst_case_lower_bound_zipf(2.0, 16, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::worst_case_lower_bound_zipf(1.0, 16, 2),
                  std::invalid_argument);
}

TEST_CASE("distinct upper bound evaluator") {
  const BoundReport trivial = uec::distinct_upper_bound(1, 8, 1.0);
  CHECK(trivial.value ==
        doctest::Approx(std::log2(8.0) + (2.0 * kLog2E + 1.0) + std::log2(9.0))
            .epsilon(1e-12));

  const BoundReport mid = uec::distinct_upper_bound(8, 8, 2.0);
  CHECK(mid.value == doctest::Approx(2.0 * std::log2(16.0) +
                                     2.0 * (2.0 * kLog2E + 1.0) +
                                     std::log2(9.0))
                         .epsilon(1e-12));
  CHECK(mid.value == doctest::Approx(mid.term("support_term") +
                                     mid.term("per_distinct_term") +
                                     mid.term("length_term"))
                         .epsilon(1e-12));

  CHECK_THROWS_AS(uec::distinct_upper_bound(4, 4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(uec::distinct_upper_bound(4, 4, 5.0), std::invalid_argument);
}

TEST_CASE("closed form dominates the binomial form of the upper bound") {
  for (std::uint32_t k : {2u, 8u, 23u, 64u}) {
    for (std::uint64_t n : {2ull, 9ull, 33ull, 64ull}) {
      const std::uint64_t dmax = std::min<std::uint64_t>(k, n);
      for (std::uint64_t d = 1; d <= dmax; ++d) {
        const double closed =
            uec::distinct_upper_bound(k, n, static_cast<double>(d)).value;
        const double binomial_form = std::log2(static_cast<double>(n)) +
                                     uec::log2_binomial(k, d) +
                                     uec::log2_binomial(n - 1, d - 1);
        CHECK(closed >= binomial_form - 1e-9);
      }
    }
  }
}

TEST_CASE("distinct lower bound evaluator") {
  const std::vector<double> large = {1.0, 2.5, 0.9};
  const BoundReport no_tail = uec::distinct_lower_bound(8, 4, 2.0, large);
  CHECK(no_tail.term("small_lambda_term") == doctest::Approx(0.0));

  const uec::Distribution zipf = uec::zipf_distribution(2.0, 32);
  std::vector<double> lambdas;
  for (double p : zipf.probs()) lambdas.push_back(8.0 * p);
  const BoundReport full = uec::distinct_lower_bound(32, 8, 4.0, lambdas);
  CHECK(full.value == doctest::Approx(full.term("choose_term") -
                                      full.term("width_term") -
                                      full.term("pi_e_term") -
                                      full.term("small_lambda_term"))
                          .epsilon(1e-12));
  double expected_small = 0.0;
  for (double lambda : lambdas) {
    if (lambda < 0.7) expected_small += 3.0 * lambda - lambda * std::log2(lambda);
  }
  CHECK(full.term("small_lambda_term") == doctest::Approx(expected_small));
}

TEST_CASE("envelope distinct bound dominates the exact expectation") {
  for (double alpha : {1.5, 2.0, 3.0}) {
    for (std::uint32_t k : {8u, 32u}) {
      const double c = 1.0 / uec::zipf_normalizer(alpha, k);
      const uec::Distribution p = uec::zipf_distribution(alpha, k);
      for (std::uint64_t n : {2ull, 8ull, 32ull}) {
        const BoundReport report = uec::envelope_distinct_bound(alpha, c, k, n);
        CHECK(report.value >= uec::expected_distinct(p, n));
        // The exact intermediates also dominate the expectation.
        CHECK(report.term("head_count_exact") + report.term("tail_sum_exact") >=
              uec::expected_distinct(p, n) - 1e-9);
      }
    }
  }
  for (double alpha : {1.5, 2.0, 4.0}) {
    for (double c : {1.0, 2.0}) {
      CHECK(uec::envelope_distinct_bound(alpha, c, 16, 1).value >= 1.0);
    }
  }
  // Large alpha with c = 1: the head coefficient pins the value near 1.
  const BoundReport steep = uec::envelope_distinct_bound(64.0, 1.0, 16, 4);
  CHECK(steep.value == doctest::Approx(std::pow(4.0, 1.0 / 64.0) *
                                       (1.0 + 1.0 / 63.0)));
}

TEST_CASE("small-lambda sums: exact vs closed form") {
  CHECK_THROWS_AS(uec::zipf_small_lambda_sums(2.0, 4, 100),
                  std::invalid_argument);

  const BoundReport report = uec::zipf_small_lambda_sums(2.0, 10000, 100);
  // Every term of the exact sum is below 0.7.
  CHECK(report.term("exact_lambda_sum") < 0.7 * 10000.0);
  CHECK(report.term("lambda_ratio") >= 0.5);
  CHECK(report.term("lambda_ratio") <= 2.0);
  CHECK(report.term("entropy_ratio") >= 0.5);
  CHECK(report.term("entropy_ratio") <= 2.0);
}

TEST_CASE("power-law envelope theorem evaluator") {
  CHECK_THROWS_AS(uec::zipf_theorem_bounds(2.0, 1.0, 16, 16),
                  std::invalid_argument);

  for (double alpha : {1.5, 2.0, 3.0}) {
    for (std::uint64_t n : {16ull, 256ull}) {
      for (std::uint64_t ratio : {2ull, 8ull, 64ull}) {
        const std::uint32_t k = static_cast<std::uint32_t>(ratio * n);
        const BoundReport report = uec::zipf_theorem_bounds(alpha, 1.0, k, n);
        CHECK(report.term("upper") >= report.term("lower"));
        CHECK(report.value == doctest::Approx(report.term("upper_choose") +
                                              report.term("upper_linear") +
                                              report.term("upper_length"))
                                  .epsilon(1e-12));
        CHECK(report.term("lower") ==
              doctest::Approx(report.term("lower_choose") -
                              report.term("lower_linear") -
                              report.term("lower_c2") - report.term("lower_log"))
                  .epsilon(1e-12));
      }
    }
  }

  // Binomial arguments are clamped to [1, k].
  const BoundReport clamped = uec::zipf_theorem_bounds(1.5, 4.0, 40, 32);
  double d_raw = 0.0, d_clamped = -1.0;
  for (const auto& [key, value] : clamped.params) {
    if (key == "d_upper_raw") d_raw = value;
    if (key == "d_upper_clamped") d_clamped = value;
  }
  CHECK(d_raw > 40.0);
  CHECK(d_clamped == 40.0);
}

TEST_CASE("theorem upper bound dominates the concrete codec") {
  // With the power law used as its own envelope (c = 1/C), the chained
  // closed form sits above the achieved redundancy of the exact code.
  struct Point {
    double alpha;
    std::uint32_t k;
    std::uint64_t n;
  };
  for (const Point& pt : {Point{2.0, 16, 8}, Point{1.5, 8, 4}, Point{3.0, 12, 6}}) {
    const double c = 1.0 / uec::zipf_normalizer(pt.alpha, pt.k);
    const uec::BoundReport report =
        uec::zipf_theorem_bounds(pt.alpha, c, pt.k, pt.n);
    const double achieved =
        uec::achieved_redundancy(uec::zipf_distribution(pt.alpha, pt.k), pt.n)
            .achieved_bits;
    CHECK(report.term("upper") >= achieved);
  }
}

TEST_CASE("theta scaling of the theorem upper bound") {
  double lo = 1e300, hi = 0.0;
  for (std::uint64_t n : {16ull, 64ull, 256ull}) {
    const std::uint32_t k = static_cast<std::uint32_t>(8 * n);
    const BoundReport report = uec::zipf_theorem_bounds(2.0, 1.0, k, n);
    const double normalized =
        report.term("upper") /
        (std::sqrt(static_cast<double>(n)) * std::log2(static_cast<double>(k)));
    lo = std::min(lo, normalized);
    hi = std::max(hi, normalized);
  }
  CHECK(hi / lo < 4.0);
}
