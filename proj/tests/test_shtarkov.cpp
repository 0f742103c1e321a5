#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "uec/combinatorics.hpp"
#include "uec/errors.hpp"
#include "uec/model.hpp"
#include "uec/random.hpp"
#include "uec/shtarkov.hpp"

using uec::Distribution;
using uec::ShtarkovMethod;
using uec::TypeVector;

TEST_CASE("rearrangement maximizer examples") {
  const Distribution base({0.8, 0.2});
  const TypeVector type{{2, 1}, 3};
  // Brute force over the two relabelings: max(0.8^2*0.2, 0.2^2*0.8) = 0.128.
  CHECK(uec::max_likelihood_permutation(type, base) ==
        doctest::Approx(0.128).epsilon(1e-13));

  const Distribution uniform({0.25, 0.25, 0.25, 0.25});
  const TypeVector any{{2, 0, 1, 1}, 4};
  CHECK(uec::max_likelihood_permutation(any, uniform) ==
        doctest::Approx(std::pow(0.25, 4.0)).epsilon(1e-13));

  CHECK_THROWS_AS(
      uec::max_likelihood_permutation(TypeVector{{1, 1}, 2}, uniform),
      std::invalid_argument);
}

TEST_CASE("rearrangement equals factorial brute force") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(uec::uniform_unit(rng) * 4.0);
    const std::uint64_t n = 1 + static_cast<std::uint64_t>(uec::uniform_unit(rng) * 4.0);
    const Distribution base = uec::sample_distribution(rng, k);
    TypeVector type;
    type.n = n;
    uec::for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
      type.counts.assign(counts.begin(), counts.end());
      std::vector<double> perm = base.probs();
      std::sort(perm.begin(), perm.end());
      double best = 0.0;
      do {
        double prob = 1.0;
        for (std::uint32_t i = 0; i < k; ++i) {
          prob *= std::pow(perm[i], static_cast<double>(counts[i]));
        }
        best = std::max(best, prob);
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(uec::max_likelihood_permutation(type, base) ==
            doctest::Approx(best).epsilon(1e-10));
    });
  }
}

TEST_CASE("singleton permutation class has zero regret") {
  for (std::uint32_t k : {1u, 3u, 6u}) {
    const Distribution uniform(std::vector<double>(k, 1.0 / k));
    for (std::uint64_t n : {1ull, 3ull}) {
      const uec::ShtarkovReport report =
          uec::shtarkov_sum_permutation_class(uniform, n);
      CHECK(report.log2_sum == doctest::Approx(0.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("grouped sum equals exhaustive sum") {
  std::mt19937_64 rng(5);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const Distribution base = uec::sample_distribution(rng, k);
      const double grouped =
          uec::shtarkov_sum_permutation_class(base, n, ShtarkovMethod::kProfileGrouped)
              .log2_sum;
      const double naive =
          uec::shtarkov_sum_permutation_class(base, n, ShtarkovMethod::kExhaustive)
              .log2_sum;
      CHECK(grouped == doctest::Approx(naive).epsilon(1e-10));
    }
  }
}

TEST_CASE("hand-computed sum for permutations of zipf(2,8) at n=3") {
  // Three type shapes: (3): 8 types x p1^3; (2,1): 56 types x 3 sequences;
  // (1,1,1): 56 types x 6 sequences.
  const Distribution base = uec::zipf_distribution(2.0, 8);
  const double p1 = base.sorted()[0];
  const double p2 = base.sorted()[1];
  const double p3 = base.sorted()[2];
  const double expected = 8.0 * p1 * p1 * p1 +
                          56.0 * 3.0 * p1 * p1 * p2 +
                          56.0 * 6.0 * p1 * p2 * p3;
  const double log2_sum = uec::shtarkov_sum_permutation_class(base, 3).log2_sum;
  CHECK(log2_sum == doctest::Approx(std::log2(expected)).epsilon(1e-12));
}

TEST_CASE("worst-case redundancy lower bound at a spec point") {
  const double c_norm = uec::zipf_normalizer(2.0, 16);
  const double bound = 2.0 * std::log2(14.0 / (4.0 * c_norm));
  const double measured =
      uec::shtarkov_sum_permutation_class(uec::zipf_distribution(2.0, 16), 2)
          .log2_sum;
  CHECK(measured >= bound);
}

TEST_CASE("log k! cap and monotonicity in n") {
  std::mt19937_64 rng(9);
  for (std::uint32_t k : {2u, 4u, 6u}) {
    const Distribution base = uec::sample_distribution(rng, k);
    double previous = -1.0;
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const double log2_sum =
          uec::shtarkov_sum_permutation_class(base, n).log2_sum;
      CHECK(log2_sum >= -1e-10);  // S >= 1 for any nonempty class
      CHECK(log2_sum <= uec::log2_factorial(k) + 1e-9);
      CHECK(log2_sum >= previous - 1e-9);
      previous = log2_sum;
    }
  }
}

TEST_CASE("envelope equal to a distribution collapses the bracket") {
  const Distribution base = uec::zipf_distribution(2.0, 5);
  const uec::EnvelopeClass env(base.sorted());
  const uec::EnvelopeBracket bracket = uec::shtarkov_sum_envelope_class(env, 3);
  const double perm = uec::shtarkov_sum_permutation_class(base, 3).log2_sum;
  CHECK(bracket.log2_upper == doctest::Approx(perm).epsilon(1e-10));
  CHECK(bracket.log2_lower == doctest::Approx(perm).epsilon(1e-10));
}

TEST_CASE("all-ones envelope bracket") {
  const std::uint32_t k = 4;
  const uec::EnvelopeClass env(std::vector<double>(k, 1.0));
  const uec::EnvelopeBracket bracket = uec::shtarkov_sum_envelope_class(env, k);
  // Upper: every type contributes its full sequence count.
  CHECK(bracket.log2_upper ==
        doctest::Approx(static_cast<double>(k) * std::log2(k)).epsilon(1e-12));
  CHECK(bracket.log2_lower >= 0.0);
  CHECK(bracket.log2_lower <= bracket.log2_upper);
}

TEST_CASE("doubled power-law envelope brackets the member class") {
  const Distribution base = uec::zipf_distribution(2.0, 8);
  std::vector<double> doubled = base.sorted();
  for (double& f : doubled) f *= 2.0;
  const uec::EnvelopeBracket bracket =
      uec::shtarkov_sum_envelope_class(uec::EnvelopeClass(doubled), 3);
  const double member = uec::shtarkov_sum_permutation_class(base, 3).log2_sum;
  CHECK(bracket.log2_lower <= member + 1e-9);
  CHECK(member <= bracket.log2_upper + 1e-9);
}

TEST_CASE("enumeration guard") {
  const Distribution big = uec::zipf_distribution(2.0, 200);
  CHECK_THROWS_AS(uec::shtarkov_sum_permutation_class(big, 50),
                  uec::InstanceTooLargeError);
  CHECK_THROWS_AS(
      uec::shtarkov_sum_permutation_class(big, 5, ShtarkovMethod::kExhaustive),
      uec::InstanceTooLargeError);
}
