// random.hpp
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
// Seeded sampling helpers. All transforms are hand-rolled on top of the
// mt19937_64 bit stream so that identical seeds give identical draws on
// every platform (std:: distribution objects do not promise that).

#ifndef UEC_RANDOM_HPP_
#define UEC_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "uec/model.hpp"

namespace uec {

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Knuth's product method; intended for small means.
inline std::uint64_t sample_poisson(std::mt19937_64& rng, double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("sample_poisson: bad mean");
  if (mean > 64.0) throw std::invalid_argument("sample_poisson: mean too large");
  const double threshold = std::exp(-mean);
  std::uint64_t count = 0;
  double product = 1.0;
  while (true) {
    product *= uniform_unit(rng);
    if (product <= threshold) return count;
    ++count;
  }
}

// Dirichlet(1,...,1): uniform over the simplex.
inline std::vector<double> sample_simplex(std::mt19937_64& rng, std::uint32_t k) {
  std::vector<double> weights(k);
  double total = 0.0;
  for (auto& w : weights) {
    double u = uniform_unit(rng);
    while (u <= 0.0) u = uniform_unit(rng);
    w = -std::log(u);
    total += w;
  }
  for (auto& w : weights) w /= total;
  return weights;
}

inline Distribution sample_distribution(std::mt19937_64& rng, std::uint32_t k) {
  return Distribution(sample_simplex(rng, k));
}

/// Inverse-CDF sampler over a fixed finite distribution.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const Distribution& p) : cdf_(p.probs().size()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probs().size(); ++i) {
      acc += p.probs()[i];
      cdf_[i] = acc;
    }
    cdf_.back() = 1.0;
  }

  Symbol operator()(std::mt19937_64& rng) const {
    const double u = uniform_unit(rng);
    std::size_t lo = 0;
    std::size_t hi = cdf_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cdf_[mid] > u) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return static_cast<Symbol>(lo);
  }

 private:
  std::vector<double> cdf_;
};

}  // namespace uec

#endif  // UEC_RANDOM_HPP_
