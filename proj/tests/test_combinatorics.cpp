#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "uec/combinatorics.hpp"
#include "uec/model.hpp"

using uec::BigUint;
using uec::Symbol;
using uec::TypeVector;

namespace {

// Independent Pascal-triangle oracle.
std::vector<std::vector<BigUint>> pascal_table(std::uint64_t rows) {
  std::vector<std::vector<BigUint>> table(rows + 1);
  for (std::uint64_t n = 0; n <= rows; ++n) {
    table[n].resize(n + 1, BigUint(1));
    for (std::uint64_t r = 1; r < n; ++r) {
      table[n][r] = table[n - 1][r - 1] + table[n - 1][r];
    }
  }
  return table;
}

}  // namespace

TEST_CASE("binomial basics and Pascal grid") {
  CHECK(uec::binomial(5, 2) == BigUint(10));
  CHECK(uec::binomial(17, 0) == BigUint(1));
  CHECK(uec::binomial(3, 5) == BigUint(0));
  CHECK(uec::binomial(64, 32) == BigUint(1832624140942590534ull));

  const auto table = pascal_table(40);
  for (std::uint64_t n = 0; n <= 40; ++n) {
    for (std::uint64_t r = 0; r <= n; ++r) {
      CHECK(uec::binomial(n, r) == table[n][r]);
    }
  }
}

TEST_CASE("log2_binomial agrees with the exact value") {
  CHECK(uec::log2_binomial(10, 3) == doctest::Approx(uec::binomial(10, 3).log2()));
  CHECK(uec::log2_binomial(200, 71) ==
        doctest::Approx(uec::binomial(200, 71).log2()).epsilon(1e-12));
}

TEST_CASE("subset rank examples") {
  const std::vector<std::uint32_t> first = {0, 1};
  CHECK(uec::subset_rank(first, 3) == BigUint(0));
  const std::vector<std::uint32_t> last = {1, 2};
  CHECK(uec::subset_rank(last, 3) == BigUint(2));
  CHECK_THROWS_AS(uec::subset_rank(std::vector<std::uint32_t>{2, 1}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::subset_rank(std::vector<std::uint32_t>{0, 7}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::subset_unrank(BigUint(3), 2, 3), std::out_of_range);
}

TEST_CASE("subset rank/unrank is a bijection for k <= 6") {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    for (std::uint32_t d = 0; d <= k; ++d) {
      const std::uint64_t count = uec::binomial(k, d).to_uint64();
      std::set<std::vector<std::uint32_t>> seen;
      for (std::uint64_t rank = 0; rank < count; ++rank) {
        const auto subset = uec::subset_unrank(BigUint(rank), d, k);
        CHECK(uec::subset_rank(subset, k) == BigUint(rank));
        CHECK(seen.insert(subset).second);
      }
      CHECK(seen.size() == count);
    }
  }
}

TEST_CASE("composition rank examples") {
  CHECK(uec::composition_rank(std::vector<std::uint64_t>{1, 2}) == BigUint(0));
  CHECK(uec::composition_rank(std::vector<std::uint64_t>{2, 1}) == BigUint(1));
  CHECK(uec::composition_rank(std::vector<std::uint64_t>{9}) == BigUint(0));
  CHECK_THROWS_AS(uec::composition_rank(std::vector<std::uint64_t>{2, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::composition_unrank(BigUint(10), 6, 3), std::out_of_range);
}

TEST_CASE("composition rank/unrank is a bijection for totals <= 6") {
  for (std::uint64_t total = 1; total <= 6; ++total) {
    for (std::uint64_t count = 1; count <= total; ++count) {
      const std::uint64_t size = uec::binomial(total - 1, count - 1).to_uint64();
      std::vector<std::uint64_t> previous;
      for (std::uint64_t rank = 0; rank < size; ++rank) {
        const auto parts = uec::composition_unrank(BigUint(rank), total, count);
        CHECK(parts.size() == count);
        std::uint64_t sum = 0;
        for (std::uint64_t part : parts) {
          CHECK(part >= 1);
          sum += part;
        }
        CHECK(sum == total);
        CHECK(uec::composition_rank(parts) == BigUint(rank));
        if (rank > 0) CHECK(previous < parts);  // lexicographic order
        previous = parts;
      }
    }
  }
}

TEST_CASE("arrangement rank examples") {
  // Type a:2, b:1 over alphabet {a,b}: aab < aba < baa in lex order.
  TypeVector type{{2, 1}, 3};
  CHECK(uec::arrangement_rank(std::vector<Symbol>{0, 0, 1}, type) == BigUint(0));
  CHECK(uec::arrangement_rank(std::vector<Symbol>{0, 1, 0}, type) == BigUint(1));
  CHECK(uec::arrangement_rank(std::vector<Symbol>{1, 0, 0}, type) == BigUint(2));

  TypeVector constant{{4}, 4};
  CHECK(uec::multinomial(constant) == BigUint(1));
  CHECK(uec::arrangement_rank(std::vector<Symbol>{0, 0, 0, 0}, constant) ==
        BigUint(0));

  CHECK_THROWS_AS(uec::arrangement_rank(std::vector<Symbol>{1, 1, 1}, type),
                  std::invalid_argument);
}

TEST_CASE("arrangement rank/unrank covers all 60 sequences of type (3,2,1)") {
  TypeVector type{{3, 2, 1}, 6};
  CHECK(uec::multinomial(type) == BigUint(60));
  std::set<std::vector<Symbol>> seen;
  std::vector<Symbol> previous;
  for (std::uint64_t rank = 0; rank < 60; ++rank) {
    const auto seq = uec::arrangement_unrank(BigUint(rank), type);
    CHECK(uec::arrangement_rank(seq, type) == BigUint(rank));
    CHECK(seen.insert(seq).second);
    if (rank > 0) CHECK(previous < seq);
    previous = seq;
  }
}

TEST_CASE("multinomial matches factorial formula and entropy cap") {
  // Exhaustive over all types for k <= 4, n <= 6: n!/prod mu! equals the
  // prefix-binomial product, and log2 multinomial <= n H(empirical).
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      uec::for_each_type(k, n, [&](std::span<const std::uint64_t> counts) {
        TypeVector type{{counts.begin(), counts.end()}, n};
        BigUint factorial(1);
        for (std::uint64_t i = 1; i <= n; ++i) factorial *= i;
        for (std::uint64_t mu : counts) {
          for (std::uint64_t i = 1; i <= mu; ++i) {
            factorial.div_exact(static_cast<std::uint32_t>(i));
          }
        }
        CHECK(uec::multinomial(type) == factorial);

        double empirical_entropy_bits = 0.0;
        for (std::uint64_t mu : counts) {
          if (mu > 0) {
            empirical_entropy_bits +=
                static_cast<double>(mu) *
                std::log2(static_cast<double>(n) / static_cast<double>(mu));
          }
        }
        CHECK(uec::multinomial(type).log2() <= empirical_entropy_bits + 1e-9);
      });
    }
  }
}

TEST_CASE("type enumeration is complete and ordered") {
  int count = 0;
  std::vector<std::uint64_t> previous;
  uec::for_each_type(3, 4, [&](std::span<const std::uint64_t> counts) {
    std::vector<std::uint64_t> current(counts.begin(), counts.end());
    std::uint64_t sum = 0;
    for (std::uint64_t c : current) sum += c;
    CHECK(sum == 4);
    if (count > 0) CHECK(previous < current);
    previous = std::move(current);
    ++count;
  });
  CHECK(count == 15);  // C(4+3-1, 3-1)

  int sequences = 0;
  uec::for_each_sequence(3, 4, [&](std::span<const Symbol>) { ++sequences; });
  CHECK(sequences == 81);
}
