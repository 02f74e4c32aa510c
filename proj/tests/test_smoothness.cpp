#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/error.hpp"
#include "schubert/series.hpp"
#include "schubert/smoothness.hpp"

using namespace schubert;
using W = AffinePermutation;

TEST_CASE("pattern containment") {
  CHECK_FALSE(contains_pattern(W::identity(4), Pattern::p3412()));
  W w = W::from_window({3, 4, 1, 2});
  CHECK(contains_pattern(w, Pattern::p3412()));
  CHECK_FALSE(is_smooth(w));
  CHECK(is_smooth(W::identity(5)));
  CHECK_THROWS_AS(Pattern({1, 1, 2}), Error);
  CHECK_THROWS_AS(contains_pattern(w, Pattern({1, 2})), Error);
  CHECK(contains_pattern(W::from_window({4, 2, 3, 1}), Pattern::p4231()));
}

TEST_CASE("bounded window agrees with a wider brute force") {
  std::mt19937 rng(23);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + t % 4;
    W w = oracle::random_element(rng, n, 9);
    std::int64_t wide = 2 * displacement(w) + 2 * n;
    CHECK(contains_pattern(w, Pattern::p3412()) == oracle::contains(w, {3, 4, 1, 2}, wide));
    CHECK(contains_pattern(w, Pattern::p4231()) == oracle::contains(w, {4, 2, 3, 1}, wide));
    CHECK(contains_pattern_within(w, Pattern::p3412(), wide) ==
          oracle::contains(w, {3, 4, 1, 2}, wide));
    CHECK(contains_pattern(w, Pattern({2, 1})) == oracle::contains(w, {2, 1}, wide));
    CHECK(contains_pattern(w, Pattern({3, 1, 2})) == oracle::contains(w, {3, 1, 2}, wide));
  }
}

TEST_CASE("smoothness is inverse symmetric") {
  std::mt19937 rng(29);
  for (int t = 0; t < 200; ++t) {
    W w = oracle::random_element(rng, 2 + t % 4, 12);
    CHECK(is_smooth(w) == is_smooth(w.inverse()));
  }
}

TEST_CASE("spirals") {
  auto word = spiral_word({0, 2, SpiralDirection::x}, 3);
  CHECK(word == std::vector<int>{0, 2, 1, 0});
  W v = spiral({0, 2, SpiralDirection::x}, 3);
  CHECK(length(v) == 4);
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i < n; ++i)
      for (int k = 2; k <= 3; ++k)
        for (auto dir : {SpiralDirection::x, SpiralDirection::y}) {
          W s = spiral({i, k, dir}, n);
          CHECK(length(s) == k * (n - 1));
          CHECK(right_descents(s) == ReflectionSet(n, {i}));
          CHECK(support(s).is_full());
          W t = twisted_spiral({i, k, dir}, n);
          CHECK(right_descents(t) == ReflectionSet::all(n) - ReflectionSet(n, {i}));
          CHECK(length(t) == length(s) + longest_length(ReflectionSet::all(n) - ReflectionSet(n, {i})));
          CHECK(is_twisted_spiral(t));
          CHECK_FALSE(is_smooth(t));
          CHECK(is_rationally_smooth(t));
        }
  CHECK_THROWS_AS(spiral({0, 1, SpiralDirection::x}, 3), Error);
  CHECK_THROWS_AS(twisted_spiral({0, 1, SpiralDirection::y}, 3), Error);
}

TEST_CASE("the n = 3, k = 2 twisted spiral") {
  W t = twisted_spiral({0, 2, SpiralDirection::x}, 3);
  CHECK(length(t) == 7);
  CHECK(contains_pattern(t, Pattern::p3412()));
  CHECK_FALSE(is_smooth(t));
  CHECK(is_palindromic(poincare_polynomial(t)));
  CHECK(is_twisted_spiral(twisted_spiral({1, 2, SpiralDirection::x}, 3)));
  CHECK_FALSE(is_twisted_spiral(W::identity(3)));
  CHECK_FALSE(is_twisted_spiral(longest_element(ReflectionSet(3, {0, 1}))));
  CHECK(is_rationally_smooth(W::identity(3)));
}

TEST_CASE("rational smoothness matches palindromic Poincare polynomials") {
  for (const W& w : oracle::ball(3, 9)) {
    std::set<W> below = oracle::subword_products(3, reduced_word(w));
    auto c = oracle::length_counts(below);
    bool pal = std::equal(c.begin(), c.end(), c.rbegin());
    CHECK(pal == is_rationally_smooth(w));
  }
}

TEST_CASE("enumeration of smooth elements") {
  const std::size_t want[] = {5, 31, 173};
  for (int n = 2; n <= 4; ++n) {
    auto sm = enumerate_smooth(n);
    CHECK(sm.size() == want[n - 2]);
    std::set<W> set(sm.begin(), sm.end());
    CHECK(set.size() == sm.size());
    CHECK(set.count(W::identity(n)));
    for (const W& w : sm) {
      CHECK(set.count(w.inverse()));
      CHECK(is_rationally_smooth(w));
      CHECK_FALSE(is_twisted_spiral(w));
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) - 1; ++bits) {
        auto [v, u] = coset_decompose(w, ReflectionSet::from_bits(n, bits));
        CHECK(is_smooth(u));
      }
    }
    for (std::size_t i = 1; i < sm.size(); ++i) {
      auto a = length(sm[i - 1]), b = length(sm[i]);
      CHECK((a < b || (a == b && sm[i - 1] < sm[i])));
    }
  }
  // brute force over every element up to the longest smooth length
  std::size_t count = 0;
  for (const W& w : oracle::ball(3, 7))
    if (!oracle::contains(w, {3, 4, 1, 2}, 20) && !oracle::contains(w, {4, 2, 3, 1}, 20)) ++count;
  CHECK(count == 31);
}

TEST_CASE("parallel enumeration is deterministic") {
  EnumerationOptions o;
  o.workers = 4;
  CHECK(enumerate_smooth(4, o) == enumerate_smooth(4));
  o.max_length = 3;
  CHECK_THROWS_AS(enumerate_smooth(4, o), Error);
}
