#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/error.hpp"

using namespace schubert;
using W = AffinePermutation;

namespace {

std::vector<std::int64_t> win(const W& w) { return {w.window().begin(), w.window().end()}; }

}  // namespace

TEST_CASE("identity and windows") {
  CHECK(win(W::identity(3)) == std::vector<std::int64_t>{1, 2, 3});
  CHECK(length(W::identity(4)) == 0);
  CHECK_THROWS_AS(W::identity(0), Error);
  W x = W::identity(2).times_reflection(0);
  CHECK(win(x) == std::vector<std::int64_t>{0, 3});
  CHECK_THROWS_AS(W::from_window({1, 1, 4}), Error);
  CHECK_THROWS_AS(W::from_window({1, 2, 4}), Error);
  CHECK_NOTHROW(W::from_window({2, 5, 0, 3}));
}

TEST_CASE("multiplication, inverse, action") {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + t % 4;
    W a = oracle::random_element(rng, n, 10), b = oracle::random_element(rng, n, 10);
    CHECK(a * W::identity(n) == a);
    CHECK(a.inverse().inverse() == a);
    CHECK(a.inverse() * a == W::identity(n));
    for (std::int64_t i = -5; i <= 5; ++i) CHECK((a * b)(i) == a(b(i)));
  }
  W w = W::from_word(3, {0, 1});
  for (int i = 1; i <= 3; ++i) CHECK(w(i + 3) == w(i) + 3);
  CHECK_THROWS_AS(W::identity(3) * W::identity(4), Error);
}

TEST_CASE("words") {
  CHECK(W::from_word(4, {}) == W::identity(4));
  W w = W::from_word(4, {2, 3, 1, 2});
  CHECK(win(w) == std::vector<std::int64_t>{3, 4, 1, 2});
  for (int i = 0; i < 5; ++i) CHECK(length(W::from_word(5, {i})) == 1);
  CHECK_THROWS_AS(W::from_word(3, {3}), Error);
  CHECK(W::reflection(4, 1).times_reflection(2) == W::from_word(4, {1, 2}));
  CHECK(W::reflection(4, 1).reflection_times(2) == W::from_word(4, {2, 1}));
}

TEST_CASE("length against inversion count and word search") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 4;
    std::uniform_int_distribution<int> len(0, 12), letter(0, n - 1);
    std::vector<int> word(len(rng));
    for (int& x : word) x = letter(rng);
    W w = W::from_word(n, word);
    auto l = length(w);
    CHECK(l <= static_cast<std::int64_t>(word.size()));
    CHECK(l == oracle::inversions(w));
    auto red = reduced_word(w);
    CHECK(static_cast<std::int64_t>(red.size()) == l);
    CHECK(W::from_word(n, red) == w);
    CHECK(length(w.inverse()) == l);
  }
  for (int t = 0; t < 30; ++t) {
    W w = oracle::random_element(rng, 3, 6);
    CHECK(length(w) == oracle::word_length_bfs(w, 6));
  }
}

TEST_CASE("descents") {
  CHECK(right_descents(W::identity(3)).empty());
  for (int i = 0; i < 4; ++i) CHECK(right_descents(W::reflection(4, i)) == ReflectionSet(4, {i}));
  W w = W::from_word(3, {0, 1, 0});
  for (int i = 0; i < 3; ++i)
    CHECK(right_descents(w).contains(i) == (length(w.times_reflection(i)) < length(w)));
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 5;
    W x = oracle::random_element(rng, n, 14);
    for (int i = 0; i < n; ++i) {
      auto d = length(x.times_reflection(i)) - length(x);
      CHECK((d == 1 || d == -1));
      CHECK(is_right_descent(x, i) == (d == -1));
      CHECK(left_descents(x).contains(i) == (length(x.reflection_times(i)) < length(x)));
    }
    CHECK(left_descents(x) == right_descents(x.inverse()));
  }
}

TEST_CASE("support") {
  CHECK(support(W::identity(4)).empty());
  CHECK(support(W::from_word(4, {2, 0})) == ReflectionSet(4, {0, 2}));
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + t % 4;
    W w = oracle::random_element(rng, n, 9);
    // strip the largest descent instead of the smallest
    ReflectionSet letters(n);
    W x = w;
    while (!x.is_identity()) {
      auto d = right_descents(x).indices();
      letters.insert(d.back());
      x = x.times_reflection(d.back());
    }
    CHECK(letters == support(w));
    CHECK(support(w) == support(w.inverse()));
  }
}

TEST_CASE("longest elements") {
  CHECK(longest_element(ReflectionSet(4, {1})) == W::reflection(4, 1));
  CHECK(length(longest_element(ReflectionSet(4, {1, 2}))) == 3);
  ReflectionSet J(5, {0, 1, 3});
  W w0 = longest_element(J);
  CHECK(length(w0) == 4);
  for (int s : J.indices()) CHECK(length(w0.times_reflection(s)) < length(w0));
  CHECK(right_descents(w0) == J);
  CHECK(longest_length(ReflectionSet(6, {0, 1, 2, 4})) == 6 + 1);
  CHECK_THROWS_AS(longest_element(ReflectionSet::all(3)), Error);
  // wrapping component {4, 0} in n = 5
  CHECK(length(longest_element(ReflectionSet(5, {4, 0}))) == 3);
}

TEST_CASE("coset decompositions") {
  W w = W::from_word(4, {2, 1});
  auto [v, u] = coset_decompose(w, ReflectionSet(4, {1}));
  CHECK(v == W::reflection(4, 2));
  CHECK(u == W::reflection(4, 1));
  W inK = W::from_word(4, {1, 2, 1});
  auto d0 = coset_decompose(inK, ReflectionSet(4, {1, 2}));
  CHECK(d0.v.is_identity());
  CHECK(d0.u == inK);
  std::mt19937 rng(9);
  for (int t = 0; t < 500; ++t) {
    int n = 2 + t % 4;
    W x = oracle::random_element(rng, n, 12);
    ReflectionSet K = ReflectionSet::from_bits(n, rng() % (std::uint64_t{1} << n));
    if (K.is_full()) K.erase(0);
    auto [cv, cu] = coset_decompose(x, K);
    CHECK(cv * cu == x);
    CHECK(length(cv) + length(cu) == length(x));
    CHECK(in_quotient(cv, K));
    CHECK(support(cu).subset_of(K));
    auto again = coset_decompose(cv, K);
    CHECK(again.v == cv);
    CHECK(again.u.is_identity());
    auto [lu, lv] = left_coset_decompose(x, K);
    CHECK(lu * lv == x);
    CHECK(length(lu) + length(lv) == length(x));
    CHECK(in_quotient(lv.inverse(), K));
  }
}

TEST_CASE("Bruhat order and intervals") {
  std::mt19937 rng(13);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + t % 3;
    W w = oracle::random_element(rng, n, 8);
    auto below = oracle::subword_products(n, reduced_word(w));
    auto interval = bruhat_lower_interval(w, ReflectionSet(n));
    CHECK(std::set<W>(interval.begin(), interval.end()) == below);
    CHECK(bruhat_leq(W::identity(n), w));
    for (const W& x : oracle::ball(n, static_cast<int>(length(w))))
      CHECK(bruhat_leq(x, w) == static_cast<bool>(below.count(x)));
    Polynomial p = poincare_polynomial(w);
    CHECK(p.at_one() == BigInt(interval.size()));
    CHECK(p.degree() == length(w));
    CHECK(p.coefficient(p.degree()) == 1);
  }
  W a = W::from_word(3, {0, 1}), b = W::from_word(3, {1, 0});
  CHECK_FALSE((bruhat_leq(a, b) && bruhat_leq(b, a)));
  CHECK(bruhat_lower_interval(longest_element(ReflectionSet(4, {1, 2})), ReflectionSet(4)).size() == 6);
  W big = W::from_word(3, {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1});
  CHECK(length(big) == 17);
  CHECK_THROWS_AS(bruhat_lower_interval(big, ReflectionSet(3)), Error);
}

TEST_CASE("parabolic Poincare polynomials") {
  CHECK(poincare_polynomial(W::identity(3)) == Polynomial({1}));
  CHECK(is_palindromic(poincare_polynomial(W::identity(3))));
  Polynomial a2 = poincare_polynomial(longest_element(ReflectionSet(4, {1, 2})));
  CHECK(a2 == Polynomial({1, 2, 2, 1}));
  CHECK(a2.to_string() == "1 + 2q + 2q^2 + q^3");
  CHECK(is_palindromic(a2));
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    int n = 3 + t % 2;
    W w = oracle::random_element(rng, n, 8);
    ReflectionSet J = ReflectionSet::from_bits(n, rng() % (std::uint64_t{1} << n));
    if (J.is_full()) J.erase(1);
    W v = coset_decompose(w, J).v;
    std::set<W> q;
    for (const W& x : oracle::subword_products(n, reduced_word(v)))
      if (in_quotient(x, J)) q.insert(x);
    CHECK(poincare_polynomial(v, J).coefficients() == oracle::length_counts(q));
  }
  CHECK_THROWS_AS(poincare_polynomial(W::reflection(3, 1), ReflectionSet(3, {1})), Error);
}

TEST_CASE("length layers") {
  auto layers = elements_up_to_length(3, 5);
  auto ball = oracle::ball(3, 5);
  std::size_t total = 0;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    total += layers[l].size();
    for (const W& w : layers[l]) CHECK(length(w) == static_cast<std::int64_t>(l));
  }
  CHECK(total == ball.size());
}

TEST_CASE("reflection sets") {
  ReflectionSet s(6, {0, 1, 3, 5});
  CHECK(s.size() == 4);
  CHECK(s.to_string() == "{0,1,3,5}");
  auto comps = s.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{3});
  CHECK(comps[1] == std::vector<int>{5, 0, 1});
  CHECK(ReflectionSet::all(4).is_full());
  CHECK_FALSE(ReflectionSet::all(4).is_finite_type());
  CHECK_THROWS_AS(ReflectionSet(3, {3}), Error);
  CHECK((ReflectionSet(4, {1, 2}) | ReflectionSet(4, {3})) == ReflectionSet(4, {1, 2, 3}));
  CHECK((ReflectionSet(4, {1, 2}) - ReflectionSet(4, {2})) == ReflectionSet(4, {1}));
}
