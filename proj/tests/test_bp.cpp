#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "schubert/bp.hpp"
#include "schubert/error.hpp"
#include "schubert/smoothness.hpp"

using namespace schubert;
using W = AffinePermutation;

namespace {

/// P^J_w from subword products, filtered to the quotient.
std::vector<BigInt> oracle_poincare(const W& w, const ReflectionSet& J) {
  std::set<W> q;
  for (const W& x : oracle::subword_products(w.period(), reduced_word(w)))
    if (in_quotient(x, J)) q.insert(x);
  return oracle::length_counts(q);
}

}  // namespace

TEST_CASE("BP criterion") {
  ReflectionSet none(4), K(4, {1});
  CHECK(is_bp(W::from_word(4, {1, 2, 1}), ReflectionSet(4, {1, 2}), none));
  CHECK(is_bp(W::from_word(4, {2, 1}), K, none));
  CHECK_FALSE(is_bp(W::from_word(4, {1, 2}), K, none));
  auto lhs = oracle_poincare(W::from_word(4, {2, 1}), none);
  auto rhs = oracle::multiply(oracle_poincare(W::reflection(4, 2), K), oracle_poincare(W::reflection(4, 1), none), 2);
  CHECK(lhs == rhs);
}

TEST_CASE("BP criterion agrees with the factorization identity") {
  std::mt19937 rng(31);
  int agree = 0;
  for (int t = 0; t < 150; ++t) {
    int n = 3 + t % 2;
    W w = oracle::random_element(rng, n, 8);
    ReflectionSet K = ReflectionSet::from_bits(n, rng() % (std::uint64_t{1} << n));
    if (K.is_full()) K.erase(0);
    ReflectionSet none(n);
    auto [v, u] = coset_decompose(w, K);
    int order = static_cast<int>(length(w));
    bool ident = oracle_poincare(w, none) ==
                 oracle::multiply(oracle_poincare(v, K), oracle_poincare(u, none), order);
    CHECK(is_bp(w, K, none) == ident);
    agree += ident;
    // general J through the definition
    ReflectionSet J = K & ReflectionSet::from_bits(n, rng() % (std::uint64_t{1} << n));
    W wj = coset_decompose(w, J).v;
    auto [vj, uj] = coset_decompose(wj, K);
    bool identj = oracle_poincare(wj, J) ==
                  oracle::multiply(oracle_poincare(vj, K), oracle_poincare(uj, J),
                                   static_cast<int>(length(wj)));
    CHECK(is_bp(wj, K, J) == identj);
  }
  CHECK(agree > 0);
}

TEST_CASE("Grassmannian BP search") {
  W w0 = longest_element(ReflectionSet(4, {1, 2}));
  auto bp = find_grassmannian_bp(w0, ReflectionSet(4));
  REQUIRE(bp);
  CHECK((bp->K == ReflectionSet(4, {1}) || bp->K == ReflectionSet(4, {2})));
  CHECK(bp->v * bp->u == w0);
  for (const W& w : enumerate_smooth(3)) {
    if (!support(w).is_full()) continue;
    auto g = find_grassmannian_bp(w, ReflectionSet(3));
    REQUIRE(g);
    ReflectionSet removed = support(w) - g->K;
    REQUIRE(removed.size() == 1);
    CHECK_FALSE(right_descents(w).contains(removed.indices()[0]));
    CHECK(is_bp(w, g->K, ReflectionSet(3)));
  }
  W t = twisted_spiral({0, 2, SpiralDirection::x}, 3);
  ReflectionSet K = ReflectionSet::all(3) - ReflectionSet(3, {0});
  CHECK(is_bp(t, K, ReflectionSet(3)));
  CHECK(coset_decompose(t, K).u == longest_element(K));
}

TEST_CASE("complete BP decompositions") {
  auto id = complete_bp_decomposition(W::identity(3), ReflectionSet(3));
  REQUIRE(id);
  CHECK(id->factors.empty());
  for (int n = 2; n <= 4; ++n)
    for (const W& w : enumerate_smooth(n)) {
      auto d = complete_bp_decomposition(w, ReflectionSet(n));
      REQUIRE(d);
      CHECK(d->all_maximal());
      CHECK(static_cast<int>(d->factors.size()) == support(w).size());
      W prod = W::identity(n);
      std::int64_t len = 0;
      for (std::size_t i = 0; i < d->factors.size(); ++i) {
        const auto& f = d->factors[i];
        CHECK((f.K_before - f.K_after).size() == 1);
        W before = prod;
        prod = prod * f.v;
        len += length(f.v);
        if (i > 0) CHECK(is_bp(prod, d->factors[i - 1].K_after, f.K_after));
        (void)before;
      }
      CHECK(prod == w);
      CHECK(len == length(w));
      auto tails = d->tails();
      for (std::size_t i = 0; i + 1 < tails.size(); ++i)
        CHECK(d->factors[i].K_after == support(tails[i + 1]));
    }
  W t = twisted_spiral({0, 2, SpiralDirection::x}, 3);
  auto dt = complete_bp_decomposition(t, ReflectionSet(3));
  if (dt) CHECK_FALSE(dt->all_maximal());
  CHECK_THROWS_AS(fibre_tower(t, ReflectionSet(3)), Error);
}

TEST_CASE("maximal coset elements") {
  CHECK(is_maximal_coset_element(W::from_word(4, {1, 2}), ReflectionSet(4, {1})));
  CHECK(is_maximal_coset_element(W::from_word(4, {2, 1}), ReflectionSet(4, {2})));
  CHECK(is_maximal_coset_element(W::reflection(4, 1), ReflectionSet(4, {2})));
  CHECK_FALSE(is_maximal_coset_element(W::from_word(4, {1, 2}), ReflectionSet(4)));
  CHECK_FALSE(is_maximal_coset_element(spiral({0, 2, SpiralDirection::x}, 3),
                                       ReflectionSet(3, {1, 2})));
}

TEST_CASE("fibre towers") {
  auto t1 = fibre_tower(longest_element(ReflectionSet(4, {1})), ReflectionSet(4));
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].gr_k() == 1);
  CHECK(t1[0].gr_n() == 2);
  auto t2 = fibre_tower(longest_element(ReflectionSet(4, {1, 2})), ReflectionSet(4));
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].gr_n() == 3);
  CHECK(t2[1].gr_n() == 2);
  for (int n = 2; n <= 4; ++n)
    for (const W& w : enumerate_smooth(n))
      for (const auto& level : fibre_tower(w, ReflectionSet(n))) {
        CHECK(static_cast<int>(level.nodes.size()) < n);
        CHECK(level.p == static_cast<int>(level.nodes.size()));
      }
}

TEST_CASE("partial flag smoothness") {
  std::mt19937 rng(37);
  for (int t = 0; t < 50; ++t) {
    W w = oracle::random_element(rng, 3, 10);
    CHECK(is_smooth_partial(w, ReflectionSet(3)) == is_smooth(w));
  }
  CHECK(is_smooth_partial(W::reflection(4, 1), ReflectionSet(4, {2})));
  for (int n = 3; n <= 4; ++n)
    for (int i = 0; i < n; ++i) {
      W x = spiral({i, 2, SpiralDirection::x}, n);
      ReflectionSet J = ReflectionSet::all(n) - ReflectionSet(n, {i});
      CHECK_FALSE(is_smooth_partial(x, J));
      CHECK(is_rationally_smooth(x * longest_element(J)));
    }
  CHECK_THROWS_AS(is_smooth_partial(W::reflection(4, 1), ReflectionSet(4, {1})), Error);
}
