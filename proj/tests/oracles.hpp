#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "schubert/affine_permutation.hpp"
#include "schubert/bigint.hpp"
#include "schubert/staircase.hpp"

namespace oracle {

using schubert::AffinePermutation;
using schubert::BigInt;

/// Inversions (i, j), 1 <= i <= n, i < j, w(i) > w(j), counted directly.
std::int64_t inversions(const AffinePermutation& w);

/// Shortest word through breadth-first search over words, for tiny lengths.
int word_length_bfs(const AffinePermutation& w, int limit);

/// Brute force over all index tuples with i_1 in [1, n] and the rest in
/// (i_1, i_1 + width].
bool contains(const AffinePermutation& w, const std::vector<int>& pattern, std::int64_t width);

/// Products of all subwords of the given word, deduplicated.
std::set<AffinePermutation> subword_products(int n, const std::vector<int>& word);

/// Coefficients of the length generating function of a set.
std::vector<BigInt> length_counts(const std::set<AffinePermutation>& xs);

/// All elements of length <= max_len built by right multiplication.
std::vector<AffinePermutation> ball(int n, int max_len);

BigInt binomial(int n, int k);
BigInt catalan(int n);

/// Coefficient list of 1 / p through `order`, p[0] == 1.
std::vector<BigInt> inverse(const std::vector<BigInt>& p, int order);
std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int order);

/// Every set of at most `max_blocks` connected blocks with every orientation
/// of the touching pairs, filtered by validate and deduplicated.
std::set<schubert::StaircaseDiagram> all_diagrams(const schubert::CoxGraph& g, int max_blocks);

AffinePermutation random_element(std::mt19937& rng, int n, int max_word);

}  // namespace oracle
