#pragma once

#include <cstdint>
#include <vector>

#include "schubert/affine_permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/reflection_set.hpp"

namespace schubert {

/// Default length cap for operations that materialise Bruhat intervals.
inline constexpr int default_length_cap = 16;

/// Sum over 1 <= i < j <= n of |floor((w(j) - w(i)) / n)|.
std::int64_t length(const AffinePermutation& w);

/// s_i is a right descent iff w(i) > w(i + 1), with w(0) = w(n) - n.
ReflectionSet right_descents(const AffinePermutation& w);
ReflectionSet left_descents(const AffinePermutation& w);
bool is_right_descent(const AffinePermutation& w, int i);

/// Reduced word obtained by stripping the smallest right descent each step.
std::vector<int> reduced_word(const AffinePermutation& w);
ReflectionSet support(const AffinePermutation& w);

/// Longest element of the finite parabolic subgroup W_J. Throws
/// Error(infinite_group) when J is the whole cycle.
AffinePermutation longest_element(const ReflectionSet& J);
std::int64_t longest_length(const ReflectionSet& J);

/// w = v * u with u in W_K and v the minimal element of v W_K.
struct CosetDecomposition {
  AffinePermutation v;
  AffinePermutation u;
};
CosetDecomposition coset_decompose(const AffinePermutation& w,
                                   const ReflectionSet& K);
/// w = u * v with u in W_K and v in ^K W (minimal in W_K v).
struct LeftCosetDecomposition {
  AffinePermutation u;
  AffinePermutation v;
};
LeftCosetDecomposition left_coset_decompose(const AffinePermutation& w,
                                            const ReflectionSet& K);

/// w has no right descent in J.
bool in_quotient(const AffinePermutation& w, const ReflectionSet& J);

/// Bruhat order through the lifting property: for s a right descent of w,
/// x <= w iff (xs <= ws if s is a descent of x, else x <= ws).
bool bruhat_leq(const AffinePermutation& x, const AffinePermutation& w);

/// {x in W^J : x <= w}, generated as the subword products of one reduced
/// word of w. Throws Error(cap_exceeded) when length(w) > cap.
std::vector<AffinePermutation> bruhat_lower_interval(
    const AffinePermutation& w, const ReflectionSet& J,
    int cap = default_length_cap);

/// P^J_w(q). Requires w in W^J (Error(not_in_quotient)).
Polynomial poincare_polynomial(const AffinePermutation& w,
                               const ReflectionSet& J,
                               int cap = default_length_cap);
Polynomial poincare_polynomial(const AffinePermutation& w,
                               int cap = default_length_cap);

/// Elements of length l + 1 reachable as w * s_i from a layer of elements of
/// length l; sorted and duplicate free.
std::vector<AffinePermutation> next_length_layer(
    const std::vector<AffinePermutation>& layer);
/// Layers 0..max_len of S~_n by length.
std::vector<std::vector<AffinePermutation>> elements_up_to_length(int n,
                                                                  int max_len);

}  // namespace schubert
