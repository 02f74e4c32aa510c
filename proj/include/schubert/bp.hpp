#pragma once

#include <optional>
#include <vector>

#include "schubert/affine_permutation.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/reflection_set.hpp"

namespace schubert {

/// Whether the parabolic decomposition w = vu with respect to K is a
/// Billey-Postnikov decomposition relative to J. For J empty this is the
/// support criterion S(v) & K <= D_L(u); otherwise the Poincare identity
/// P^J_w = P^K_v * P^J_u is checked directly (lengths capped).
bool is_bp(const AffinePermutation& w, const ReflectionSet& K, const ReflectionSet& J,
           int cap = default_length_cap);

struct GrassmannianBP {
  AffinePermutation v;
  AffinePermutation u;
  ReflectionSet K;
  int removed;  ///< the node s with K = (S(w) | J) \ {s}
};

/// Tries s in S(w) \ J, first those outside D_R(w) and then the rest, each in
/// increasing order, and returns the first K = (S(w) | J) \ {s} giving a BP
/// decomposition w = vu with S(u) | J == K.
std::optional<GrassmannianBP> find_grassmannian_bp(const AffinePermutation& w,
                                                   const ReflectionSet& J,
                                                   int cap = default_length_cap);
/// Every admissible s, not only the first one.
std::vector<GrassmannianBP> all_grassmannian_bps(const AffinePermutation& w,
                                                 const ReflectionSet& J,
                                                 int cap = default_length_cap);

/// Fibre label of a maximal factor: W_{S(v)} is of type A_p and v is the
/// maximal element of the quotient by the node at position `missing_position`
/// (1-based along the interval), i.e. the Grassmannian Gr(a, p + 1).
struct GrassmannianLabel {
  std::vector<int> nodes;  ///< S(v) in interval order
  int missing;             ///< the node of K_{i-1} \ K_i
  int a;                   ///< 1-based position of `missing` in `nodes`
  int p;                   ///< number of nodes

  int gr_k() const { return a; }
  int gr_n() const { return p + 1; }
};

struct BPFactor {
  AffinePermutation v;
  ReflectionSet K_before;  ///< K_{i-1}
  ReflectionSet K_after;   ///< K_i
  bool maximal;
  std::optional<GrassmannianLabel> grassmannian;  ///< present iff maximal
};

/// w = v_1 ... v_m with K_0 = S(w) | J > K_1 > ... > K_m = J, one node removed
/// per step, and u_i = v_i u_{i+1} a Grassmannian BP decomposition w.r.t. K_i.
struct BPDecomposition {
  AffinePermutation w;
  ReflectionSet J;
  std::vector<BPFactor> factors;

  bool all_maximal() const;
  /// Products u_i = v_i ... v_m, i = 1..m+1 (the last is the identity).
  std::vector<AffinePermutation> tails() const;
  /// Products w_i = v_1 ... v_i, i = 0..m (the first is the identity).
  std::vector<AffinePermutation> heads() const;
};

/// v is maximal in W_{S(v)}^{K & S(v)}: S(v) finite and
/// l(v) = l(w_0(S(v))) - l(w_0(K & S(v))).
bool is_maximal_coset_element(const AffinePermutation& v, const ReflectionSet& K);

std::optional<BPDecomposition> complete_bp_decomposition(const AffinePermutation& w,
                                                         const ReflectionSet& J,
                                                         int cap = default_length_cap);

/// Grassmannian fibres of the iterated bundle, base first. Throws
/// Error(not_smooth) when no complete maximal BP decomposition exists.
std::vector<GrassmannianLabel> fibre_tower(const AffinePermutation& w,
                                           const ReflectionSet& J,
                                           int cap = default_length_cap);

/// Smoothness of X^J(w) via w * w_0(J & S(w)). Requires w in W^J.
bool is_smooth_partial(const AffinePermutation& w, const ReflectionSet& J);

}  // namespace schubert
