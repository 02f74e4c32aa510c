#pragma once

#include <cstdint>
#include <vector>

#include "schubert/affine_permutation.hpp"

namespace schubert {

/// A finite permutation pattern given by its values, e.g. {3, 4, 1, 2}.
class Pattern {
 public:
  explicit Pattern(std::vector<int> values);

  static Pattern p3412() { return Pattern({3, 4, 1, 2}); }
  static Pattern p4231() { return Pattern({4, 2, 3, 1}); }

  const std::vector<int>& values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> values_;
};

/// Positions i_1 < ... < i_k (any integers) whose values w(i_j) are in the
/// relative order of the pattern. The pattern's first entry must exceed its
/// last one, so every occurrence spans an inversion of w and fits in a window
/// of width 2 * max_j |w(j) - j|; the search is complete under that bound.
bool contains_pattern(const AffinePermutation& w, const Pattern& p);

/// Generic backtracking search restricted to i_1 in [1, n] and the remaining
/// positions in (i_1, i_1 + width]. Works for any pattern.
bool contains_pattern_within(const AffinePermutation& w, const Pattern& p,
                             std::int64_t width);

/// max_j |w(j) - j| over one window.
std::int64_t displacement(const AffinePermutation& w);

/// Avoids both 3412 and 4231.
bool is_smooth(const AffinePermutation& w);

enum class SpiralDirection { x, y };

struct SpiralSpec {
  int base = 0;  ///< the node s_i
  int k = 2;     ///< repetition count, at least 2
  SpiralDirection direction = SpiralDirection::x;
};

/// x(i, k(n-1)) = s_{i+m-1} ... s_{i+1} s_i or y(i, k(n-1)) = s_{i-m+1} ... s_i
/// with m = k(n-1) and indices mod n.
AffinePermutation spiral(const SpiralSpec& spec, int n);
std::vector<int> spiral_word(const SpiralSpec& spec, int n);
/// spiral(spec, n) times the longest element of W_{S \ {s_i}}.
AffinePermutation twisted_spiral(const SpiralSpec& spec, int n);
bool is_twisted_spiral(const AffinePermutation& w);
bool is_rationally_smooth(const AffinePermutation& w);

struct EnumerationOptions {
  int workers = 1;
  double budget_seconds = 0.0;  ///< 0 disables the time budget
  int max_length = -1;          ///< -1 picks a generous default
};

/// All 3412/4231 avoiders in S~_n, ordered by length then window.
/// Breadth-first by length; stops once 2n consecutive lengths contribute
/// nothing and the running count equals the generating-function coefficient.
std::vector<AffinePermutation> enumerate_smooth(int n,
                                                const EnumerationOptions& options = {});

}  // namespace schubert
