#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace schubert {

/// An element of the affine symmetric group S~_n: a bijection w of the
/// integers with w(i + n) = w(i) + n and w(1) + ... + w(n) = n(n + 1)/2,
/// stored through its window [w(1), ..., w(n)].
///
/// Finite type A elements are the affine permutations whose support is a
/// proper subset of the n-cycle, so one type serves both.
class AffinePermutation {
 public:
  using value_type = std::int64_t;

  static AffinePermutation identity(int n);
  /// Validates the window invariants; throws Error(invalid_window) otherwise.
  static AffinePermutation from_window(std::vector<value_type> window);
  /// Product s_{word[0]} s_{word[1]} ... of simple reflections.
  static AffinePermutation from_word(int n, std::span<const int> word);
  static AffinePermutation from_word(int n, std::initializer_list<int> word);
  static AffinePermutation reflection(int n, int i);

  int period() const noexcept { return static_cast<int>(window_.size()); }
  std::span<const value_type> window() const noexcept { return window_; }

  /// w(i) for any integer i.
  value_type operator()(value_type i) const noexcept;

  AffinePermutation inverse() const;
  /// w * s_i: swaps window positions i and i + 1 (s_0 crosses the boundary).
  AffinePermutation times_reflection(int i) const;
  /// s_i * w: swaps the values congruent to i and i + 1.
  AffinePermutation reflection_times(int i) const;

  bool is_identity() const noexcept;
  std::string to_string() const;

  friend AffinePermutation operator*(const AffinePermutation& a,
                                     const AffinePermutation& b);
  friend bool operator==(const AffinePermutation&,
                         const AffinePermutation&) = default;
  /// Period first, then lexicographic window.
  friend std::strong_ordering operator<=>(const AffinePermutation& a,
                                          const AffinePermutation& b);

 private:
  explicit AffinePermutation(std::vector<value_type> window)
      : window_(std::move(window)) {}

  std::vector<value_type> window_;
};

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& w) const noexcept;
};

}  // namespace schubert
