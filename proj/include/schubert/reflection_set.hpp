#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace schubert {

/// A subset of the simple reflections s_0, ..., s_{n-1} of the affine
/// symmetric group, i.e. a set of nodes of the n-cycle Dynkin diagram.
/// Used for descent sets, supports and parabolic subsets J, K.
class ReflectionSet {
 public:
  static constexpr int max_period = 63;

  ReflectionSet() = default;
  explicit ReflectionSet(int n);
  ReflectionSet(int n, std::initializer_list<int> indices);
  ReflectionSet(int n, const std::vector<int>& indices);

  static ReflectionSet from_bits(int n, std::uint64_t bits);
  static ReflectionSet all(int n);

  int period() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(int i) const;
  void insert(int i);
  void erase(int i);

  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept;
  /// Every proper subset of the cycle generates a finite parabolic subgroup
  /// (a product of type A groups); the full set generates the affine group.
  bool is_finite_type() const noexcept { return !is_full(); }

  bool subset_of(const ReflectionSet& other) const;
  std::vector<int> indices() const;
  /// Connected components on the n-cycle, each listed in cyclic order
  /// starting from its leftmost node. A full set is one component.
  std::vector<std::vector<int>> components() const;

  std::string to_string() const;

  friend ReflectionSet operator|(const ReflectionSet& a, const ReflectionSet& b);
  friend ReflectionSet operator&(const ReflectionSet& a, const ReflectionSet& b);
  friend ReflectionSet operator-(const ReflectionSet& a, const ReflectionSet& b);
  friend bool operator==(const ReflectionSet& a, const ReflectionSet& b) = default;

 private:
  void check_index(int i) const;

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

using ParabolicSubset = ReflectionSet;

}  // namespace schubert
