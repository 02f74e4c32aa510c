#include "schubert/affine_permutation.hpp"

#include <numeric>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/reflection_set.hpp"

namespace schubert {

namespace {

using value_type = AffinePermutation::value_type;

// Floor division and the matching residue in [1, n].
struct Split {
  value_type shift;
  value_type residue;
};

Split split(value_type i, value_type n) {
  value_type q = (i - 1) / n;
  if ((i - 1) % n < 0) --q;
  return {q, i - q * n};
}

void check_period(int n) {
  if (n < 2 || n > ReflectionSet::max_period) {
    throw Error(ErrorKind::invalid_period,
                "period must lie in [2, 63], got " + std::to_string(n));
  }
}

}  // namespace

AffinePermutation AffinePermutation::identity(int n) {
  check_period(n);
  std::vector<value_type> window(n);
  std::iota(window.begin(), window.end(), value_type{1});
  return AffinePermutation(std::move(window));
}

AffinePermutation AffinePermutation::from_window(std::vector<value_type> window) {
  const int n = static_cast<int>(window.size());
  check_period(n);
  std::vector<bool> seen(n, false);
  value_type sum = 0;
  for (value_type x : window) {
    value_type r = split(x, n).residue - 1;
    if (seen[r]) {
      throw Error(ErrorKind::invalid_window,
                  "window entries must have distinct residues mod n");
    }
    seen[r] = true;
    sum += x;
  }
  if (sum != value_type{n} * (n + 1) / 2) {
    throw Error(ErrorKind::invalid_window,
                "window entries must sum to n(n+1)/2");
  }
  return AffinePermutation(std::move(window));
}

AffinePermutation AffinePermutation::from_word(int n, std::span<const int> word) {
  AffinePermutation w = identity(n);
  for (int i : word) w = w.times_reflection(i);
  return w;
}

AffinePermutation AffinePermutation::from_word(int n,
                                               std::initializer_list<int> word) {
  return from_word(n, std::span<const int>(word.begin(), word.size()));
}

AffinePermutation AffinePermutation::reflection(int n, int i) {
  return identity(n).times_reflection(i);
}

value_type AffinePermutation::operator()(value_type i) const noexcept {
  const auto [q, r] = split(i, period());
  return window_[r - 1] + q * period();
}

AffinePermutation AffinePermutation::inverse() const {
  const int n = period();
  std::vector<value_type> inv(n);
  for (int i = 1; i <= n; ++i) {
    const auto [q, r] = split(window_[i - 1], n);
    inv[r - 1] = i - q * n;
  }
  return AffinePermutation(std::move(inv));
}

AffinePermutation AffinePermutation::times_reflection(int i) const {
  const int n = period();
  if (i < 0 || i >= n) {
    throw Error(ErrorKind::index_out_of_range,
                "reflection index " + std::to_string(i) + " outside [0, " +
                    std::to_string(n) + ")");
  }
  std::vector<value_type> w = window_;
  if (i == 0) {
    value_type first = w.front();
    w.front() = w.back() - n;
    w.back() = first + n;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::reflection_times(int i) const {
  const int n = period();
  if (i < 0 || i >= n) {
    throw Error(ErrorKind::index_out_of_range,
                "reflection index " + std::to_string(i) + " outside [0, " +
                    std::to_string(n) + ")");
  }
  // s_i exchanges i and i + 1 (mod n shifts included).
  const value_type lo = i == 0 ? n : i;
  std::vector<value_type> w = window_;
  for (value_type& x : w) {
    const auto [q, r] = split(x, n);
    if (r == lo) {
      x = x + 1;
    } else if (r == (lo % n) + 1) {
      x = x - 1;
    }
  }
  return AffinePermutation(std::move(w));
}

bool AffinePermutation::is_identity() const noexcept {
  for (int i = 0; i < period(); ++i) {
    if (window_[i] != i + 1) return false;
  }
  return true;
}

std::string AffinePermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < period(); ++i) {
    if (i) os << ',';
    os << window_[i];
  }
  os << ']';
  return os.str();
}

AffinePermutation operator*(const AffinePermutation& a,
                            const AffinePermutation& b) {
  if (a.period() != b.period()) {
    throw Error(ErrorKind::period_mismatch, "cannot multiply elements of periods " +
                                                std::to_string(a.period()) + " and " +
                                                std::to_string(b.period()));
  }
  std::vector<value_type> w(a.period());
  for (int i = 0; i < a.period(); ++i) w[i] = a(b.window_[i]);
  return AffinePermutation(std::move(w));
}

std::strong_ordering operator<=>(const AffinePermutation& a,
                                 const AffinePermutation& b) {
  if (auto c = a.period() <=> b.period(); c != 0) return c;
  return a.window_ <=> b.window_;
}

std::size_t AffinePermutationHash::operator()(
    const AffinePermutation& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.period());
  for (auto x : w.window()) {
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace schubert
