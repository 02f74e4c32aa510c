#include "schubert/reflection_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

ReflectionSet::ReflectionSet(int n) : n_(n) {
  if (n < 2 || n > max_period) {
    throw Error(ErrorKind::invalid_period,
                "period must lie in [2, 63], got " + std::to_string(n));
  }
}

ReflectionSet::ReflectionSet(int n, std::initializer_list<int> indices)
    : ReflectionSet(n) {
  for (int i : indices) insert(i);
}

ReflectionSet::ReflectionSet(int n, const std::vector<int>& indices)
    : ReflectionSet(n) {
  for (int i : indices) insert(i);
}

ReflectionSet ReflectionSet::from_bits(int n, std::uint64_t bits) {
  ReflectionSet s(n);
  if ((bits & ~full_mask(n)) != 0) {
    throw Error(ErrorKind::index_out_of_range, "reflection bits exceed period");
  }
  s.bits_ = bits;
  return s;
}

ReflectionSet ReflectionSet::all(int n) {
  return from_bits(n, full_mask(n));
}

void ReflectionSet::check_index(int i) const {
  if (i < 0 || i >= n_) {
    throw Error(ErrorKind::index_out_of_range,
                "reflection index " + std::to_string(i) + " outside [0, " +
                    std::to_string(n_) + ")");
  }
}

bool ReflectionSet::contains(int i) const {
  check_index(i);
  return (bits_ >> i) & 1u;
}

void ReflectionSet::insert(int i) {
  check_index(i);
  bits_ |= std::uint64_t{1} << i;
}

void ReflectionSet::erase(int i) {
  check_index(i);
  bits_ &= ~(std::uint64_t{1} << i);
}

int ReflectionSet::size() const noexcept { return std::popcount(bits_); }

bool ReflectionSet::is_full() const noexcept {
  return n_ > 0 && bits_ == full_mask(n_);
}

bool ReflectionSet::subset_of(const ReflectionSet& other) const {
  return (bits_ & ~other.bits_) == 0;
}

std::vector<int> ReflectionSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> ReflectionSet::components() const {
  std::vector<std::vector<int>> out;
  if (empty()) return out;
  if (is_full()) {
    out.push_back(indices());
    return out;
  }
  int start = 0;
  while (contains(start)) ++start;
  std::vector<int> current;
  for (int step = 1; step <= n_; ++step) {
    int i = (start + step) % n_;
    if (contains(i)) {
      current.push_back(i);
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ReflectionSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

void check_same_period(const ReflectionSet& a, const ReflectionSet& b) {
  if (a.period() != b.period()) {
    throw Error(ErrorKind::period_mismatch, "reflection sets of different period");
  }
}

}  // namespace

ReflectionSet operator|(const ReflectionSet& a, const ReflectionSet& b) {
  check_same_period(a, b);
  return ReflectionSet::from_bits(a.n_, a.bits_ | b.bits_);
}

ReflectionSet operator&(const ReflectionSet& a, const ReflectionSet& b) {
  check_same_period(a, b);
  return ReflectionSet::from_bits(a.n_, a.bits_ & b.bits_);
}

ReflectionSet operator-(const ReflectionSet& a, const ReflectionSet& b) {
  check_same_period(a, b);
  return ReflectionSet::from_bits(a.n_, a.bits_ & ~b.bits_);
}

}  // namespace schubert
