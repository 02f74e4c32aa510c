#include "schubert/coxeter.hpp"

#include <algorithm>
#include <unordered_set>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_same_period(const AffinePermutation& w, const ReflectionSet& J) {
  if (w.period() != J.period()) {
    throw Error(ErrorKind::period_mismatch,
                "element and reflection set have different periods");
  }
}

}  // namespace

std::int64_t length(const AffinePermutation& w) {
  const int n = w.period();
  auto win = w.window();
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::int64_t q = floor_div(win[j] - win[i], n);
      total += q < 0 ? -q : q;
    }
  }
  return total;
}

bool is_right_descent(const AffinePermutation& w, int i) {
  const int n = w.period();
  if (i < 0 || i >= n) {
    throw Error(ErrorKind::index_out_of_range, "reflection index out of range");
  }
  auto win = w.window();
  if (i == 0) return win[n - 1] - n > win[0];
  return win[i - 1] > win[i];
}

ReflectionSet right_descents(const AffinePermutation& w) {
  ReflectionSet d(w.period());
  for (int i = 0; i < w.period(); ++i) {
    if (is_right_descent(w, i)) d.insert(i);
  }
  return d;
}

ReflectionSet left_descents(const AffinePermutation& w) {
  return right_descents(w.inverse());
}

std::vector<int> reduced_word(const AffinePermutation& w) {
  std::vector<int> word;
  AffinePermutation x = w;
  for (;;) {
    int s = -1;
    for (int i = 0; i < x.period(); ++i) {
      if (is_right_descent(x, i)) {
        s = i;
        break;
      }
    }
    if (s < 0) break;
    word.push_back(s);
    x = x.times_reflection(s);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

ReflectionSet support(const AffinePermutation& w) {
  return ReflectionSet(w.period(), reduced_word(w));
}

AffinePermutation longest_element(const ReflectionSet& J) {
  if (J.is_full()) {
    throw Error(ErrorKind::infinite_group,
                "the full node set generates the infinite affine group");
  }
  const auto nodes = J.indices();
  AffinePermutation w = AffinePermutation::identity(J.period());
  // Climb the right weak order until every s in J is a descent.
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : nodes) {
      if (!is_right_descent(w, i)) {
        w = w.times_reflection(i);
        grew = true;
      }
    }
  }
  return w;
}

std::int64_t longest_length(const ReflectionSet& J) {
  if (J.is_full()) {
    throw Error(ErrorKind::infinite_group,
                "the full node set generates the infinite affine group");
  }
  std::int64_t total = 0;
  for (const auto& c : J.components()) {
    const std::int64_t m = static_cast<std::int64_t>(c.size());
    total += m * (m + 1) / 2;
  }
  return total;
}

CosetDecomposition coset_decompose(const AffinePermutation& w,
                                   const ReflectionSet& K) {
  check_same_period(w, K);
  AffinePermutation v = w;
  std::vector<int> stripped;
  for (bool found = true; found;) {
    found = false;
    for (int i : K.indices()) {
      if (is_right_descent(v, i)) {
        v = v.times_reflection(i);
        stripped.push_back(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  return {std::move(v), AffinePermutation::from_word(w.period(), stripped)};
}

LeftCosetDecomposition left_coset_decompose(const AffinePermutation& w,
                                            const ReflectionSet& K) {
  auto [v, u] = coset_decompose(w.inverse(), K);
  return {u.inverse(), v.inverse()};
}

bool in_quotient(const AffinePermutation& w, const ReflectionSet& J) {
  check_same_period(w, J);
  return (right_descents(w) & J).empty();
}

bool bruhat_leq(const AffinePermutation& x, const AffinePermutation& w) {
  if (x.period() != w.period()) {
    throw Error(ErrorKind::period_mismatch, "Bruhat comparison across periods");
  }
  AffinePermutation a = x;
  AffinePermutation b = w;
  std::int64_t la = length(a);
  std::int64_t lb = length(b);
  while (lb > 0) {
    if (la > lb) return false;
    int s = 0;
    while (!is_right_descent(b, s)) ++s;
    if (is_right_descent(a, s)) {
      a = a.times_reflection(s);
      --la;
    }
    b = b.times_reflection(s);
    --lb;
  }
  return la == 0;
}

std::vector<AffinePermutation> bruhat_lower_interval(const AffinePermutation& w,
                                                     const ReflectionSet& J,
                                                     int cap) {
  check_same_period(w, J);
  if (length(w) > cap) {
    throw Error(ErrorKind::cap_exceeded,
                "length " + std::to_string(length(w)) + " exceeds interval cap " +
                    std::to_string(cap));
  }
  std::unordered_set<AffinePermutation, AffinePermutationHash> seen;
  std::vector<AffinePermutation> all{AffinePermutation::identity(w.period())};
  seen.insert(all.front());
  for (int s : reduced_word(w)) {
    const std::size_t count = all.size();
    for (std::size_t k = 0; k < count; ++k) {
      AffinePermutation y = all[k].times_reflection(s);
      if (seen.insert(y).second) all.push_back(std::move(y));
    }
  }
  std::vector<AffinePermutation> out;
  for (auto& x : all) {
    if (in_quotient(x, J)) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial poincare_polynomial(const AffinePermutation& w, const ReflectionSet& J,
                               int cap) {
  if (!in_quotient(w, J)) {
    throw Error(ErrorKind::not_in_quotient,
                w.to_string() + " has a right descent in " + J.to_string());
  }
  const auto interval = bruhat_lower_interval(w, J, cap);
  std::vector<BigInt> c(length(w) + 1);
  for (const auto& x : interval) c[length(x)] += 1;
  return Polynomial(std::move(c));
}

Polynomial poincare_polynomial(const AffinePermutation& w, int cap) {
  return poincare_polynomial(w, ReflectionSet(w.period()), cap);
}

std::vector<AffinePermutation> next_length_layer(
    const std::vector<AffinePermutation>& layer) {
  std::vector<AffinePermutation> next;
  for (const auto& w : layer) {
    for (int i = 0; i < w.period(); ++i) {
      if (!is_right_descent(w, i)) next.push_back(w.times_reflection(i));
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

std::vector<std::vector<AffinePermutation>> elements_up_to_length(int n,
                                                                  int max_len) {
  std::vector<std::vector<AffinePermutation>> layers;
  layers.push_back({AffinePermutation::identity(n)});
  for (int l = 1; l <= max_len; ++l) layers.push_back(next_length_layer(layers.back()));
  return layers;
}

}  // namespace schubert
