#include "schubert/smoothness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "schubert/coxeter.hpp"
#include "schubert/error.hpp"
#include "schubert/series.hpp"

namespace schubert {

Pattern::Pattern(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw Error(ErrorKind::invalid_argument, "pattern must be a permutation of 1..k");
    }
  }
  if (values_.empty()) throw Error(ErrorKind::invalid_argument, "empty pattern");
}

std::int64_t displacement(const AffinePermutation& w) {
  std::int64_t d = 0;
  auto win = w.window();
  for (std::size_t j = 0; j < win.size(); ++j) {
    d = std::max<std::int64_t>(d, std::llabs(win[j] - static_cast<std::int64_t>(j + 1)));
  }
  return d;
}

namespace {

// Values w(1), ..., w(n + width) so that index p holds w(p + 1).
std::vector<std::int64_t> unrolled(const AffinePermutation& w, std::int64_t width) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(w.period() + width));
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = w(static_cast<std::int64_t>(p) + 1);
  return v;
}

bool extend(const std::vector<std::int64_t>& v, const std::vector<int>& pattern,
            std::vector<std::int64_t>& chosen, std::size_t next, std::size_t end) {
  const std::size_t k = chosen.size();
  if (k == pattern.size()) return true;
  for (std::size_t p = next; p < end; ++p) {
    const std::int64_t x = v[p];
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = (pattern[j] < pattern[k]) == (chosen[j] < x);
    }
    if (!ok) continue;
    chosen.push_back(x);
    if (extend(v, pattern, chosen, p + 1, end)) return true;
    chosen.pop_back();
  }
  return false;
}

bool contains_3412(const std::vector<std::int64_t>& v, int n, std::int64_t width) {
  for (int a = 0; a < n; ++a) {
    for (std::int64_t d = a + 3; d <= a + width && d < static_cast<std::int64_t>(v.size()); ++d) {
      if (v[a] <= v[d]) continue;
      std::int64_t b = a + 1;
      while (b < d && v[b] < v[a]) ++b;
      for (std::int64_t c = b + 1; c < d; ++c) {
        if (v[c] < v[d]) return true;
      }
    }
  }
  return false;
}

bool contains_4231(const std::vector<std::int64_t>& v, int n, std::int64_t width) {
  for (int a = 0; a < n; ++a) {
    for (std::int64_t d = a + 3; d <= a + width && d < static_cast<std::int64_t>(v.size()); ++d) {
      if (v[a] <= v[d]) continue;
      bool have_low = false;
      std::int64_t low = 0;
      for (std::int64_t p = a + 1; p < d; ++p) {
        if (v[p] <= v[d] || v[p] >= v[a]) continue;
        if (have_low && v[p] > low) return true;
        if (!have_low || v[p] < low) low = v[p];
        have_low = true;
      }
    }
  }
  return false;
}

}  // namespace

bool contains_pattern_within(const AffinePermutation& w, const Pattern& p,
                             std::int64_t width) {
  const auto v = unrolled(w, width);
  std::vector<std::int64_t> chosen;
  for (int first = 0; first < w.period(); ++first) {
    chosen.assign(1, v[first]);
    const std::size_t end = static_cast<std::size_t>(first + width + 1);
    if (extend(v, p.values(), chosen, first + 1, std::min(end, v.size()))) return true;
  }
  return false;
}

bool contains_pattern(const AffinePermutation& w, const Pattern& p) {
  if (p.values().front() < p.values().back()) {
    throw Error(ErrorKind::invalid_argument,
                "bounded search needs a pattern whose first entry exceeds its last");
  }
  if (p.size() == 1) return true;
  const std::int64_t width = 2 * displacement(w);
  if (width == 0) return false;
  if (p == Pattern::p3412()) return contains_3412(unrolled(w, width), w.period(), width);
  if (p == Pattern::p4231()) return contains_4231(unrolled(w, width), w.period(), width);
  return contains_pattern_within(w, p, width);
}

bool is_smooth(const AffinePermutation& w) {
  const std::int64_t width = 2 * displacement(w);
  if (width == 0) return true;
  const auto v = unrolled(w, width);
  return !contains_3412(v, w.period(), width) && !contains_4231(v, w.period(), width);
}

std::vector<int> spiral_word(const SpiralSpec& spec, int n) {
  if (spec.k < 2) {
    throw Error(ErrorKind::invalid_argument, "spirals need k >= 2");
  }
  if (spec.base < 0 || spec.base >= n) {
    throw Error(ErrorKind::index_out_of_range, "spiral base outside [0, n)");
  }
  const int m = spec.k * (n - 1);
  std::vector<int> word(m);
  for (int t = 0; t < m; ++t) {
    // Letter t from the left; the rightmost letter is s_i.
    const int offset = m - 1 - t;
    const int idx = spec.direction == SpiralDirection::x ? spec.base + offset
                                                         : spec.base - offset;
    word[t] = ((idx % n) + n) % n;
  }
  return word;
}

AffinePermutation spiral(const SpiralSpec& spec, int n) {
  return AffinePermutation::from_word(n, spiral_word(spec, n));
}

AffinePermutation twisted_spiral(const SpiralSpec& spec, int n) {
  ReflectionSet rest = ReflectionSet::all(n);
  rest.erase(spec.base);
  return spiral(spec, n) * longest_element(rest);
}

bool is_twisted_spiral(const AffinePermutation& w) {
  const int n = w.period();
  const ReflectionSet descents = right_descents(w);
  if (descents.size() != n - 1) return false;
  const ReflectionSet missing = ReflectionSet::all(n) - descents;
  const int i = missing.indices().front();
  const AffinePermutation u0 = longest_element(descents);
  const AffinePermutation v = w * u0;
  const std::int64_t lv = length(v);
  if (lv != length(w) - length(u0)) return false;
  if (lv % (n - 1) != 0 || lv / (n - 1) < 2) return false;
  const int k = static_cast<int>(lv / (n - 1));
  for (auto dir : {SpiralDirection::x, SpiralDirection::y}) {
    if (v == spiral({i, k, dir}, n)) return true;
  }
  return false;
}

bool is_rationally_smooth(const AffinePermutation& w) {
  return is_smooth(w) || is_twisted_spiral(w);
}

namespace {

std::vector<char> smooth_flags(const std::vector<AffinePermutation>& layer, int workers) {
  std::vector<char> flags(layer.size(), 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) flags[k] = is_smooth(layer[k]) ? 1 : 0;
  };
  const std::size_t chunks = std::max(1, workers);
  if (chunks == 1 || layer.size() < 256) {
    work(0, layer.size());
    return flags;
  }
  std::vector<std::thread> threads;
  const std::size_t step = (layer.size() + chunks - 1) / chunks;
  for (std::size_t begin = 0; begin < layer.size(); begin += step) {
    threads.emplace_back(work, begin, std::min(layer.size(), begin + step));
  }
  for (auto& t : threads) t.join();
  return flags;
}

}  // namespace

std::vector<AffinePermutation> enumerate_smooth(int n, const EnumerationOptions& options) {
  if (n < 2) throw Error(ErrorKind::invalid_period, "enumerate_smooth needs n >= 2");
  const auto start = std::chrono::steady_clock::now();
  const BigInt expected = series_A_closed(n)[n];
  const int max_length = options.max_length >= 0 ? options.max_length : 8 * n * n + 16;

  std::vector<AffinePermutation> found;
  std::vector<AffinePermutation> layer{AffinePermutation::identity(n)};
  int empty_run = 0;
  for (int len = 0; len <= max_length; ++len) {
    if (options.budget_seconds > 0) {
      std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
      if (spent.count() > options.budget_seconds) {
        throw Error(ErrorKind::budget_exceeded,
                    "enumerate_smooth exceeded its time budget at length " +
                        std::to_string(len));
      }
    }
    const auto flags = smooth_flags(layer, options.workers);
    bool any = false;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      if (flags[k]) {
        found.push_back(layer[k]);
        any = true;
      }
    }
    empty_run = any ? 0 : empty_run + 1;
    if (empty_run >= 2 * n && BigInt(found.size()) == expected) return found;
    layer = next_length_layer(layer);
  }
  throw Error(ErrorKind::budget_exceeded,
              "no stopping point for n = " + std::to_string(n) + " up to length " +
                  std::to_string(max_length) + " (found " + std::to_string(found.size()) +
                  ", expected " + expected.str() + ")");
}

}  // namespace schubert
