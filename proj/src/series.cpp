#include "schubert/series.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

IntSeries::IntSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw Error(ErrorKind::invalid_argument, "negative series order");
}

IntSeries::IntSeries(int order, std::vector<BigInt> coefficients)
    : c_(std::move(coefficients)) {
  if (order < 0) throw Error(ErrorKind::invalid_argument, "negative series order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

IntSeries IntSeries::polynomial(int order, std::initializer_list<long long> c) {
  std::vector<BigInt> coeffs;
  for (long long x : c) coeffs.emplace_back(x);
  return polynomial(order, coeffs);
}

IntSeries IntSeries::polynomial(int order, const std::vector<BigInt>& c) {
  return IntSeries(order, c);
}

IntSeries IntSeries::truncate(int order) const {
  if (order > this->order()) {
    throw Error(ErrorKind::invalid_argument, "cannot extend a truncated series");
  }
  return IntSeries(order, c_);
}

IntSeries IntSeries::derivative() const {
  if (order() < 1) return IntSeries(0);
  std::vector<BigInt> d(order());
  for (int k = 1; k <= order(); ++k) d[k - 1] = c_[k] * k;
  return IntSeries(order() - 1, std::move(d));
}

IntSeries IntSeries::t_derivative() const {
  std::vector<BigInt> d(c_.size());
  for (int k = 0; k <= order(); ++k) d[k] = c_[k] * k;
  return IntSeries(order(), std::move(d));
}

IntSeries IntSeries::times_t() const {
  std::vector<BigInt> d(c_.size() + 1);
  std::copy(c_.begin(), c_.end(), d.begin() + 1);
  return IntSeries(order() + 1, std::move(d));
}

IntSeries IntSeries::divide_by_t() const {
  if (c_.front() != 0) {
    throw Error(ErrorKind::non_unit_divisor, "series has a nonzero constant term");
  }
  if (order() < 1) throw Error(ErrorKind::invalid_argument, "order too small");
  return IntSeries(order() - 1, std::vector<BigInt>(c_.begin() + 1, c_.end()));
}

IntSeries IntSeries::divide_exact(const BigInt& d) const {
  std::vector<BigInt> q(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] % d != 0) {
      throw Error(ErrorKind::non_unit_divisor,
                  "coefficient not divisible by " + d.str());
    }
    q[k] = c_[k] / d;
  }
  return IntSeries(order(), std::move(q));
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.c_[k] + b.c_[k];
  return IntSeries(n, std::move(c));
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.c_[k] - b.c_[k];
  return IntSeries(n, std::move(c));
}

IntSeries operator-(const IntSeries& a) {
  std::vector<BigInt> c(a.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a.c_[k];
  return IntSeries(a.order(), std::move(c));
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntSeries(n, std::move(c));
}

IntSeries operator*(const BigInt& s, const IntSeries& a) {
  std::vector<BigInt> c(a.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.c_[k];
  return IntSeries(a.order(), std::move(c));
}

IntSeries operator/(const IntSeries& a, const IntSeries& b) {
  const BigInt& b0 = b.c_.front();
  if (b0 != 1 && b0 != -1) {
    throw Error(ErrorKind::non_unit_divisor,
                "divisor constant term must be +1 or -1, got " + b0.str());
  }
  const int n = std::min(a.order(), b.order());
  std::vector<BigInt> q(n + 1);
  for (int k = 0; k <= n; ++k) {
    BigInt r = a.c_[k];
    for (int j = 1; j <= k; ++j) r -= b.c_[j] * q[k - j];
    q[k] = r * b0;  // b0 is its own inverse
  }
  return IntSeries(n, std::move(q));
}

IntSeries sqrt_one_minus_4t(int order) {
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  // c_k = -2 * Catalan(k - 1)
  BigInt catalan = 1;
  for (int k = 1; k <= order; ++k) {
    c[k] = -2 * catalan;
    const int j = k - 1;
    catalan = catalan * 2 * (2 * j + 1) / (j + 2);
  }
  return IntSeries(order, std::move(c));
}

IntSeries series_AM(int order) {
  const IntSeries numerator =
      IntSeries::polynomial(order + 1, {1, -2}) - sqrt_one_minus_4t(order + 1);
  return numerator.divide_by_t().divide_exact(2);
}

IntSeries series_AB(int order) {
  const IntSeries am = series_AM(order + 1);
  const IntSeries shifted =
      (IntSeries::polynomial(order + 1, {1, -1}) * am).divide_by_t();
  return shifted - IntSeries::one(order);
}

IntSeries series_Abar(int order) {
  const IntSeries ab = series_AB(order);
  const IntSeries marked = ab.t_derivative();
  return (BigInt(2) * ab * marked) / (IntSeries::one(order) - ab * ab);
}

IntSeries series_AF(int order) {
  return series_AM(order) / (IntSeries::one(order) - series_AB(order));
}

IntSeries series_Astar(int order) {
  const IntSeries shifted = series_AF(order).times_t().truncate(order);
  return shifted / IntSeries::polynomial(order, {1, -1});
}

IntSeries series_A_assembled(int order) {
  const IntSeries one = IntSeries::one(order);
  const IntSeries star = series_Astar(order);
  const IntSeries empty_diagrams =
      IntSeries::polynomial(order, {0, 0, 1}) / IntSeries::polynomial(order, {1, -1});
  return series_Abar(order) + star.t_derivative() / (one - star) + empty_diagrams;
}

namespace {

std::vector<BigInt> to_big(std::initializer_list<long long> c) {
  std::vector<BigInt> out;
  for (long long x : c) out.emplace_back(x);
  return out;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

std::vector<BigInt> SeriesFormula::numerator_P() {
  return poly_mul(to_big({1, -4}), to_big({2, -11, 18, -16, 10, -4}));
}

std::vector<BigInt> SeriesFormula::numerator_Q() {
  return poly_mul(poly_mul(to_big({1, -1}), to_big({2, -1})), to_big({1, -6, 6}));
}

std::vector<BigInt> SeriesFormula::cubic() { return to_big({1, -6, 8, -4}); }

std::vector<BigInt> SeriesFormula::denominator() {
  return poly_mul(poly_mul(to_big({1, -1}), to_big({1, -4})), cubic());
}

IntSeries series_A_closed(int order) {
  const IntSeries P = IntSeries::polynomial(order, SeriesFormula::numerator_P());
  const IntSeries Q = IntSeries::polynomial(order, SeriesFormula::numerator_Q());
  const IntSeries D = IntSeries::polynomial(order, SeriesFormula::denominator());
  return (P - Q * sqrt_one_minus_4t(order)) / D;
}

HighPrecision cubic_residual(const HighPrecision& t) {
  return 1 - 6 * t + 8 * t * t - 4 * t * t * t;
}

HighPrecision alpha() {
  HighPrecision lo = 0;
  HighPrecision hi = HighPrecision(1) / 2;
  // The cubic is positive at 0 and negative at 1/2.
  for (int iter = 0; iter < 200; ++iter) {
    HighPrecision mid = (lo + hi) / 2;
    if (cubic_residual(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

AsymptoticReport asymptotic_check(int order, const std::vector<int>& sample_ns) {
  AsymptoticReport report;
  report.alpha = alpha();
  report.residual = abs(cubic_residual(report.alpha));
  const IntSeries a = series_A_closed(order);
  for (int n : sample_ns) {
    if (n < 0 || n > order) {
      throw Error(ErrorKind::invalid_argument, "sample index outside series order");
    }
    HighPrecision scaled = HighPrecision(a[n]) * pow(report.alpha, n);
    report.samples.push_back({n, a[n], scaled});
  }
  return report;
}

SeriesName parse_series_name(const std::string& s) {
  if (s == "A") return SeriesName::A;
  if (s == "AM") return SeriesName::AM;
  if (s == "AB") return SeriesName::AB;
  if (s == "AF") return SeriesName::AF;
  if (s == "ABAR") return SeriesName::ABAR;
  if (s == "ASTAR") return SeriesName::ASTAR;
  throw Error(ErrorKind::invalid_argument, "unknown series '" + s + "'");
}

std::string to_string(SeriesName name) {
  switch (name) {
    case SeriesName::A: return "A";
    case SeriesName::AM: return "AM";
    case SeriesName::AB: return "AB";
    case SeriesName::AF: return "AF";
    case SeriesName::ABAR: return "ABAR";
    case SeriesName::ASTAR: return "ASTAR";
  }
  return "?";
}

IntSeries series_by_formula(SeriesName name, int order, bool closed_form) {
  switch (name) {
    case SeriesName::A:
      return closed_form ? series_A_closed(order) : series_A_assembled(order);
    case SeriesName::AM: return series_AM(order);
    case SeriesName::AB: return series_AB(order);
    case SeriesName::AF: return series_AF(order);
    case SeriesName::ABAR: return series_Abar(order);
    case SeriesName::ASTAR: return series_Astar(order);
  }
  throw Error(ErrorKind::invalid_argument, "unknown series");
}

}  // namespace schubert
