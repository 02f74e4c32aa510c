#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "schubert/bigint.hpp"

namespace schubert {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N with exact
/// integer coefficients. Binary operations truncate to the smaller order.
class IntSeries {
 public:
  IntSeries() = default;
  explicit IntSeries(int order);
  IntSeries(int order, std::vector<BigInt> coefficients);

  /// Integer polynomial viewed as a series of the given order.
  static IntSeries polynomial(int order, std::initializer_list<long long> c);
  static IntSeries polynomial(int order, const std::vector<BigInt>& c);
  static IntSeries one(int order) { return polynomial(order, {1}); }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  /// Zero beyond the truncation order is not implied; callers stay in range.
  const BigInt& operator[](int k) const { return c_.at(k); }

  IntSeries truncate(int order) const;
  IntSeries derivative() const;    ///< order drops by one
  IntSeries t_derivative() const;  ///< t d/dt, same order
  IntSeries times_t() const;       ///< order grows by one
  IntSeries divide_by_t() const;   ///< needs c_0 == 0; order drops by one
  IntSeries divide_exact(const BigInt& d) const;

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const BigInt& s, const IntSeries& a);
  /// Throws Error(non_unit_divisor) unless b_0 is +1 or -1.
  friend IntSeries operator/(const IntSeries& a, const IntSeries& b);
  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<BigInt> c_;
};

/// sqrt(1 - 4t) = 1 - 2t - 2t^2 - 4t^3 - 10t^4 - ...
IntSeries sqrt_one_minus_4t(int order);

/// Increasing fully supported staircase diagrams on the path: m_n.
IntSeries series_AM(int order);
/// Increasing broken staircases on the path: b_n.
IntSeries series_AB(int order);
/// Fully supported spherical diagrams on the cycle.
IntSeries series_Abar(int order);
/// Fully supported diagrams on the path: f_n.
IntSeries series_AF(int order);
/// t A_F(t) / (1 - t).
IntSeries series_Astar(int order);
/// Spherical diagrams on the cycle assembled from the pieces above.
IntSeries series_A_assembled(int order);
/// (P(t) - Q(t) sqrt(1-4t)) / ((1-t)(1-4t)(1-6t+8t^2-4t^3)).
IntSeries series_A_closed(int order);

/// Integer polynomials of the closed form, lowest degree first.
struct SeriesFormula {
  static std::vector<BigInt> numerator_P();
  static std::vector<BigInt> numerator_Q();
  static std::vector<BigInt> denominator();
  /// 1 - 6t + 8t^2 - 4t^3, whose real root is alpha.
  static std::vector<BigInt> cubic();
};

using HighPrecision = boost::multiprecision::cpp_dec_float_50;

/// The real root of 1 - 6t + 8t^2 - 4t^3 by bisection on [0, 1/2].
HighPrecision alpha();
HighPrecision cubic_residual(const HighPrecision& t);

struct AsymptoticSample {
  int n;
  BigInt a_n;
  HighPrecision scaled;  ///< a_n * alpha^n
};

struct AsymptoticReport {
  HighPrecision alpha;
  HighPrecision residual;
  std::vector<AsymptoticSample> samples;
};

AsymptoticReport asymptotic_check(int order, const std::vector<int>& sample_ns);

/// The series addressed by name on the command line.
enum class SeriesName { A, AM, AB, AF, ABAR, ASTAR };
SeriesName parse_series_name(const std::string& s);
std::string to_string(SeriesName name);
/// Closed form only exists for A; the other series use their defining formula.
IntSeries series_by_formula(SeriesName name, int order, bool closed_form);

}  // namespace schubert
