#pragma once

#include <string>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

/// Integer polynomial in q with trailing zero coefficients trimmed. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial monomial(int degree, BigInt coefficient = 1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  BigInt coefficient(int k) const;
  BigInt at_one() const;

  /// q^d P(1/q) == P(q) with d the degree.
  bool is_palindromic() const;
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

inline bool is_palindromic(const Polynomial& p) { return p.is_palindromic(); }

}  // namespace schubert
