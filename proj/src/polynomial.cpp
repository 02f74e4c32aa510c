#include "schubert/polynomial.hpp"

#include <sstream>

namespace schubert {

Polynomial::Polynomial(std::vector<BigInt> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(int degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

BigInt Polynomial::at_one() const {
  BigInt sum = 0;
  for (const auto& x : c_) sum += x;
  return sum;
}

bool Polynomial::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i) {
    --j;
    if (c_[i] != c_[j]) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigInt mag = c_[k] < 0 ? BigInt(-c_[k]) : c_[k];
    if (!first) os << (c_[k] < 0 ? " - " : " + ");
    else if (c_[k] < 0) os << '-';
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return Polynomial();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

}  // namespace schubert
