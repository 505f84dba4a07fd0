#pragma once

#include <string>
#include <vector>

#include "annular/arith.hpp"

namespace annular {

/// Integer polynomial in the monomial basis; coeffs[d] multiplies x^d.
/// Trailing zero coefficients are trimmed so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^d, zero outside the stored range.
  BigInt coeff(int d) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt evaluate(const BigInt& x) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Polynomial written as sum_k coeffs[k] * C(x, k).
class BinomialBasisPolynomial {
 public:
  BinomialBasisPolynomial() = default;
  explicit BinomialBasisPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;
  int top() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Value at an integer point, computed in the binomial basis directly.
  BigInt evaluate(std::int64_t x) const;

  friend bool operator==(const BinomialBasisPolynomial&, const BinomialBasisPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Expands C(x,k) = (1/k!) sum_m s(k,m) x^m with signed Stirling numbers of the
/// first kind. Throws IntegralityError if the result has a fractional coefficient.
Polynomial to_monomial(const BinomialBasisPolynomial& poly);

/// Inverse of to_monomial, via forward differences of the values at 0..deg.
BinomialBasisPolynomial from_monomial(const Polynomial& poly);

/// Signed Stirling numbers of the first kind, rows 0..max_k.
std::vector<std::vector<BigInt>> stirling_first_kind(int max_k);

/// b_k = sum_{m<=k} (-1)^{k-m} C(k,m) values[m], for k = 0..values.size()-1.
std::vector<BigInt> forward_differences(const std::vector<BigInt>& values);

/// Monomial coefficients of C(x + shift, n), as exact rationals.
std::vector<Rational> shifted_binomial_coeffs(std::int64_t shift, int n);

}  // namespace annular
