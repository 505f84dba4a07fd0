#include "annular/polynomial.hpp"

#include <sstream>

namespace annular {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || d == 0) out << mag;
    if (d >= 1) out << "x";
    if (d >= 2) out << "^" << d;
  }
  return out.str();
}

BinomialBasisPolynomial::BinomialBasisPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void BinomialBasisPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt BinomialBasisPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt BinomialBasisPolynomial::evaluate(std::int64_t x) const {
  if (x < 0) return to_monomial(*this).evaluate(x);
  BigInt acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    acc += coeffs_[k] * binom(x, static_cast<std::int64_t>(k));
  }
  return acc;
}

std::vector<std::vector<BigInt>> stirling_first_kind(int max_k) {
  // s(k+1, m) = s(k, m-1) - k s(k, m)
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(max_k + 1));
  s[0] = {BigInt(1)};
  for (int k = 0; k < max_k; ++k) {
    const auto& row = s[static_cast<std::size_t>(k)];
    std::vector<BigInt> next(static_cast<std::size_t>(k + 2), 0);
    for (int m = 0; m <= k; ++m) {
      next[static_cast<std::size_t>(m + 1)] += row[static_cast<std::size_t>(m)];
      next[static_cast<std::size_t>(m)] -= row[static_cast<std::size_t>(m)] * k;
    }
    s[static_cast<std::size_t>(k + 1)] = std::move(next);
  }
  return s;
}

Polynomial to_monomial(const BinomialBasisPolynomial& poly) {
  const int top = poly.top();
  if (top < 0) return Polynomial();
  const auto stirling = stirling_first_kind(top);
  std::vector<Rational> acc(static_cast<std::size_t>(top + 1), Rational(0));
  for (int k = 0; k <= top; ++k) {
    const BigInt& b = poly.coeffs()[static_cast<std::size_t>(k)];
    if (b == 0) continue;
    const BigInt kfact = factorial(k);
    for (int m = 0; m <= k; ++m) {
      acc[static_cast<std::size_t>(m)] += Rational(b * stirling[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)], kfact);
    }
  }
  std::vector<BigInt> out;
  out.reserve(acc.size());
  for (std::size_t m = 0; m < acc.size(); ++m) {
    out.push_back(require_integral(acc[m], "to_monomial coefficient of x^" + std::to_string(m)));
  }
  return Polynomial(std::move(out));
}

BinomialBasisPolynomial from_monomial(const Polynomial& poly) {
  const int deg = poly.degree();
  if (deg < 0) return BinomialBasisPolynomial();
  std::vector<BigInt> values;
  for (int x = 0; x <= deg; ++x) values.push_back(poly.evaluate(x));
  return BinomialBasisPolynomial(forward_differences(values));
}

std::vector<BigInt> forward_differences(const std::vector<BigInt>& values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    BigInt acc = 0;
    for (std::size_t m = 0; m <= k; ++m) {
      BigInt term = binom(static_cast<std::int64_t>(k), static_cast<std::int64_t>(m)) * values[m];
      if ((k - m) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Rational> shifted_binomial_coeffs(std::int64_t shift, int n) {
  // prod_{t=0}^{n-1} (x + shift - t) / n!
  std::vector<BigInt> prod{BigInt(1)};
  for (int t = 0; t < n; ++t) {
    const BigInt c = shift - t;
    std::vector<BigInt> next(prod.size() + 1, 0);
    for (std::size_t d = 0; d < prod.size(); ++d) {
      next[d + 1] += prod[d];
      next[d] += prod[d] * c;
    }
    prod = std::move(next);
  }
  const BigInt nfact = factorial(n);
  std::vector<Rational> out;
  out.reserve(prod.size());
  for (const auto& c : prod) out.emplace_back(c, nfact);
  return out;
}

}  // namespace annular
