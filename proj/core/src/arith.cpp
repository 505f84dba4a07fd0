#include "annular/arith.hpp"

#include <vector>

namespace annular {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt r = 1;
  for (std::int64_t t = 2; t <= n; ++t) r *= t;
  return r;
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binom: negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;
  }
  return r;
}

BigInt double_factorial(std::int64_t m) {
  if (m < -1 || (m % 2 == 0)) {
    throw std::invalid_argument("double_factorial needs odd m >= -1, got " + std::to_string(m));
  }
  BigInt r = 1;
  for (std::int64_t t = m; t > 1; t -= 2) r *= t;
  return r;
}

BigInt falling_factorial(std::int64_t x, std::int64_t i) {
  if (i < 0) return 0;
  BigInt r = 1;
  for (std::int64_t t = 0; t < i; ++t) r *= x - t;
  return r;
}

BigInt pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow2 of negative exponent");
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

BigInt require_integral(const Rational& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw IntegralityError(what + ": non-integral value " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

}  // namespace annular
