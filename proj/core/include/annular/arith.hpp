#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace annular {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an exact computation that must produce an integer does not.
/// Always indicates a formula defect upstream, never bad user input.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt factorial(std::int64_t n);

/// C(n, k) for n >= 0. Zero when k < 0 or k > n. Negative n is rejected.
BigInt binom(std::int64_t n, std::int64_t k);

/// m!! for odd m >= -1, with (-1)!! = 1.
BigInt double_factorial(std::int64_t m);

/// (x)_i = x(x-1)...(x-i+1); 1 for i = 0 and 0 for i < 0.
BigInt falling_factorial(std::int64_t x, std::int64_t i);

BigInt pow2(std::int64_t e);

/// Numerator of r, throwing IntegralityError with `what` when r is fractional.
BigInt require_integral(const Rational& r, const std::string& what);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace annular
