#pragma once

#include <map>
#include <string>

#include "annular/arith.hpp"
#include "annular/polynomial.hpp"

namespace annular {

/// Exact map k -> number of enumerated objects with k cycles. Zero counts are
/// never stored, so two distributions compare equal iff they agree everywhere.
class CycleDistribution {
 public:
  CycleDistribution() = default;

  void add(int k, const BigInt& count = 1);
  void merge(const CycleDistribution& other);

  BigInt at(int k) const;
  const std::map<int, BigInt>& counts() const { return counts_; }
  BigInt total() const;
  bool empty() const { return counts_.empty(); }

  /// sum_k count_k x^k
  Polynomial as_polynomial() const;
  /// Reads the coefficients of x^1, x^2, ...; rejects negative coefficients
  /// and a nonzero constant term.
  static CycleDistribution from_polynomial(const Polynomial& poly);

  friend bool operator==(const CycleDistribution&, const CycleDistribution&) = default;

  std::string to_string() const;

 private:
  std::map<int, BigInt> counts_;
};

}  // namespace annular
