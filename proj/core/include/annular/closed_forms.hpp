#pragma once

#include <functional>
#include <optional>

#include "annular/arith.hpp"
#include "annular/distribution.hpp"
#include "annular/polynomial.hpp"

namespace annular {

/// Row sizes p, q of the two-cycle permutation, and the number s of mixed
/// pairs when a single s is meant. n = (p+q)/2 is the edge count.
struct SeriesSpec {
  int p = 1;
  int q = 1;
  std::optional<int> s;

  int n() const { return (p + q) / 2; }
  /// Throws std::invalid_argument unless p, q (and s, when present) are >= 1,
  /// share a parity, and s <= min(p, q).
  void validate() const;
  int s_value() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// One-vertex series for even p >= 2:
/// (2n-1)!! sum_k 2^{k-1} C(n, k-1) C(x, k), n = p/2.
BinomialBasisPolynomial hz_series(int p);

/// C(k-1, (p-s)/2 - i) C(k-1, (q-s)/2 - j) - C(k-1, (p+s)/2 - i) C(k-1, (q+s)/2 - j)
BigInt delta(const SeriesSpec& spec, int k, int i, int j);

using DeltaFn = std::function<BigInt(const SeriesSpec&, int, int, int)>;

/// Binomial-basis coefficients b_k of the two-vertex series with exactly s
/// mixed pairs. `delta_fn` is replaceable so verification can run against a
/// deliberately broken difference term.
BinomialBasisPolynomial main_series(const SeriesSpec& spec, const DeltaFn& delta_fn = delta);

/// s C(p, (p-s)/2) C(q, (q-s)/2), the coefficient of x^n.
BigInt planar_coefficient(const SeriesSpec& spec);

/// Summed over s >= 1, p = q = n.
Polynomial jackson_series(int n);

/// Summed over s >= 1, any p, q >= 1 of equal parity; p > q is swapped.
Polynomial gs_series(int p, int q);

/// sum over admissible s of to_monomial(main_series(p, q, s)).
Polynomial summed_main_series(int p, int q, const DeltaFn& delta_fn = delta);

/// Number of full vertical arrays with s pairs, k columns, i+1 / j+1 marks.
BigInt f_full_vertical(int s, int k, int i, int j);

/// Number of vertical arrays with s pairs, k columns, i+1 / j+1 marks.
BigInt v_vertical(int s, int k, int i, int j);

/// k-th binomial-basis coefficient assembled from the reduction chain
/// (redundant-pair removal, non-mixed removal, vertical count).
BigInt c_via_reduction(const SeriesSpec& spec, int k);

/// All coefficients k = 0..n+1 of c_via_reduction.
BinomialBasisPolynomial reduction_series(const SeriesSpec& spec);

/// Genus from cycle count: g = (n-k)/2 for two vertices, (n+1-k)/2 for one.
/// Empty when that is not a nonnegative integer.
std::optional<int> genus_of(int k, int n, int vertices);

/// |C_{p,q}| / (2n-1)!, the factor turning cycle counts into rooted-map counts.
Rational rooted_map_factor(int p, int q);

/// a_{p,q,k}^{(s)} * |C_{p,q}| / (2n-1)!, asserted integral.
BigInt rooted_map_count(const SeriesSpec& spec, int k);

/// Convenience: the monomial view of a binomial-basis series as a distribution.
CycleDistribution distribution_of(const BinomialBasisPolynomial& series);

}  // namespace annular
