#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annular/closed_forms.hpp"
#include "annular/paired_array.hpp"

namespace annular::checks {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Number of individual identities compared.
  long long cases = 0;
  /// First mismatch, empty on success.
  std::string detail;
  double seconds = 0.0;
};

/// brute_distribution(p, 0) against hz_series(p) for even p <= max_p.
CheckResult harer_zagier(int max_p);

/// brute_distribution against main_series for every feasible (p, q, s) with
/// p + q <= max_pq.
CheckResult main_theorem(int max_pq, const DeltaFn& delta_fn = delta);

/// Summed main series against gs_series for p + q <= max_pq, and
/// gs_series(n, n) against jackson_series(n) for n <= max_n.
CheckResult cross_formulas(int max_pq, int max_n, const DeltaFn& delta_fn = delta);

/// Vanishing top coefficient, parity zeros and the planar coefficient for
/// p + q <= max_pq.
CheckResult structural_zeros(int max_pq, const DeltaFn& delta_fn = delta);

/// Bijectivity and roundtrips of forest completion on every base forest with
/// at most max_k vertices.
CheckResult forest_completion(int max_k);

/// Forward differences of the brute-force series against c_via_reduction for
/// p + q <= max_pq.
CheckResult reduction_chain(int max_pq);

/// v and f against exhaustive enumeration of vertical arrays.
CheckResult vertical_counts(int max_s, int max_k, int max_ij);

/// xi and zeta roundtrips (and the matching count identities) on every
/// canonical array with p + q <= max_pq and k <= max_k.
CheckResult reductions_exhaustive(int max_pq, int max_k);

/// xi and zeta roundtrips on random canonical arrays with p + q <= max_pq.
CheckResult reductions_random(int max_pq, int samples, std::uint64_t seed);

/// Construction then label recovery is the identity on every paired
/// surjection with p + q <= max_pq and k <= max_k.
CheckResult label_recovery_roundtrip(int max_pq, int max_k);

/// The worked example with p = 11, q = 9, s = 5, k = 4: the pairing
/// {1,9} {5,8} {6,7} {2',3'} {7',8'} {2,4'} {3,1'} {4,9'} {10,6'} {11,5'}
/// with fibres {3,6,8,2',4'}, {3',8'}, {1,2,5,9,10,5',7',9'}, {4,7,11,1',6'}.
PairedSurjection worked_example_surjection();

CheckResult worked_example();

/// Rooted-map counts from the main series against brute_rooted_maps.
CheckResult rooted_maps(int max_pq);

/// Conjunction of several results under one name.
CheckResult combine(std::string name, const std::vector<CheckResult>& parts);

}  // namespace annular::checks
