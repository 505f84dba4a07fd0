#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "annular/distribution.hpp"

namespace annular {

/// One brute-force enumeration request. `threads == 0` defers to the
/// ANNULAR_THREADS environment variable, then to the hardware.
struct OracleJob {
  int p = 0;
  int q = 0;
  std::optional<int> s;
  int threads = 0;
  /// Called with (finished shards, total shards); never concurrently.
  std::function<void(int, int)> progress;
  int ceiling = 18;

  void validate() const;
};

int resolve_threads(int hint);

/// Cycle counts of mu gamma^{-1} over every pairing mu of the job.
CycleDistribution brute_distribution(const OracleJob& job);

/// One pass over all pairings of (p, q), split by mixed-pair count s. The
/// job's own s filter is ignored.
std::map<int, CycleDistribution> brute_distribution_by_s(const OracleJob& job);

/// The brute-force series evaluated at x = 0, 1, ..., max_x.
std::vector<BigInt> brute_series_values(const OracleJob& job, int max_x);

/// Rooted two-vertex maps with vertex degrees p and q and s edges joining the
/// two vertices, counted by genus. Each pairing paired with each root dart is
/// reduced to a canonical code, and distinct codes are counted.
std::map<int, BigInt> brute_rooted_maps(int p, int q, int s);

}  // namespace annular
