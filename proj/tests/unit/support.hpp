#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "annular/distribution.hpp"
#include "annular/permutation.hpp"

namespace annular::testing {

/// Cycle distribution built the slow way: materialise every pairing and
/// gamma as Permutation objects and compose them. Shares nothing with the
/// oracle's fast cycle counter.
inline CycleDistribution naive_distribution(int p, int q, std::optional<int> s) {
  CycleDistribution d;
  const Permutation g_inv = gamma(p, q).inverse();
  for (const auto& mu : enumerate_pairings(p, q, s)) d.add(cycle_count(compose(mu.to_permutation(), g_inv)));
  return d;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234ULL);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Permutation random_permutation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation(images);
}

}  // namespace annular::testing
