#pragma once

#include <utility>
#include <vector>

#include "annular/paired_array.hpp"

namespace annular {

/// A pairing on a subset of [p] (or of [q]' for the bottom row; the prime is
/// implied by context). Pairs are stored with a < b and sorted.
struct PartialPairing {
  std::vector<std::pair<int, int>> pairs;

  static PartialPairing from_pairs(std::vector<std::pair<int, int>> pairs);
  std::vector<int> support() const;
  int size() const { return static_cast<int>(pairs.size()); }

  friend bool operator==(const PartialPairing&, const PartialPairing&) = default;
};

/// Redundant-pair removal on a canonical array.
struct XiImage {
  PartialPairing mu1;
  PartialPairing mu2;
  PairedArray beta;
};

XiImage xi(const PairedArray& array);

/// Rebuilds the canonical array with top row of size p and bottom row of size q.
PairedArray xi_inverse(const PartialPairing& mu1, const PartialPairing& mu2, const PairedArray& beta);

/// Non-mixed-pair removal on a minimal canonical array. kappa1 holds
/// distinct numbers from [p], kappa2 distinct numbers from [q] read as primed.
struct ZetaImage {
  std::vector<int> kappa1;
  std::vector<int> kappa2;
  PairedArray beta;
};

ZetaImage zeta(const PairedArray& array);

PairedArray zeta_inverse(const std::vector<int>& kappa1, const std::vector<int>& kappa2, const PairedArray& beta);

/// Type and shape of a full vertical array. Vertex numbers run 1..s in each
/// row, left to right; `a_prime` is a bottom-row number, `b` a top-row number.
struct VerticalArrayProfile {
  int tail_length = 0;
  std::vector<int> tail;
  int a_prime = 0;
  int b = 0;
  std::vector<int> shape;
  bool a_prime_by_fallback = false;
  bool b_by_fallback = false;
  bool a_prime_rightmost = false;
  bool b_in_tail = false;
};

VerticalArrayProfile profile(const PairedArray& array);

}  // namespace annular
