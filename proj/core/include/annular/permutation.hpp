#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace annular {

/// A point of [p] ∪ [q]': `label` is 1-based, `primed` selects the second row.
struct Point {
  int label = 1;
  bool primed = false;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& pt);
/// Parses "7" or "3'".
Point parse_point(const std::string& text);

/// The ground set [p] ∪ [q]'. Unprimed i is stored at index i-1 and primed j'
/// at index p+j-1; the encoding never leaves the library.
class GroundSet {
 public:
  GroundSet(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int size() const { return p_ + q_; }

  int encode(Point pt) const;
  Point decode(int index) const;
  bool is_primed(int index) const { return index >= p_; }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int p_;
  int q_;
};

class Permutation {
 public:
  /// Validates that `images` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  bool is_fixed_point_free_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// h with h(i) = f(g(i)). This is the one composition order used everywhere,
/// so the product of a pairing with gamma^{-1} is compose(mu, gamma.inverse()).
Permutation compose(const Permutation& f, const Permutation& g);

/// Number of disjoint cycles of f, fixed points included.
int cycle_count(const Permutation& f);

/// (1 2 ... p)(1' 2' ... q') on [p] ∪ [q]'. Requires p >= 1.
Permutation gamma(int p, int q);

/// Cycle count of the involution `partner` composed with gamma_{p,q}^{-1},
/// computed without materialising either permutation.
int product_cycle_count(std::span<const int> partner, int p, int q);

class Pairing {
 public:
  /// `partner[i]` is the point matched with i.
  Pairing(GroundSet ground, std::vector<int> partner);
  static Pairing from_pairs(GroundSet ground, const std::vector<std::pair<Point, Point>>& pairs);

  const GroundSet& ground() const { return ground_; }
  std::span<const int> partner() const { return partner_; }
  int mixed_count() const { return mixed_; }

  /// Pairs as (smaller index, larger index), sorted.
  std::vector<std::pair<int, int>> pairs() const;
  Permutation to_permutation() const { return Permutation(partner_); }

  friend bool operator==(const Pairing& a, const Pairing& b) {
    return a.ground_ == b.ground_ && a.partner_ == b.partner_;
  }

 private:
  GroundSet ground_;
  std::vector<int> partner_;
  int mixed_ = 0;
};

/// Number of pairings on [p] ∪ [q]', optionally restricted to s mixed pairs:
/// C(p,s) C(q,s) s! (p-s-1)!! (q-s-1)!!. Returned as 64-bit; callers stay
/// well inside the oracle ceiling.
std::uint64_t pairing_count(int p, int q, std::optional<int> s = std::nullopt);

/// Checks the parity/range preconditions shared by every pairing enumeration.
void check_pairing_parameters(int p, int q, std::optional<int> s);

namespace detail {

template <class Visitor>
void visit_pairings_from(std::vector<int>& partner, int p, std::optional<int> s, int mixed,
                         Visitor& visit) {
  const int n = static_cast<int>(partner.size());
  int first = 0;
  while (first < n && partner[static_cast<std::size_t>(first)] >= 0) ++first;
  if (first == n) {
    if (!s || mixed == *s) visit(std::span<const int>(partner));
    return;
  }
  for (int other = first + 1; other < n; ++other) {
    if (partner[static_cast<std::size_t>(other)] >= 0) continue;
    const int is_mixed = (first < p) != (other < p) ? 1 : 0;
    if (s && mixed + is_mixed > *s) continue;
    partner[static_cast<std::size_t>(first)] = other;
    partner[static_cast<std::size_t>(other)] = first;
    visit_pairings_from(partner, p, s, mixed + is_mixed, visit);
    partner[static_cast<std::size_t>(first)] = -1;
    partner[static_cast<std::size_t>(other)] = -1;
  }
}

}  // namespace detail

/// Visits every pairing of [p] ∪ [q]' (with exactly s mixed pairs when s is
/// given) as a raw partner array. Order: the smallest unpaired point is matched
/// with each larger unpaired point in increasing order, recursively.
template <class Visitor>
void visit_pairings(int p, int q, std::optional<int> s, Visitor&& visit) {
  check_pairing_parameters(p, q, s);
  std::vector<int> partner(static_cast<std::size_t>(p + q), -1);
  detail::visit_pairings_from(partner, p, s, 0, visit);
}

/// Visits the pairings whose first decision matches point 0 with point
/// `branch + 1`. The branches 0 .. p+q-2 partition the full enumeration and
/// concatenate to the same order as visit_pairings.
template <class Visitor>
void visit_pairing_branch(int p, int q, std::optional<int> s, int branch, Visitor&& visit) {
  check_pairing_parameters(p, q, s);
  const int n = p + q;
  if (n == 0) {
    if (branch == 0 && (!s || *s == 0)) {
      std::vector<int> empty;
      visit(std::span<const int>(empty));
    }
    return;
  }
  const int other = branch + 1;
  if (other <= 0 || other >= n) return;
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  const int is_mixed = (0 < p) != (other < p) ? 1 : 0;
  if (s && is_mixed > *s) return;
  partner[0] = other;
  partner[static_cast<std::size_t>(other)] = 0;
  detail::visit_pairings_from(partner, p, s, is_mixed, visit);
}

/// Materialised enumeration, for small ground sets.
std::vector<Pairing> enumerate_pairings(int p, int q, std::optional<int> s = std::nullopt);

}  // namespace annular
