#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "annular/arith.hpp"

namespace annular {

/// A rooted forest on a vertex subset of {1, ..., k}; every arc points from a
/// vertex to its parent, towards the root of its tree. Columns of a paired
/// array are vertices here, which is why the vertex set may be a subset.
class RootedForest {
 public:
  /// Edgeless forest on all of [k].
  explicit RootedForest(int k);
  /// `parent` has k+1 entries, parent[v] == 0 marks a root and parent[0] is
  /// ignored. `present` (k+1 entries, optional) restricts the vertex set.
  RootedForest(int k, std::vector<int> parent, std::vector<char> present = {});

  /// Edgeless forest on the given vertices of [k].
  static RootedForest edgeless(int k, std::span<const int> vertices);

  int bound() const { return k_; }
  bool contains(int v) const { return v >= 1 && v <= k_ && present_[static_cast<std::size_t>(v)]; }
  std::vector<int> vertices() const;
  int vertex_count() const;

  /// 0 for a root.
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  bool is_root(int v) const { return contains(v) && parent(v) == 0; }
  std::vector<int> roots() const;
  int root_of(int v) const;
  /// Vertices of the tree rooted at `root`.
  std::vector<int> component(int root) const;

  /// Adds the arc root -> target; `from` must currently be a root and
  /// `target` must lie in another tree.
  void add_arc(int from, int target);
  void remove_arc(int from);

  bool contains_arcs_of(const RootedForest& sub) const;
  std::vector<std::pair<int, int>> arcs() const;

  std::string to_string() const;

  friend bool operator==(const RootedForest&, const RootedForest&) = default;
  friend auto operator<=>(const RootedForest&, const RootedForest&) = default;

 private:
  void check_acyclic() const;

  int k_;
  std::vector<int> parent_;
  std::vector<char> present_;
};

/// A forest, the roots r_1 < ... < r_m whose trees get attached elsewhere,
/// and the tuple (a_1, ..., a_m) with a_m safe. The remaining roots of `base`
/// are the surviving roots s_1 < ... < s_n.
struct CompletionInput {
  RootedForest base;
  std::vector<int> eliminated;
  std::vector<int> tuple;
};

struct CompletionResult {
  RootedForest forest;
  /// Images (pi(1), ..., pi(m)), 1-based. The added arcs are (r_i, a_{pi(i)}).
  std::vector<int> fcp;
};

struct CompletionInverse {
  std::vector<int> tuple;
  /// Terminating sigma; the forward completion permutation is its inverse.
  std::vector<int> sigma;
  RootedForest base;
};

/// Staged forest completion. With `check_stages`, asserts after every stage
/// that the working graph is a forest rooted at r_{i+1..m} and the surviving
/// roots, and that b_m stays safe.
CompletionResult fca_forward(const CompletionInput& input, bool check_stages = false);

/// Removes arcs (r_i, c_i), r_1 < ... < r_m non-roots, and recovers the tuple
/// whose forward completion of the remaining forest gives back `forest`.
CompletionInverse fca_inverse(const RootedForest& forest, std::vector<std::pair<int, int>> removals);

/// |V|^{m-1} |S| where S is the union of the surviving trees.
BigInt count_completions(const RootedForest& base, std::span<const int> eliminated);

/// Every forest on the vertices of `base` whose root set is `target_roots` and
/// which contains every arc of `base`. Exhaustive search; small k only.
std::vector<RootedForest> enumerate_superforests(const RootedForest& base, std::span<const int> target_roots);

/// Every rooted forest on [k]. Small k only.
std::vector<RootedForest> all_rooted_forests(int k);

/// True when following `parent` (0 = root) from every present vertex reaches a
/// root. Both vectors are indexed by vertex, entry 0 unused.
bool is_acyclic_parent_map(const std::vector<int>& parent, const std::vector<char>& present);

std::vector<int> invert_permutation(std::span<const int> images_one_based);

}  // namespace annular
