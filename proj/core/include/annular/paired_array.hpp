#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "annular/forest.hpp"
#include "annular/permutation.hpp"

namespace annular {

inline constexpr int kTopRow = 0;
inline constexpr int kBottomRow = 1;

/// A 2 x k grid of cells holding ordered vertex lists, a perfect matching on
/// the vertices, and a set of marked cells per row.
///
/// Vertices carry no labels. They are identified by position: the top row's
/// vertices are 0..p-1 read column by column, left to right, and the bottom
/// row's are p..p+q-1 in the same order. Two arrays are equal iff their cell
/// sizes, matchings and marks agree.
class PairedArray {
 public:
  /// `cell_sizes[row]` and `marks[row]` have k entries (column c at index
  /// c-1). `partner` is a fixed-point-free involution on all vertices.
  PairedArray(int k, std::array<std::vector<int>, 2> cell_sizes, std::vector<int> partner,
              std::array<std::vector<char>, 2> marks);

  int columns() const { return k_; }
  int row_size(int row) const { return row_size_[static_cast<std::size_t>(row)]; }
  int vertex_count() const { return row_size_[0] + row_size_[1]; }

  int cell_size(int row, int column) const;
  bool marked(int row, int column) const;
  std::vector<int> marked_columns(int row) const;
  int mark_count(int row) const;

  /// Half-open id range [first, last) of the cell's vertices.
  std::pair<int, int> cell_range(int row, int column) const;
  /// Id of the rightmost vertex in the cell, or -1 when the cell is empty.
  int rightmost(int row, int column) const;
  bool is_rightmost(int vertex) const;

  int row_of(int vertex) const { return vertex < row_size_[0] ? kTopRow : kBottomRow; }
  int column_of(int vertex) const { return column_[static_cast<std::size_t>(vertex)]; }
  int partner(int vertex) const { return partner_[static_cast<std::size_t>(vertex)]; }
  bool is_mixed(int vertex) const { return row_of(vertex) != row_of(partner(vertex)); }
  int mixed_count() const;

  bool is_canonical() const { return mark_count(kTopRow) == 1 && mark_count(kBottomRow) == 1; }
  bool is_vertical() const { return mixed_count() * 2 == vertex_count(); }
  /// Every column holds at least one vertex.
  bool is_full() const;
  /// A redundant pair is non-mixed with neither vertex rightmost in an
  /// unmarked cell.
  bool is_redundant_pair(int vertex) const;
  bool is_minimal() const;

  std::span<const int> partner_map() const { return partner_; }
  const std::array<std::vector<int>, 2>& cell_sizes() const { return sizes_; }

  friend bool operator==(const PairedArray& a, const PairedArray& b) {
    return a.k_ == b.k_ && a.sizes_ == b.sizes_ && a.partner_ == b.partner_ && a.marks_ == b.marks_;
  }
  friend bool operator<(const PairedArray& a, const PairedArray& b) {
    return std::tie(a.k_, a.sizes_, a.partner_, a.marks_) < std::tie(b.k_, b.sizes_, b.partner_, b.marks_);
  }

 private:
  int k_;
  std::array<std::vector<int>, 2> sizes_;
  std::vector<int> partner_;
  std::array<std::vector<char>, 2> marks_;
  std::array<int, 2> row_size_{};
  std::array<std::vector<int>, 2> cell_start_;
  std::vector<int> column_;
};

/// Incremental construction of an array from keyed vertices. Items are given
/// per row in left-to-right order; keys are arbitrary distinct integers.
class ArrayDraft {
 public:
  explicit ArrayDraft(int k);

  void add_vertex(int row, int column, long key);
  void pair(long a, long b);
  void mark(int row, int column);

  PairedArray build() const;

 private:
  struct Item {
    int column;
    long key;
  };
  int k_;
  std::array<std::vector<Item>, 2> rows_;
  std::vector<std::pair<long, long>> pairs_;
  std::array<std::vector<char>, 2> marks_;
};

/// Per-condition outcome of checking an array, with witnesses on failure.
struct ConditionReport {
  bool balance = true;
  bool nonempty = true;
  bool forest = true;
  std::vector<int> unbalanced_columns;
  std::vector<int> empty_unmarked_columns;
  std::string forest_witness;
  std::array<std::optional<RootedForest>, 2> rightmost_forests;

  bool ok() const { return balance && nonempty && forest; }
  std::string summary() const;
};

ConditionReport validate(const PairedArray& array);

/// psi for one row: entry c is the column holding the partner of the rightmost
/// vertex of the cell (row, c), or 0 when c is marked or empty in that row.
std::vector<int> rightmost_map(const PairedArray& array, int row);

/// Functional digraph of psi on the columns that hold a vertex or a mark in
/// `row`. Throws std::invalid_argument when it is not a forest.
RootedForest rightmost_forest(const PairedArray& array, int row);

/// Plain-text rendering: one line per row, cells as bracketed lists. Each
/// vertex is written as the number of its pair (pairs numbered 1, 2, ... by
/// their first vertex), and a marked cell ends with ▣.
std::string render(const PairedArray& array);

/// A numbered object in one row: a vertex, or the mark of a marked cell
/// (vertex == -1), which sits rightmost in its cell.
struct RowObject {
  int column;
  int vertex;
};

/// Objects of a row in left-to-right order; object t gets the number t+1.
std::vector<RowObject> numbered_objects(const PairedArray& array, int row);

/// (mu, phi) with phi onto [k] and phi(mu(i)) = phi(gamma_{p,q}(i)).
struct PairedSurjection {
  Pairing mu;
  int k;
  /// phi[index] in 1..k, indexed by the ground-set encoding of mu.
  std::vector<int> phi;

  friend bool operator==(const PairedSurjection&, const PairedSurjection&) = default;
};

bool satisfies_condition_one(const PairedSurjection& ps);

/// Lays the points of each phi-fibre out in increasing order, marks the
/// columns of 1 and 1', and forgets the labels.
PairedArray from_paired_surjection(const PairedSurjection& ps);

/// Relabels a canonical array: 1 goes on the leftmost vertex of the marked
/// top cell, then i on the leftmost unlabelled top vertex in the column of
/// the partner of i-1; likewise for the bottom row.
PairedSurjection label_recovery(const PairedArray& array);

/// All paired surjections for (p, q, s, k), built by colouring the cycles of
/// gamma mu onto [k]. Small cases only.
std::vector<PairedSurjection> enumerate_paired_surjections(int p, int q, int s, int k);

/// Canonical arrays obtained from enumerate_paired_surjections.
std::vector<PairedArray> enumerate_canonical_arrays(int p, int q, int s, int k);

/// Every vertical array with s pairs, k columns, i+1 top marks and j+1 bottom
/// marks (full arrays only when `full_only`), found by exhaustive search over
/// shapes, matchings and marks and filtered through validate.
std::vector<PairedArray> enumerate_vertical_arrays(int s, int k, int i, int j, bool full_only = false);

}  // namespace annular
