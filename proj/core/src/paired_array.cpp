#include "annular/paired_array.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace annular {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }
std::size_t col_at(int column) { return static_cast<std::size_t>(column - 1); }

}  // namespace

PairedArray::PairedArray(int k, std::array<std::vector<int>, 2> cell_sizes, std::vector<int> partner,
                         std::array<std::vector<char>, 2> marks)
    : k_(k), sizes_(std::move(cell_sizes)), partner_(std::move(partner)), marks_(std::move(marks)) {
  if (k < 1) throw std::invalid_argument("a paired array needs at least one column");
  for (int row = 0; row < 2; ++row) {
    const auto r = at(row);
    if (sizes_[r].size() != at(k) || marks_[r].size() != at(k)) {
      throw std::invalid_argument("cell size and mark vectors need k entries");
    }
    if (std::any_of(sizes_[r].begin(), sizes_[r].end(), [](int c) { return c < 0; })) {
      throw std::invalid_argument("negative cell size");
    }
    row_size_[r] = std::accumulate(sizes_[r].begin(), sizes_[r].end(), 0);
  }
  const int total = row_size_[0] + row_size_[1];
  if (static_cast<int>(partner_.size()) != total) throw std::invalid_argument("matching size differs from vertex count");
  for (int v = 0; v < total; ++v) {
    const int u = partner_[at(v)];
    if (u < 0 || u >= total || u == v || partner_[at(u)] != v) {
      throw std::invalid_argument("matching is not a perfect matching");
    }
  }
  column_.resize(at(total));
  int id = 0;
  for (int row = 0; row < 2; ++row) {
    cell_start_[at(row)].resize(at(k + 1));
    for (int c = 1; c <= k; ++c) {
      cell_start_[at(row)][col_at(c)] = id;
      for (int t = 0; t < sizes_[at(row)][col_at(c)]; ++t) column_[at(id++)] = c;
    }
    cell_start_[at(row)][at(k)] = id;
  }
}

int PairedArray::cell_size(int row, int column) const { return sizes_[at(row)][col_at(column)]; }

bool PairedArray::marked(int row, int column) const { return marks_[at(row)][col_at(column)] != 0; }

std::vector<int> PairedArray::marked_columns(int row) const {
  std::vector<int> out;
  for (int c = 1; c <= k_; ++c) {
    if (marked(row, c)) out.push_back(c);
  }
  return out;
}

int PairedArray::mark_count(int row) const {
  return static_cast<int>(std::count(marks_[at(row)].begin(), marks_[at(row)].end(), 1));
}

std::pair<int, int> PairedArray::cell_range(int row, int column) const {
  const int first = cell_start_[at(row)][col_at(column)];
  return {first, first + cell_size(row, column)};
}

int PairedArray::rightmost(int row, int column) const {
  const auto [first, last] = cell_range(row, column);
  return first == last ? -1 : last - 1;
}

bool PairedArray::is_rightmost(int vertex) const {
  return rightmost(row_of(vertex), column_of(vertex)) == vertex;
}

int PairedArray::mixed_count() const {
  int count = 0;
  for (int v = 0; v < row_size_[0]; ++v) count += is_mixed(v) ? 1 : 0;
  return count;
}

bool PairedArray::is_full() const {
  for (int c = 1; c <= k_; ++c) {
    if (cell_size(kTopRow, c) + cell_size(kBottomRow, c) == 0) return false;
  }
  return true;
}

bool PairedArray::is_redundant_pair(int vertex) const {
  if (is_mixed(vertex)) return false;
  auto anchors = [&](int v) { return is_rightmost(v) && !marked(row_of(v), column_of(v)); };
  return !anchors(vertex) && !anchors(partner(vertex));
}

bool PairedArray::is_minimal() const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (is_redundant_pair(v)) return false;
  }
  return true;
}

ArrayDraft::ArrayDraft(int k) : k_(k) {
  for (auto& m : marks_) m.assign(at(k), 0);
}

void ArrayDraft::add_vertex(int row, int column, long key) {
  if (column < 1 || column > k_) throw std::invalid_argument("draft column out of range");
  auto& items = rows_[at(row)];
  if (!items.empty() && items.back().column > column) {
    throw std::invalid_argument("draft vertices must be added left to right");
  }
  items.push_back(Item{column, key});
}

void ArrayDraft::pair(long a, long b) { pairs_.emplace_back(a, b); }

void ArrayDraft::mark(int row, int column) {
  if (column < 1 || column > k_) throw std::invalid_argument("draft column out of range");
  marks_[at(row)][col_at(column)] = 1;
}

PairedArray ArrayDraft::build() const {
  std::array<std::vector<int>, 2> sizes;
  std::map<long, int> id_of;
  int id = 0;
  for (int row = 0; row < 2; ++row) {
    sizes[at(row)].assign(at(k_), 0);
    for (const auto& item : rows_[at(row)]) {
      ++sizes[at(row)][col_at(item.column)];
      if (!id_of.emplace(item.key, id++).second) throw std::invalid_argument("duplicate draft key");
    }
  }
  std::vector<int> partner(at(id), -1);
  for (auto [a, b] : pairs_) {
    auto ia = id_of.find(a);
    auto ib = id_of.find(b);
    if (ia == id_of.end() || ib == id_of.end()) throw std::invalid_argument("pair refers to an unknown key");
    partner[at(ia->second)] = ib->second;
    partner[at(ib->second)] = ia->second;
  }
  return PairedArray(k_, std::move(sizes), std::move(partner), marks_);
}

std::string ConditionReport::summary() const {
  std::ostringstream out;
  out << "balance=" << (balance ? "pass" : "fail") << " nonempty=" << (nonempty ? "pass" : "fail")
      << " forest=" << (forest ? "pass" : "fail");
  if (!balance) {
    out << " unbalanced:";
    for (int c : unbalanced_columns) out << " " << c;
  }
  if (!nonempty) {
    out << " empty:";
    for (int c : empty_unmarked_columns) out << " " << c;
  }
  if (!forest) out << " (" << forest_witness << ")";
  return out.str();
}

std::vector<int> rightmost_map(const PairedArray& array, int row) {
  std::vector<int> psi(at(array.columns() + 1), 0);
  for (int c = 1; c <= array.columns(); ++c) {
    const int v = array.rightmost(row, c);
    if (v < 0 || array.marked(row, c)) continue;
    psi[at(c)] = array.column_of(array.partner(v));
  }
  return psi;
}

namespace {

std::optional<RootedForest> try_rightmost_forest(const PairedArray& array, int row, std::string& witness) {
  const int k = array.columns();
  const std::string name = row == kTopRow ? "top" : "bottom";
  if (array.mark_count(row) == 0) {
    witness = name + " row has no marked cell";
    return std::nullopt;
  }
  std::vector<char> present(at(k + 1), 0);
  for (int c = 1; c <= k; ++c) present[at(c)] = array.cell_size(row, c) > 0 || array.marked(row, c);
  const auto psi = rightmost_map(array, row);
  for (int c = 1; c <= k; ++c) {
    if (psi[at(c)] != 0 && !present[at(psi[at(c)])]) {
      witness = name + " row: arc " + std::to_string(c) + "->" + std::to_string(psi[at(c)]) +
                " leaves the occupied columns";
      return std::nullopt;
    }
  }
  if (!is_acyclic_parent_map(psi, present)) {
    witness = name + " row: rightmost digraph has a cycle";
    return std::nullopt;
  }
  return RootedForest(k, psi, present);
}

}  // namespace

RootedForest rightmost_forest(const PairedArray& array, int row) {
  std::string witness;
  auto forest = try_rightmost_forest(array, row, witness);
  if (!forest) throw std::invalid_argument(witness);
  return *std::move(forest);
}

ConditionReport validate(const PairedArray& array) {
  ConditionReport report;
  const int k = array.columns();
  for (int c = 1; c <= k; ++c) {
    int mixed[2] = {0, 0};
    for (int row = 0; row < 2; ++row) {
      const auto [first, last] = array.cell_range(row, c);
      for (int v = first; v < last; ++v) mixed[row] += array.is_mixed(v) ? 1 : 0;
    }
    if (mixed[0] != mixed[1]) {
      report.balance = false;
      report.unbalanced_columns.push_back(c);
    }
    const bool has_vertex = array.cell_size(kTopRow, c) + array.cell_size(kBottomRow, c) > 0;
    if (!has_vertex && !array.marked(kTopRow, c) && !array.marked(kBottomRow, c)) {
      report.nonempty = false;
      report.empty_unmarked_columns.push_back(c);
    }
  }
  for (int row = 0; row < 2; ++row) {
    std::string witness;
    report.rightmost_forests[at(row)] = try_rightmost_forest(array, row, witness);
    if (!report.rightmost_forests[at(row)]) {
      report.forest = false;
      if (!report.forest_witness.empty()) report.forest_witness += "; ";
      report.forest_witness += witness;
    }
  }
  return report;
}

std::string render(const PairedArray& array) {
  std::vector<int> pair_number(at(array.vertex_count()), 0);
  int next = 1;
  for (int v = 0; v < array.vertex_count(); ++v) {
    if (pair_number[at(v)] == 0) {
      pair_number[at(v)] = next;
      pair_number[at(array.partner(v))] = next;
      ++next;
    }
  }
  std::ostringstream out;
  out << "k=" << array.columns() << " p=" << array.row_size(kTopRow) << " q=" << array.row_size(kBottomRow)
      << " s=" << array.mixed_count() << "\n";
  for (int row = 0; row < 2; ++row) {
    out << (row == kTopRow ? "top   " : "bottom");
    for (int c = 1; c <= array.columns(); ++c) {
      out << " [";
      const auto [first, last] = array.cell_range(row, c);
      bool first_item = true;
      for (int v = first; v < last; ++v) {
        out << (first_item ? "" : " ") << pair_number[at(v)];
        first_item = false;
      }
      if (array.marked(row, c)) out << (first_item ? "" : " ") << "▣";
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

std::vector<RowObject> numbered_objects(const PairedArray& array, int row) {
  std::vector<RowObject> out;
  for (int c = 1; c <= array.columns(); ++c) {
    const auto [first, last] = array.cell_range(row, c);
    for (int v = first; v < last; ++v) out.push_back(RowObject{c, v});
    if (array.marked(row, c)) out.push_back(RowObject{c, -1});
  }
  return out;
}

bool satisfies_condition_one(const PairedSurjection& ps) {
  const GroundSet& g = ps.mu.ground();
  if (g.p() < 1 || g.q() < 1 || static_cast<int>(ps.phi.size()) != g.size()) return false;
  const Permutation gam = gamma(g.p(), g.q());
  std::vector<char> hit(at(ps.k + 1), 0);
  for (int i = 0; i < g.size(); ++i) {
    const int c = ps.phi[at(i)];
    if (c < 1 || c > ps.k) return false;
    hit[at(c)] = 1;
    if (ps.phi[at(ps.mu.partner()[at(i)])] != ps.phi[at(gam(i))]) return false;
  }
  return std::count(hit.begin() + 1, hit.end(), 1) == ps.k;
}

PairedArray from_paired_surjection(const PairedSurjection& ps) {
  if (!satisfies_condition_one(ps)) {
    throw std::invalid_argument("(mu, phi) is not a paired surjection");
  }
  const GroundSet& g = ps.mu.ground();
  ArrayDraft draft(ps.k);
  for (int c = 1; c <= ps.k; ++c) {
    for (int i = 0; i < g.p(); ++i) {
      if (ps.phi[at(i)] == c) draft.add_vertex(kTopRow, c, i);
    }
  }
  for (int c = 1; c <= ps.k; ++c) {
    for (int i = g.p(); i < g.size(); ++i) {
      if (ps.phi[at(i)] == c) draft.add_vertex(kBottomRow, c, i);
    }
  }
  for (auto [a, b] : ps.mu.pairs()) draft.pair(a, b);
  draft.mark(kTopRow, ps.phi[0]);
  draft.mark(kBottomRow, ps.phi[at(g.p())]);
  return draft.build();
}

PairedSurjection label_recovery(const PairedArray& array) {
  if (!array.is_canonical()) throw std::invalid_argument("label recovery needs a canonical array");
  const int p = array.row_size(kTopRow);
  const int q = array.row_size(kBottomRow);
  const GroundSet g(p, q);
  std::vector<int> label_of(at(array.vertex_count()), -1);  // vertex id -> ground index
  for (int row = 0; row < 2; ++row) {
    const int count = row == kTopRow ? p : q;
    const int offset = row == kTopRow ? 0 : p;
    std::vector<int> next_free(at(array.columns() + 1), 0);
    for (int c = 1; c <= array.columns(); ++c) next_free[at(c)] = array.cell_range(row, c).first;
    auto take = [&](int c, int label) {
      if (next_free[at(c)] >= array.cell_range(row, c).second) {
        throw std::invalid_argument("label recovery stalls at label " + std::to_string(label) + " in column " +
                                    std::to_string(c));
      }
      const int v = next_free[at(c)]++;
      label_of[at(v)] = offset + label - 1;
      return v;
    };
    int v = take(array.marked_columns(row).front(), 1);
    for (int label = 2; label <= count; ++label) v = take(array.column_of(array.partner(v)), label);
  }
  std::vector<int> partner(at(g.size()));
  std::vector<int> phi(at(g.size()));
  for (int v = 0; v < array.vertex_count(); ++v) {
    partner[at(label_of[at(v)])] = label_of[at(array.partner(v))];
    phi[at(label_of[at(v)])] = array.column_of(v);
  }
  PairedSurjection out{Pairing(g, std::move(partner)), array.columns(), std::move(phi)};
  if (!satisfies_condition_one(out)) {
    throw std::invalid_argument("recovered labels violate phi(mu(i)) = phi(gamma(i))");
  }
  return out;
}

std::vector<PairedSurjection> enumerate_paired_surjections(int p, int q, int s, int k) {
  std::vector<PairedSurjection> out;
  if (k < 1) return out;
  const GroundSet g(p, q);
  const Permutation gam = gamma(p, q);
  visit_pairings(p, q, s, [&](std::span<const int> partner) {
    const Pairing mu(g, std::vector<int>(partner.begin(), partner.end()));
    const auto orbits = compose(gam, mu.to_permutation()).cycles();
    const int c = static_cast<int>(orbits.size());
    if (c < k) return;
    std::vector<int> colour(at(c), 1);
    while (true) {
      std::vector<char> hit(at(k + 1), 0);
      for (int x : colour) hit[at(x)] = 1;
      if (std::count(hit.begin() + 1, hit.end(), 1) == k) {
        std::vector<int> phi(at(g.size()));
        for (int o = 0; o < c; ++o) {
          for (int i : orbits[at(o)]) phi[at(i)] = colour[at(o)];
        }
        out.push_back(PairedSurjection{mu, k, std::move(phi)});
      }
      int t = 0;
      while (t < c && ++colour[at(t)] > k) colour[at(t++)] = 1;
      if (t == c) break;
    }
  });
  return out;
}

std::vector<PairedArray> enumerate_canonical_arrays(int p, int q, int s, int k) {
  std::vector<PairedArray> out;
  for (const auto& ps : enumerate_paired_surjections(p, q, s, k)) out.push_back(from_paired_surjection(ps));
  return out;
}

namespace {

void weak_compositions(int total, int parts, bool positive, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == parts - 1) {
    if (!positive || total > 0) {
      current.push_back(total);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int x = positive ? 1 : 0; x <= total; ++x) {
    current.push_back(x);
    weak_compositions(total - x, parts, positive, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<char>> subsets_of_size(int k, int size) {
  std::vector<std::vector<char>> out;
  if (size < 0 || size > k) return out;
  std::vector<char> pick(at(k), 0);
  std::fill(pick.end() - size, pick.end(), 1);
  do {
    out.push_back(pick);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

std::vector<PairedArray> enumerate_vertical_arrays(int s, int k, int i, int j, bool full_only) {
  std::vector<PairedArray> out;
  if (s < 1 || k < 1 || i < 0 || j < 0) return out;
  std::vector<std::vector<int>> shapes;
  std::vector<int> scratch;
  weak_compositions(s, k, full_only, scratch, shapes);
  const auto top_marks = subsets_of_size(k, i + 1);
  const auto bottom_marks = subsets_of_size(k, j + 1);
  std::vector<int> perm(at(s));
  for (const auto& shape : shapes) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> partner(at(2 * s));
      for (int t = 0; t < s; ++t) {
        partner[at(t)] = s + perm[at(t)];
        partner[at(s + perm[at(t)])] = t;
      }
      for (const auto& tm : top_marks) {
        for (const auto& bm : bottom_marks) {
          PairedArray candidate(k, {shape, shape}, partner, {tm, bm});
          if (validate(candidate).ok()) out.push_back(std::move(candidate));
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace annular
