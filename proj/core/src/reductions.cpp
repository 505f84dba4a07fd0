#include "annular/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace annular {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

/// Draft key for a vertex created during an inverse map; negative so it can
/// never collide with the ids of vertices carried over from beta.
long fresh_key(int row, int number) { return -(static_cast<long>(row) * 1'000'000L + number) - 1; }

/// Position of each vertex in the left-to-right numbering of its row, boxes
/// included. Entries for vertices of the other row are 0.
std::vector<int> row_numbers(const PairedArray& array, int row) {
  std::vector<int> number(at(array.vertex_count()), 0);
  const auto objects = numbered_objects(array, row);
  for (std::size_t t = 0; t < objects.size(); ++t) {
    if (objects[t].vertex >= 0) number[at(objects[t].vertex)] = static_cast<int>(t) + 1;
  }
  return number;
}

struct Slot {
  int column = 0;
  /// Vertex id in beta, kBox for a mark of beta, kInserted for a new vertex.
  int source = 0;
};

constexpr int kBox = -1;
constexpr int kInserted = -2;

/// Numbers the objects of `row` in beta with [total] minus `inserted` and
/// places each inserted number in the cell of the next larger kept number.
/// Returns the slots indexed by number (entry 0 unused).
std::vector<Slot> interleave(const PairedArray& beta, int row, std::vector<int> inserted, int total) {
  std::sort(inserted.begin(), inserted.end());
  if (std::adjacent_find(inserted.begin(), inserted.end()) != inserted.end()) {
    throw std::invalid_argument("inserted numbers must be distinct");
  }
  for (int l : inserted) {
    if (l < 1 || l >= total) {
      throw std::invalid_argument("inserted number " + std::to_string(l) + " outside [1, " +
                                  std::to_string(total - 1) + "]");
    }
  }
  const auto objects = numbered_objects(beta, row);
  if (objects.size() + inserted.size() != at(total)) {
    throw std::invalid_argument("row sizes do not match the inserted numbers");
  }
  std::vector<Slot> slots(at(total + 1));
  std::vector<char> is_inserted(at(total + 1), 0);
  for (int l : inserted) is_inserted[at(l)] = 1;
  std::size_t next = 0;
  for (int t = 1; t <= total; ++t) {
    if (is_inserted[at(t)]) continue;
    const auto& obj = objects[next++];
    slots[at(t)] = Slot{obj.column, obj.vertex >= 0 ? obj.vertex : kBox};
  }
  for (int t = total - 1; t >= 1; --t) {
    if (is_inserted[at(t)]) slots[at(t)] = Slot{slots[at(t + 1)].column, kInserted};
  }
  return slots;
}

void check_row_numbers(std::span<const int> numbers, int bound, const char* what) {
  std::set<int> seen;
  for (int x : numbers) {
    if (x < 1 || x > bound || !seen.insert(x).second) {
      throw std::invalid_argument(std::string(what) + " entries must be distinct numbers in [1, " +
                                  std::to_string(bound) + "]");
    }
  }
}

}  // namespace

PartialPairing PartialPairing::from_pairs(std::vector<std::pair<int, int>> pairs) {
  for (auto& [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("a partial pairing cannot pair a point with itself");
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  PartialPairing out{std::move(pairs)};
  const auto supp = out.support();
  if (std::adjacent_find(supp.begin(), supp.end()) != supp.end()) {
    throw std::invalid_argument("partial pairing pairs overlap");
  }
  return out;
}

std::vector<int> PartialPairing::support() const {
  std::vector<int> out;
  for (auto [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

XiImage xi(const PairedArray& array) {
  if (!array.is_canonical()) throw std::invalid_argument("xi needs a canonical array");
  ArrayDraft draft(array.columns());
  std::array<std::vector<std::pair<int, int>>, 2> removed;
  for (int row = 0; row < 2; ++row) {
    const auto number = row_numbers(array, row);
    for (const auto& obj : numbered_objects(array, row)) {
      if (obj.vertex < 0) {
        draft.mark(row, obj.column);
        continue;
      }
      const int v = obj.vertex;
      if (!array.is_redundant_pair(v)) {
        draft.add_vertex(row, obj.column, v);
      } else if (v < array.partner(v)) {
        removed[at(row)].emplace_back(number[at(v)], number[at(array.partner(v))]);
      }
    }
  }
  for (int v = 0; v < array.vertex_count(); ++v) {
    if (!array.is_redundant_pair(v) && v < array.partner(v)) draft.pair(v, array.partner(v));
  }
  return XiImage{PartialPairing::from_pairs(std::move(removed[0])), PartialPairing::from_pairs(std::move(removed[1])),
                 draft.build()};
}

PairedArray xi_inverse(const PartialPairing& mu1, const PartialPairing& mu2, const PairedArray& beta) {
  if (!beta.is_canonical()) throw std::invalid_argument("xi_inverse needs a canonical beta");
  ArrayDraft draft(beta.columns());
  const std::array<const PartialPairing*, 2> mus{&mu1, &mu2};
  for (int row = 0; row < 2; ++row) {
    const int size = beta.row_size(row) + 2 * mus[at(row)]->size();
    const auto supp = mus[at(row)]->support();
    check_row_numbers(supp, size, row == kTopRow ? "mu1" : "mu2");
    const auto slots = interleave(beta, row, supp, size + 1);
    for (int t = 1; t <= size + 1; ++t) {
      const Slot& slot = slots[at(t)];
      if (slot.source == kBox) {
        draft.mark(row, slot.column);
      } else {
        draft.add_vertex(row, slot.column, slot.source == kInserted ? fresh_key(row, t) : slot.source);
      }
    }
    for (auto [a, b] : mus[at(row)]->pairs) draft.pair(fresh_key(row, a), fresh_key(row, b));
  }
  for (int v = 0; v < beta.vertex_count(); ++v) {
    if (v < beta.partner(v)) draft.pair(v, beta.partner(v));
  }
  return draft.build();
}

ZetaImage zeta(const PairedArray& array) {
  if (!array.is_canonical()) throw std::invalid_argument("zeta needs a canonical array");
  if (!array.is_minimal()) throw std::invalid_argument("zeta needs a minimal array");
  ArrayDraft draft(array.columns());
  std::array<std::vector<int>, 2> kappa;
  for (int row = 0; row < 2; ++row) {
    const auto number = row_numbers(array, row);
    // (u, v): u is the member rightmost in an unmarked cell, in increasing order
    std::vector<std::pair<int, int>> nonmixed;
    for (const auto& obj : numbered_objects(array, row)) {
      if (obj.vertex < 0) {
        draft.mark(row, obj.column);
        continue;
      }
      const int v = obj.vertex;
      if (array.is_mixed(v)) {
        draft.add_vertex(row, obj.column, v);
      } else if (array.is_rightmost(v) && !array.marked(row, obj.column)) {
        nonmixed.emplace_back(v, array.partner(v));
      }
    }
    if (nonmixed.empty()) continue;
    std::vector<std::pair<int, int>> removals;
    for (auto [u, v] : nonmixed) {
      removals.emplace_back(array.column_of(u), array.column_of(v));
      draft.mark(row, array.column_of(u));
    }
    const auto inverse = fca_inverse(rightmost_forest(array, row), std::move(removals));
    for (int t : inverse.sigma) kappa[at(row)].push_back(number[at(nonmixed[at(t - 1)].second)]);
  }
  for (int v = 0; v < array.vertex_count(); ++v) {
    if (array.is_mixed(v) && v < array.partner(v)) draft.pair(v, array.partner(v));
  }
  return ZetaImage{std::move(kappa[0]), std::move(kappa[1]), draft.build()};
}

PairedArray zeta_inverse(const std::vector<int>& kappa1, const std::vector<int>& kappa2, const PairedArray& beta) {
  if (!beta.is_vertical()) throw std::invalid_argument("zeta_inverse needs a vertical beta");
  ArrayDraft draft(beta.columns());
  const std::array<const std::vector<int>*, 2> kappas{&kappa1, &kappa2};
  for (int row = 0; row < 2; ++row) {
    const auto& kappa = *kappas[at(row)];
    const int extra = beta.mark_count(row) - 1;
    if (static_cast<int>(kappa.size()) != extra) {
      throw std::invalid_argument("tuple length must be one less than the number of marks in its row");
    }
    const int size = beta.row_size(row) + 2 * extra;
    check_row_numbers(kappa, size, row == kTopRow ? "kappa1" : "kappa2");
    const auto slots = interleave(beta, row, kappa, size + 1);

    int kept_mark = beta.marked_columns(row).front();
    std::vector<int> partner_number(at(size + 2), 0);
    if (extra > 0) {
      const RootedForest forest = rightmost_forest(beta, row);
      std::vector<int> tuple;
      for (int w : kappa) tuple.push_back(slots[at(w)].column);
      kept_mark = forest.root_of(tuple.back());
      std::vector<int> boxes;
      std::vector<int> eliminated;
      for (int t = 1; t <= size + 1; ++t) {
        if (slots[at(t)].source == kBox && slots[at(t)].column != kept_mark) {
          boxes.push_back(t);
          eliminated.push_back(slots[at(t)].column);
        }
      }
      const auto completion = fca_forward(CompletionInput{forest, eliminated, tuple});
      for (std::size_t l = 0; l < boxes.size(); ++l) {
        const int w = kappa[at(completion.fcp[l] - 1)];
        partner_number[at(boxes[l])] = w;
        partner_number[at(w)] = boxes[l];
      }
    }
    for (int t = 1; t <= size + 1; ++t) {
      const Slot& slot = slots[at(t)];
      if (slot.source >= 0) {
        draft.add_vertex(row, slot.column, slot.source);
      } else if (slot.source == kBox && slot.column == kept_mark) {
        draft.mark(row, slot.column);
      } else {
        draft.add_vertex(row, slot.column, fresh_key(row, t));
        if (t < partner_number[at(t)]) draft.pair(fresh_key(row, t), fresh_key(row, partner_number[at(t)]));
      }
    }
  }
  for (int v = 0; v < beta.vertex_count(); ++v) {
    if (v < beta.partner(v)) draft.pair(v, beta.partner(v));
  }
  return draft.build();
}

namespace {

bool anchored(const PairedArray& array, int v) { return array.is_rightmost(v) && !array.marked(array.row_of(v), array.column_of(v)); }

/// Partner of the highest-numbered vertex of `row` whose partner is not
/// rightmost in an unmarked cell.
int fallback_partner(const PairedArray& array, int row) {
  const int first = row == kTopRow ? 0 : array.row_size(kTopRow);
  for (int v = first + array.row_size(row) - 1; v >= first; --v) {
    if (!anchored(array, array.partner(v))) return array.partner(v);
  }
  throw std::logic_error("every vertex in the row is dependent");
}

}  // namespace

VerticalArrayProfile profile(const PairedArray& array) {
  if (!array.is_vertical() || !array.is_full()) throw std::invalid_argument("profile needs a full vertical array");
  const int s = array.row_size(kTopRow);
  const RootedForest top = rightmost_forest(array, kTopRow);
  const RootedForest bottom = rightmost_forest(array, kBottomRow);
  VerticalArrayProfile out;
  for (int c = 1; c <= array.columns(); ++c) out.shape.push_back(array.cell_size(kTopRow, c));

  std::vector<std::pair<int, int>> top_removals;
  std::vector<int> top_sources;
  for (int c = 1; c <= array.columns(); ++c) {
    const int x = array.rightmost(kTopRow, c);
    if (array.marked(kTopRow, c) || anchored(array, array.partner(x))) continue;
    top_removals.emplace_back(c, array.column_of(array.partner(x)));
    top_sources.push_back(x);
  }
  int a_prime = 0;
  RootedForest shared = top;
  if (top_removals.empty()) {
    out.a_prime_by_fallback = true;
    a_prime = fallback_partner(array, kTopRow);
  } else {
    const auto inverse = fca_inverse(top, top_removals);
    a_prime = array.partner(top_sources[at(inverse.sigma.back() - 1)]);
    shared = inverse.base;
  }

  out.tail.push_back(array.column_of(a_prime));
  while (shared.parent(out.tail.back()) != 0) out.tail.push_back(shared.parent(out.tail.back()));
  out.tail_length = static_cast<int>(out.tail.size()) - 1;

  std::vector<char> on_tail(at(array.columns() + 1), 0);
  for (std::size_t l = 1; l < out.tail.size(); ++l) {
    if (bottom.parent(out.tail[l]) != out.tail[l - 1]) {
      throw std::logic_error("tail arc " + std::to_string(out.tail[l]) + "->" + std::to_string(out.tail[l - 1]) +
                             " missing from the bottom forest");
    }
    on_tail[at(out.tail[l])] = 1;
  }
  std::vector<std::pair<int, int>> bottom_removals;
  std::vector<int> bottom_sources;
  for (auto [from, to] : bottom.arcs()) {
    if (on_tail[at(from)]) continue;
    bottom_removals.emplace_back(from, to);
    bottom_sources.push_back(array.rightmost(kBottomRow, from));
  }
  int b = 0;
  if (bottom_removals.empty()) {
    out.b_by_fallback = true;
    b = fallback_partner(array, kBottomRow);
  } else {
    const auto inverse = fca_inverse(bottom, bottom_removals);
    b = array.partner(bottom_sources[at(inverse.sigma.back() - 1)]);
  }

  out.a_prime = a_prime - s + 1;
  out.b = b + 1;
  out.a_prime_rightmost = array.is_rightmost(a_prime);
  out.b_in_tail = std::find(out.tail.begin(), out.tail.end(), array.column_of(b)) != out.tail.end();
  return out;
}

}  // namespace annular
