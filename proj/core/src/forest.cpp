#include "annular/forest.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace annular {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

bool is_strictly_increasing(std::span<const int> xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](int a, int b) { return a >= b; }) == xs.end();
}

}  // namespace

bool is_acyclic_parent_map(const std::vector<int>& parent, const std::vector<char>& present) {
  // 0 = unvisited, 1 = on current path, 2 = known to reach a root
  std::vector<char> state(parent.size(), 0);
  std::vector<int> path;
  for (std::size_t v = 1; v < parent.size(); ++v) {
    if (!present[v] || state[v] == 2) continue;
    path.clear();
    int u = static_cast<int>(v);
    while (u != 0 && state[at(u)] == 0) {
      state[at(u)] = 1;
      path.push_back(u);
      u = parent[at(u)];
    }
    if (u != 0 && state[at(u)] == 1) return false;
    for (int w : path) state[at(w)] = 2;
  }
  return true;
}

RootedForest::RootedForest(int k)
    : k_(k), parent_(at(k + 1), 0), present_(at(k + 1), 1) {
  if (k < 0) throw std::invalid_argument("negative vertex bound");
  present_[0] = 0;
}

RootedForest::RootedForest(int k, std::vector<int> parent, std::vector<char> present)
    : k_(k), parent_(std::move(parent)), present_(std::move(present)) {
  if (k < 0) throw std::invalid_argument("negative vertex bound");
  if (present_.empty()) present_.assign(at(k + 1), 1);
  if (parent_.size() != at(k + 1) || present_.size() != at(k + 1)) {
    throw std::invalid_argument("parent/present arrays need k+1 entries");
  }
  present_[0] = 0;
  parent_[0] = 0;
  for (int v = 1; v <= k_; ++v) {
    if (!present_[at(v)]) {
      parent_[at(v)] = 0;
      continue;
    }
    const int u = parent_[at(v)];
    if (u != 0 && !contains(u)) throw std::invalid_argument("parent outside the vertex set");
  }
  check_acyclic();
}

RootedForest RootedForest::edgeless(int k, std::span<const int> vertices) {
  std::vector<char> present(at(k + 1), 0);
  for (int v : vertices) {
    if (v < 1 || v > k) throw std::invalid_argument("vertex outside [k]");
    present[at(v)] = 1;
  }
  return RootedForest(k, std::vector<int>(at(k + 1), 0), std::move(present));
}

void RootedForest::check_acyclic() const {
  if (!is_acyclic_parent_map(parent_, present_)) throw std::invalid_argument("parent map has a cycle");
}

std::vector<int> RootedForest::vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= k_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

int RootedForest::vertex_count() const {
  return static_cast<int>(std::count(present_.begin(), present_.end(), 1));
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> out;
  for (int v = 1; v <= k_; ++v) {
    if (is_root(v)) out.push_back(v);
  }
  return out;
}

int RootedForest::root_of(int v) const {
  if (!contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " not in forest");
  while (parent(v) != 0) v = parent(v);
  return v;
}

std::vector<int> RootedForest::component(int root) const {
  std::vector<int> out;
  for (int v = 1; v <= k_; ++v) {
    if (contains(v) && root_of(v) == root) out.push_back(v);
  }
  return out;
}

void RootedForest::add_arc(int from, int target) {
  if (!is_root(from)) throw std::invalid_argument("arc source " + std::to_string(from) + " is not a root");
  if (!contains(target)) throw std::invalid_argument("arc target outside forest");
  if (root_of(target) == from) {
    throw std::invalid_argument("arc " + std::to_string(from) + "->" + std::to_string(target) + " closes a cycle");
  }
  parent_[at(from)] = target;
}

void RootedForest::remove_arc(int from) {
  if (!contains(from) || parent(from) == 0) {
    throw std::invalid_argument("no arc leaves vertex " + std::to_string(from));
  }
  parent_[at(from)] = 0;
}

bool RootedForest::contains_arcs_of(const RootedForest& sub) const {
  if (sub.k_ != k_) return false;
  for (int v = 1; v <= k_; ++v) {
    if (sub.contains(v) != contains(v)) return false;
    if (sub.contains(v) && sub.parent(v) != 0 && sub.parent(v) != parent(v)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> RootedForest::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= k_; ++v) {
    if (contains(v) && parent(v) != 0) out.emplace_back(v, parent(v));
  }
  return out;
}

std::string RootedForest::to_string() const {
  std::ostringstream out;
  out << "forest(k=" << k_ << "; roots";
  for (int r : roots()) out << " " << r;
  out << "; arcs";
  for (auto [a, b] : arcs()) out << " " << a << "->" << b;
  out << ")";
  return out.str();
}

CompletionResult fca_forward(const CompletionInput& input, bool check_stages) {
  const RootedForest& base = input.base;
  const auto& r = input.eliminated;
  const int m = static_cast<int>(r.size());
  if (m < 1) throw std::invalid_argument("completion needs at least one eliminated root");
  if (static_cast<int>(input.tuple.size()) != m) throw std::invalid_argument("tuple length differs from m");
  if (!is_strictly_increasing(r)) throw std::invalid_argument("eliminated roots must be increasing");
  for (int root : r) {
    if (!base.is_root(root)) throw std::invalid_argument("eliminated vertex " + std::to_string(root) + " is not a root");
  }
  std::vector<char> eliminated(at(base.bound() + 1), 0);
  for (int root : r) eliminated[at(root)] = 1;
  const auto roots = base.roots();
  const auto surviving_count = std::count_if(roots.begin(), roots.end(), [&](int v) { return !eliminated[at(v)]; });
  if (surviving_count < 1) throw std::invalid_argument("completion needs at least one surviving root");
  for (int a : input.tuple) {
    if (!base.contains(a)) throw std::invalid_argument("tuple entry " + std::to_string(a) + " outside vertex set");
  }
  auto safe = [&](const RootedForest& g, int v) { return !eliminated[at(g.root_of(v))]; };
  if (!safe(base, input.tuple.back())) throw std::invalid_argument("last tuple entry is not safe");

  RootedForest g = base;
  std::vector<int> pi(at(m));
  for (int i = 0; i < m; ++i) pi[at(i)] = i + 1;
  std::vector<int> b = input.tuple;
  const std::size_t last = at(m - 1);

  for (int i = 0; i < m; ++i) {
    const int ri = r[at(i)];
    if (g.root_of(b[at(i)]) != ri) {
      g.add_arc(ri, b[at(i)]);
    } else {
      g.add_arc(ri, b[last]);
      std::swap(pi[at(i)], pi[last]);
      std::swap(b[at(i)], b[last]);
    }
    if (check_stages) {
      auto now = g.roots();
      std::vector<int> expected(r.begin() + i + 1, r.end());
      for (int v : roots) {
        if (!eliminated[at(v)]) expected.push_back(v);
      }
      std::sort(expected.begin(), expected.end());
      if (now != expected) throw std::logic_error("stage " + std::to_string(i + 1) + ": unexpected root set");
      if (!safe(g, b[last])) throw std::logic_error("stage " + std::to_string(i + 1) + ": b_m is not safe");
    }
  }
  return CompletionResult{std::move(g), std::move(pi)};
}

CompletionInverse fca_inverse(const RootedForest& forest, std::vector<std::pair<int, int>> removals) {
  const int m = static_cast<int>(removals.size());
  if (m < 1) throw std::invalid_argument("inverse completion needs at least one arc");
  std::vector<int> r;
  std::vector<int> b;
  for (auto [from, to] : removals) {
    if (!forest.contains(from) || forest.parent(from) == 0) {
      throw std::invalid_argument("vertex " + std::to_string(from) + " is a root, not an arc source");
    }
    if (forest.parent(from) != to) {
      throw std::invalid_argument("arc " + std::to_string(from) + "->" + std::to_string(to) + " not in forest");
    }
    r.push_back(from);
    b.push_back(to);
  }
  if (!is_strictly_increasing(r)) throw std::invalid_argument("arc sources must be distinct and increasing");

  std::vector<char> surviving(at(forest.bound() + 1), 0);
  for (int v : forest.roots()) surviving[at(v)] = 1;

  RootedForest g = forest;
  std::vector<int> sigma(at(m));
  for (int i = 0; i < m; ++i) sigma[at(i)] = i + 1;
  const std::size_t last = at(m - 1);
  for (int i = m - 1; i >= 0; --i) {
    g.remove_arc(r[at(i)]);
    if (!surviving[at(g.root_of(b[last]))]) {
      std::swap(sigma[at(i)], sigma[last]);
      std::swap(b[at(i)], b[last]);
    }
  }
  return CompletionInverse{std::move(b), std::move(sigma), std::move(g)};
}

BigInt count_completions(const RootedForest& base, std::span<const int> eliminated) {
  const int m = static_cast<int>(eliminated.size());
  if (m < 1) throw std::invalid_argument("count_completions needs m >= 1");
  std::vector<char> gone(at(base.bound() + 1), 0);
  for (int r : eliminated) {
    if (!base.is_root(r)) throw std::invalid_argument("eliminated vertex is not a root");
    gone[at(r)] = 1;
  }
  long long safe_size = 0;
  for (int v : base.vertices()) {
    if (!gone[at(base.root_of(v))]) ++safe_size;
  }
  BigInt total = safe_size;
  for (int t = 1; t < m; ++t) total *= base.vertex_count();
  return total;
}

std::vector<RootedForest> enumerate_superforests(const RootedForest& base, std::span<const int> target_roots) {
  std::vector<char> keep(at(base.bound() + 1), 0);
  for (int v : target_roots) {
    if (!base.is_root(v)) throw std::invalid_argument("target root is not a root of the base forest");
    keep[at(v)] = 1;
  }
  std::vector<int> movers;
  for (int v : base.roots()) {
    if (!keep[at(v)]) movers.push_back(v);
  }
  const auto verts = base.vertices();
  std::vector<RootedForest> out;
  std::vector<std::size_t> choice(movers.size(), 0);
  std::vector<int> parent(at(base.bound() + 1), 0);
  for (int v : verts) parent[at(v)] = base.parent(v);
  std::vector<char> present(at(base.bound() + 1), 0);
  for (int v : verts) present[at(v)] = 1;
  if (verts.empty()) return out;
  while (true) {
    bool looped = false;
    for (std::size_t t = 0; t < movers.size(); ++t) {
      const int target = verts[choice[t]];
      if (target == movers[t]) looped = true;
      parent[at(movers[t])] = target;
    }
    if (!looped && is_acyclic_parent_map(parent, present)) out.emplace_back(base.bound(), parent, present);
    std::size_t t = 0;
    while (t < choice.size() && ++choice[t] == verts.size()) choice[t++] = 0;
    if (t == choice.size()) break;
  }
  return out;
}

std::vector<RootedForest> all_rooted_forests(int k) {
  std::vector<RootedForest> out;
  std::vector<int> parent(at(k + 1), 0);
  std::vector<char> all(at(k + 1), 1);
  all[0] = 0;
  while (true) {
    bool self = false;
    for (int v = 1; v <= k; ++v) self = self || parent[at(v)] == v;
    if (!self && is_acyclic_parent_map(parent, all)) out.emplace_back(k, parent);
    int v = 1;
    while (v <= k && ++parent[at(v)] > k) parent[at(v++)] = 0;
    if (v > k) break;
  }
  return out;
}

std::vector<int> invert_permutation(std::span<const int> images_one_based) {
  std::vector<int> inv(images_one_based.size());
  for (std::size_t i = 0; i < images_one_based.size(); ++i) {
    inv[at(images_one_based[i] - 1)] = static_cast<int>(i) + 1;
  }
  return inv;
}

}  // namespace annular
