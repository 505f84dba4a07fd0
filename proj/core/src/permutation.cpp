#include "annular/permutation.hpp"

#include <algorithm>
#include <stdexcept>

#include "annular/arith.hpp"

namespace annular {

std::string to_string(const Point& pt) {
  return std::to_string(pt.label) + (pt.primed ? "'" : "");
}

Point parse_point(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty point label");
  std::string digits = text;
  bool primed = false;
  if (digits.back() == '\'') {
    primed = true;
    digits.pop_back();
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("malformed point label '" + text + "'");
  }
  const int index = std::stoi(digits);
  if (index < 1) throw std::invalid_argument("point labels start at 1, got '" + text + "'");
  return Point{index, primed};
}

GroundSet::GroundSet(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("ground set sizes must be nonnegative");
}

int GroundSet::encode(Point pt) const {
  const int limit = pt.primed ? q_ : p_;
  if (pt.label < 1 || pt.label > limit) {
    throw std::out_of_range("point " + to_string(pt) + " outside ground set");
  }
  return pt.primed ? p_ + pt.label - 1 : pt.label - 1;
}

Point GroundSet::decode(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("index outside ground set");
  return index < p_ ? Point{index + 1, false} : Point{index - p_ + 1, true};
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i)] = 1;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = (*this)(i)) seen[static_cast<std::size_t>(i)] = 1;
  }
  return count;
}

bool Permutation::is_fixed_point_free_involution() const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) == i || (*this)((*this)(i)) != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("compose: ground sets differ");
  std::vector<int> h(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) h[static_cast<std::size_t>(i)] = f(g(i));
  return Permutation(std::move(h));
}

int cycle_count(const Permutation& f) { return f.cycle_count(); }

Permutation gamma(int p, int q) {
  if (p < 1) throw std::invalid_argument("gamma needs p >= 1");
  if (q < 0) throw std::invalid_argument("gamma needs q >= 0");
  std::vector<int> images(static_cast<std::size_t>(p + q));
  for (int i = 0; i < p; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % p;
  for (int j = 0; j < q; ++j) images[static_cast<std::size_t>(p + j)] = p + (j + 1) % q;
  return Permutation(std::move(images));
}

int product_cycle_count(std::span<const int> partner, int p, int q) {
  // gamma^{-1}: i -> i-1 cyclically inside each row.
  const int n = p + q;
  unsigned char seen[64];
  std::vector<unsigned char> big;
  unsigned char* mark = seen;
  if (n > 64) {
    big.assign(static_cast<std::size_t>(n), 0);
    mark = big.data();
  } else {
    std::fill(seen, seen + n, 0);
  }
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (mark[start]) continue;
    ++count;
    int i = start;
    while (!mark[i]) {
      mark[i] = 1;
      const int back = i < p ? (i == 0 ? p - 1 : i - 1) : (i == p ? n - 1 : i - 1);
      i = partner[static_cast<std::size_t>(back)];
    }
  }
  return count;
}

Pairing::Pairing(GroundSet ground, std::vector<int> partner) : ground_(ground), partner_(std::move(partner)) {
  if (static_cast<int>(partner_.size()) != ground_.size()) {
    throw std::invalid_argument("pairing size does not match ground set");
  }
  for (int i = 0; i < ground_.size(); ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= ground_.size() || j == i || partner_[static_cast<std::size_t>(j)] != i) {
      throw std::invalid_argument("partner array is not a fixed-point-free involution");
    }
    if (i < j && ground_.is_primed(i) != ground_.is_primed(j)) ++mixed_;
  }
}

Pairing Pairing::from_pairs(GroundSet ground, const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<int> partner(static_cast<std::size_t>(ground.size()), -1);
  for (const auto& [a, b] : pairs) {
    const int x = ground.encode(a);
    const int y = ground.encode(b);
    if (partner[static_cast<std::size_t>(x)] >= 0 || partner[static_cast<std::size_t>(y)] >= 0 || x == y) {
      throw std::invalid_argument("pairs overlap");
    }
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  }
  return Pairing(ground, std::move(partner));
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < ground_.size(); ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (i < j) out.emplace_back(i, j);
  }
  return out;
}

void check_pairing_parameters(int p, int q, std::optional<int> s) {
  if (p < 0 || q < 0) throw std::invalid_argument("p and q must be nonnegative");
  if ((p + q) % 2 != 0) throw std::invalid_argument("p + q must be even");
  if (s) {
    if (*s < 0 || *s > std::min(p, q)) throw std::invalid_argument("mixed count s out of range");
    if ((p - *s) % 2 != 0 || (q - *s) % 2 != 0) {
      throw std::invalid_argument("mixed count s must have the parity of p and q");
    }
  }
}

std::uint64_t pairing_count(int p, int q, std::optional<int> s) {
  check_pairing_parameters(p, q, s);
  BigInt total;
  if (!s) {
    total = double_factorial(p + q - 1);
  } else {
    total = binom(p, *s) * binom(q, *s) * factorial(*s) * double_factorial(p - *s - 1) *
            double_factorial(q - *s - 1);
  }
  return total.convert_to<std::uint64_t>();
}

std::vector<Pairing> enumerate_pairings(int p, int q, std::optional<int> s) {
  std::vector<Pairing> out;
  const GroundSet ground(p, q);
  visit_pairings(p, q, s, [&](std::span<const int> partner) {
    out.emplace_back(ground, std::vector<int>(partner.begin(), partner.end()));
  });
  return out;
}

}  // namespace annular
