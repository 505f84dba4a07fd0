#include "annular/distribution.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace annular {

void CycleDistribution::add(int k, const BigInt& count) {
  if (count < 0) throw std::invalid_argument("negative count");
  if (count == 0) return;
  counts_[k] += count;
}

void CycleDistribution::merge(const CycleDistribution& other) {
  for (const auto& [k, c] : other.counts_) counts_[k] += c;
}

BigInt CycleDistribution::at(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt CycleDistribution::total() const {
  BigInt t = 0;
  for (const auto& [k, c] : counts_) t += c;
  return t;
}

Polynomial CycleDistribution::as_polynomial() const {
  if (counts_.empty()) return Polynomial();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(counts_.rbegin()->first + 1), 0);
  for (const auto& [k, c] : counts_) coeffs[static_cast<std::size_t>(k)] = c;
  return Polynomial(std::move(coeffs));
}

CycleDistribution CycleDistribution::from_polynomial(const Polynomial& poly) {
  CycleDistribution out;
  for (int d = 0; d <= poly.degree(); ++d) {
    const BigInt c = poly.coeff(d);
    if (c == 0) continue;
    if (c < 0) throw std::invalid_argument("negative coefficient at x^" + std::to_string(d));
    if (d == 0) throw std::invalid_argument("nonzero constant term in a cycle distribution");
    out.add(d, c);
  }
  return out;
}

std::string CycleDistribution::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
    if (!first) out << ", ";
    first = false;
    out << it->first << ":" << it->second;
  }
  out << "}";
  return out.str();
}

}  // namespace annular
