#include "annular/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "annular/permutation.hpp"

namespace annular {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

/// Counts indexed by [s][k]; 64-bit is plenty below the ceiling and the
/// totals are promoted to BigInt once per shard.
using Tally = std::vector<std::vector<std::uint64_t>>;

Tally empty_tally(int p, int q) {
  return Tally(at(std::min(p, q) + 1), std::vector<std::uint64_t>(at(p + q + 1), 0));
}

std::map<int, CycleDistribution> run(const OracleJob& job, std::optional<int> filter) {
  job.validate();
  check_pairing_parameters(job.p, job.q, filter);
  const int p = job.p;
  const int q = job.q;
  const int shards = std::max(1, p + q - 1);
  const int workers = std::min(resolve_threads(job.threads), shards);

  std::atomic<int> next{0};
  std::mutex lock;
  int finished = 0;
  Tally total = empty_tally(p, q);

  auto work = [&] {
    Tally local = empty_tally(p, q);
    for (int branch = next++; branch < shards; branch = next++) {
      visit_pairing_branch(p, q, filter, branch, [&](std::span<const int> partner) {
        int mixed = 0;
        for (int i = 0; i < p; ++i) mixed += partner[at(i)] >= p ? 1 : 0;
        ++local[at(mixed)][at(product_cycle_count(partner, p, q))];
      });
      std::lock_guard guard(lock);
      ++finished;
      if (job.progress) job.progress(finished, shards);
    }
    std::lock_guard guard(lock);
    for (std::size_t s = 0; s < total.size(); ++s) {
      for (std::size_t k = 0; k < total[s].size(); ++k) total[s][k] += local[s][k];
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  std::map<int, CycleDistribution> out;
  for (std::size_t s = 0; s < total.size(); ++s) {
    CycleDistribution d;
    for (std::size_t k = 0; k < total[s].size(); ++k) {
      if (total[s][k] != 0) d.add(static_cast<int>(k), BigInt(total[s][k]));
    }
    if (!d.empty()) out.emplace(static_cast<int>(s), std::move(d));
  }
  return out;
}

}  // namespace

void OracleJob::validate() const {
  if (p < 0 || q < 0) throw std::invalid_argument("p and q must be nonnegative");
  if (p + q > ceiling) {
    throw std::invalid_argument("p + q = " + std::to_string(p + q) + " exceeds the oracle ceiling " +
                                std::to_string(ceiling));
  }
}

int resolve_threads(int hint) {
  if (hint > 0) return hint;
  if (const char* env = std::getenv("ANNULAR_THREADS")) {
    try {
      const int parsed = std::stoi(env);
      if (parsed > 0) return parsed;
    } catch (const std::exception&) {
      // unparsable values fall through to the hardware default
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

CycleDistribution brute_distribution(const OracleJob& job) {
  CycleDistribution merged;
  for (const auto& [s, d] : run(job, job.s)) merged.merge(d);
  return merged;
}

std::map<int, CycleDistribution> brute_distribution_by_s(const OracleJob& job) { return run(job, std::nullopt); }

std::vector<BigInt> brute_series_values(const OracleJob& job, int max_x) {
  const Polynomial poly = brute_distribution(job).as_polynomial();
  std::vector<BigInt> out;
  for (int x = 0; x <= max_x; ++x) out.push_back(poly.evaluate(x));
  return out;
}

std::map<int, BigInt> brute_rooted_maps(int p, int q, int s) {
  if (p < 1 || q < 1) throw std::invalid_argument("rooted maps need two vertices of positive degree");
  if (s < 1) throw std::invalid_argument("s >= 1 keeps the two-vertex map connected");
  if (p + q > 14) throw std::invalid_argument("brute_rooted_maps is limited to p + q <= 14");
  const int darts = p + q;
  const int n = darts / 2;
  auto rotate = [&](int d) { return d < p ? (d + 1) % p : p + (d - p + 1) % q; };

  std::map<int, std::set<std::vector<int>>> codes;
  std::vector<int> label(at(darts));
  std::vector<int> order(at(darts));
  visit_pairings(p, q, s, [&](std::span<const int> edge) {
    std::vector<char> seen(at(darts), 0);
    int faces = 0;
    for (int d = 0; d < darts; ++d) {
      if (seen[at(d)]) continue;
      ++faces;
      for (int e = d; !seen[at(e)]; e = rotate(edge[at(e)])) seen[at(e)] = 1;
    }
    const int twice_genus = n - faces;
    for (int root = 0; root < darts; ++root) {
      std::fill(label.begin(), label.end(), -1);
      int assigned = 0;
      label[at(root)] = assigned;
      order[at(assigned++)] = root;
      for (int head = 0; head < assigned; ++head) {
        for (int next : {rotate(order[at(head)]), edge[at(order[at(head)])]}) {
          if (label[at(next)] < 0) {
            label[at(next)] = assigned;
            order[at(assigned++)] = next;
          }
        }
      }
      std::vector<int> code;
      code.reserve(at(2 * darts));
      for (int t = 0; t < darts; ++t) {
        code.push_back(label[at(rotate(order[at(t)]))]);
        code.push_back(label[at(edge[at(order[at(t)])])]);
      }
      codes[twice_genus / 2].insert(std::move(code));
    }
  });
  std::map<int, BigInt> out;
  for (const auto& [g, set] : codes) out[g] = BigInt(set.size());
  return out;
}

}  // namespace annular
