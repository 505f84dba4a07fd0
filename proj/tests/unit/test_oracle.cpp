#include <gtest/gtest.h>

#include <cstdlib>

#include "annular/oracle.hpp"
#include "support.hpp"

namespace annular {
namespace {

OracleJob job_for(int p, int q, std::optional<int> s, int threads = 1) {
  OracleJob job;
  job.p = p;
  job.q = q;
  job.s = s;
  job.threads = threads;
  return job;
}

TEST(Oracle, Examples) {
  EXPECT_EQ(brute_distribution(job_for(1, 1, 1)).to_string(), "{1:1}");
  EXPECT_EQ(brute_distribution(job_for(3, 1, 1)).to_string(), "{2:3}");
  EXPECT_EQ(brute_distribution(job_for(4, 0, std::nullopt)).to_string(), "{3:2, 1:1}");
}

TEST(Oracle, RejectsBadJobs) {
  EXPECT_THROW(brute_distribution(job_for(3, 0, std::nullopt)), std::invalid_argument);
  EXPECT_THROW(brute_distribution(job_for(2, 2, 1)), std::invalid_argument);
  auto big = job_for(10, 10, 2);
  big.ceiling = 18;
  EXPECT_THROW(brute_distribution(big), std::invalid_argument);
}

TEST(Oracle, ResolveThreads) {
  EXPECT_EQ(resolve_threads(3), 3);
  ::setenv("ANNULAR_THREADS", "2", 1);
  EXPECT_EQ(resolve_threads(0), 2);
  ::unsetenv("ANNULAR_THREADS");
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(OracleProperty, MassIsConserved) {
  for (int p = 0; p <= 8; ++p) {
    for (int q = 0; p + q <= 10; ++q) {
      if ((p + q) % 2 != 0 || p + q == 0) continue;
      BigInt total = 0;
      for (const auto& [s, d] : brute_distribution_by_s(job_for(p, q, std::nullopt))) {
        EXPECT_EQ(d.total(), BigInt(pairing_count(p, q, s)));
        total += d.total();
      }
      EXPECT_EQ(total, double_factorial(p + q - 1)) << p << " " << q;
    }
  }
}

TEST(OracleProperty, AgreesWithNaiveComposition) {
  for (auto [p, q, s] : std::vector<std::tuple<int, int, int>>{{3, 3, 1}, {4, 4, 2}, {5, 3, 3}, {6, 2, 2}, {2, 6, 0}}) {
    EXPECT_EQ(brute_distribution(job_for(p, q, s)), testing::naive_distribution(p, q, s));
  }
}

TEST(OracleProperty, ThreadCountDoesNotChangeTheResult) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 5}, {6, 4}, {8, 2}}) {
    const auto one = brute_distribution_by_s(job_for(p, q, std::nullopt, 1));
    const auto four = brute_distribution_by_s(job_for(p, q, std::nullopt, 4));
    EXPECT_EQ(one, four);
  }
}

TEST(OracleProperty, ConjugateProductHasTheSameDistribution) {
  const int p = 4;
  const int q = 4;
  CycleDistribution other_order;
  const auto g_inv = gamma(p, q).inverse();
  for (const auto& mu : enumerate_pairings(p, q, 2)) other_order.add(cycle_count(compose(g_inv, mu.to_permutation())));
  EXPECT_EQ(brute_distribution(job_for(p, q, 2)), other_order);
}

TEST(SeriesValues, Examples) {
  EXPECT_EQ(brute_series_values(job_for(1, 1, 1), 2), (std::vector<BigInt>{0, 1, 2}));
  EXPECT_EQ(brute_series_values(job_for(2, 2, 2), 2), (std::vector<BigInt>{0, 2, 8}));
}

TEST(Progress, ReportsMonotonically) {
  auto job = job_for(6, 4, std::nullopt, 2);
  std::vector<std::pair<int, int>> calls;
  job.progress = [&](int done, int total) { calls.emplace_back(done, total); };
  brute_distribution(job);
  ASSERT_FALSE(calls.empty());
  for (std::size_t t = 1; t < calls.size(); ++t) EXPECT_GT(calls[t].first, calls[t - 1].first);
  EXPECT_EQ(calls.back().first, calls.back().second);
}

TEST(RootedMaps, Examples) {
  EXPECT_EQ(brute_rooted_maps(1, 1, 1), (std::map<int, BigInt>{{0, 1}}));
  EXPECT_EQ(brute_rooted_maps(2, 2, 2), (std::map<int, BigInt>{{0, 1}}));
  EXPECT_THROW(brute_rooted_maps(8, 8, 2), std::invalid_argument);
  EXPECT_THROW(brute_rooted_maps(2, 2, 0), std::invalid_argument);
}

TEST(RootedMaps, NeverExceedPairingsTimesDarts) {
  for (auto [p, q, s] : std::vector<std::tuple<int, int, int>>{{3, 3, 1}, {3, 3, 3}, {4, 2, 2}, {5, 3, 1}}) {
    BigInt total = 0;
    for (const auto& [g, count] : brute_rooted_maps(p, q, s)) {
      EXPECT_GE(g, 0);
      total += count;
    }
    EXPECT_GT(total, 0);
    EXPECT_LE(total, BigInt(pairing_count(p, q, s)) * (p + q));
  }
}

}  // namespace
}  // namespace annular
