#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "annular/forest.hpp"
#include "support.hpp"

namespace annular {
namespace {

RootedForest edgeless(int k) { return RootedForest(k); }

TEST(RootedForest, BasicQueries) {
  // 2 -> 1 -> 3, 4 isolated
  const RootedForest f(4, {0, 3, 1, 0, 0});
  EXPECT_EQ(f.roots(), (std::vector<int>{3, 4}));
  EXPECT_EQ(f.root_of(2), 3);
  EXPECT_EQ(f.component(3), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(f.arcs(), (std::vector<std::pair<int, int>>{{1, 3}, {2, 1}}));
  EXPECT_THROW(RootedForest(3, {0, 2, 1, 0}), std::invalid_argument);
  EXPECT_THROW(RootedForest(2, {0, 1, 0}), std::invalid_argument);
}

TEST(RootedForest, AddArcRejectsCyclesAndNonRoots) {
  RootedForest f(3, {0, 2, 0, 0});
  EXPECT_THROW(f.add_arc(1, 3), std::invalid_argument);
  EXPECT_THROW(f.add_arc(2, 1), std::invalid_argument);
  f.add_arc(2, 3);
  EXPECT_EQ(f.root_of(1), 3);
}

TEST(Completion, SingleArc) {
  const auto result = fca_forward(CompletionInput{edgeless(2), {1}, {2}});
  EXPECT_EQ(result.forest, RootedForest(2, {0, 2, 0}));
  EXPECT_EQ(result.fcp, (std::vector<int>{1}));
  const auto back = fca_inverse(result.forest, {{1, 2}});
  EXPECT_EQ(back.tuple, (std::vector<int>{2}));
  EXPECT_EQ(back.sigma, (std::vector<int>{1}));
}

TEST(Completion, SameComponentSwapsWithLastEntry) {
  // stage 1: b_1 = 1 lies in r_1's own tree, so 1 -> b_2 = 3 and the
  // entries swap; stage 2 then adds 2 -> 1.
  const auto result = fca_forward(CompletionInput{edgeless(3), {1, 2}, {1, 3}}, true);
  EXPECT_EQ(result.forest, RootedForest(3, {0, 3, 1, 0}));
  EXPECT_EQ(result.fcp, (std::vector<int>{2, 1}));
  for (int i = 0; i < 2; ++i) {
    const int r = i + 1;
    EXPECT_EQ(result.forest.parent(r), std::vector<int>({1, 3})[static_cast<std::size_t>(result.fcp[i] - 1)]);
  }
  const auto back = fca_inverse(result.forest, {{1, 3}, {2, 1}});
  EXPECT_EQ(back.tuple, (std::vector<int>{1, 3}));
  EXPECT_EQ(invert_permutation(back.sigma), result.fcp);
}

TEST(Completion, RejectsMalformedInput) {
  EXPECT_THROW(fca_forward(CompletionInput{edgeless(3), {1, 2}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(fca_forward(CompletionInput{edgeless(3), {2, 1}, {1, 3}}), std::invalid_argument);
  EXPECT_THROW(fca_forward(CompletionInput{edgeless(2), {1, 2}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(fca_forward(CompletionInput{edgeless(3), {1}, {1, 3}}), std::invalid_argument);
  const RootedForest chain(3, {0, 3, 1, 0});
  EXPECT_THROW(fca_inverse(chain, {{3, 1}}), std::invalid_argument);
  EXPECT_THROW(fca_inverse(chain, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(fca_inverse(chain, {{2, 1}, {1, 3}}), std::invalid_argument);
}

TEST(Completion, Counts) {
  const std::vector<int> r12 = {1, 2};
  EXPECT_EQ(count_completions(edgeless(3), r12), 3);
  const std::vector<int> r1 = {1};
  EXPECT_EQ(count_completions(edgeless(2), r1), 1);
  for (int k = 2; k <= 7; ++k) {
    for (int n = 1; n < k; ++n) {
      std::vector<int> eliminated(static_cast<std::size_t>(k - n));
      std::iota(eliminated.begin(), eliminated.end(), 1);
      EXPECT_EQ(count_completions(edgeless(k), eliminated), pow(BigInt(k), k - n - 1) * n);
    }
  }
}

TEST(Superforests, SmallCases) {
  const std::vector<int> keep2 = {2};
  EXPECT_EQ(enumerate_superforests(edgeless(2), keep2).size(), 1U);
  const std::vector<int> keep3 = {3};
  EXPECT_EQ(enumerate_superforests(edgeless(3), keep3).size(), 3U);
  EXPECT_EQ(all_rooted_forests(3).size(), 16U);
  EXPECT_EQ(all_rooted_forests(4).size(), 125U);
}

/// Every tuple in [k]^{m-1} x S for one base and root split.
std::vector<std::vector<int>> all_tuples(const RootedForest& base, const std::vector<int>& eliminated) {
  std::vector<int> safe;
  for (int v : base.vertices()) {
    if (std::find(eliminated.begin(), eliminated.end(), base.root_of(v)) == eliminated.end()) safe.push_back(v);
  }
  std::vector<std::vector<int>> out = {{}};
  for (std::size_t t = 0; t < eliminated.size(); ++t) {
    const bool last = t + 1 == eliminated.size();
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int v = 1; v <= base.bound(); ++v) {
        if (last && std::find(safe.begin(), safe.end(), v) == safe.end()) continue;
        auto extended = prefix;
        extended.push_back(v);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

TEST(CompletionProperty, ExhaustiveRoundTripsUpToFive) {
  long long runs = 0;
  for (int k = 2; k <= 5; ++k) {
    for (const auto& base : all_rooted_forests(k)) {
      const auto roots = base.roots();
      for (unsigned mask = 1; mask + 1 < (1U << roots.size()); ++mask) {
        std::vector<int> eliminated;
        std::vector<int> surviving;
        for (std::size_t t = 0; t < roots.size(); ++t) ((mask >> t) & 1U ? eliminated : surviving).push_back(roots[t]);
        std::set<RootedForest> image;
        for (const auto& tuple : all_tuples(base, eliminated)) {
          const auto result = fca_forward(CompletionInput{base, eliminated, tuple}, true);
          EXPECT_TRUE(result.forest.contains_arcs_of(base));
          EXPECT_EQ(result.forest.roots(), surviving);
          std::vector<std::pair<int, int>> removals;
          for (int r : eliminated) removals.emplace_back(r, result.forest.parent(r));
          const auto back = fca_inverse(result.forest, removals);
          ASSERT_EQ(back.tuple, tuple);
          ASSERT_EQ(back.base, base);
          image.insert(result.forest);
          ++runs;
        }
        const auto supers = enumerate_superforests(base, surviving);
        EXPECT_EQ(std::set<RootedForest>(supers.begin(), supers.end()), image);
        EXPECT_EQ(BigInt(image.size()), count_completions(base, eliminated));
      }
    }
  }
  EXPECT_GT(runs, 10000);
}

RootedForest random_forest(int k) {
  // attach each vertex of a random order to an earlier one, or leave it a root
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), testing::rng());
  std::vector<int> parent(static_cast<std::size_t>(k + 1), 0);
  for (int t = 1; t < k; ++t) {
    if (testing::uniform(0, 2) == 0) continue;
    parent[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] =
        order[static_cast<std::size_t>(testing::uniform(0, t - 1))];
  }
  return RootedForest(k, parent);
}

TEST(CompletionProperty, RandomRoundTripsUpToTwelve) {
  int trials = 0;
  while (trials < 3000) {
    const int k = testing::uniform(2, 12);
    const auto base = random_forest(k);
    const auto roots = base.roots();
    if (roots.size() < 2) continue;
    std::vector<int> eliminated;
    std::vector<int> surviving;
    for (int r : roots) (testing::uniform(0, 1) ? eliminated : surviving).push_back(r);
    if (eliminated.empty() || surviving.empty()) continue;
    std::vector<int> tuple;
    for (std::size_t t = 0; t + 1 < eliminated.size(); ++t) tuple.push_back(testing::uniform(1, k));
    const auto safe = base.component(surviving[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(surviving.size()) - 1))]);
    tuple.push_back(safe[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(safe.size()) - 1))]);

    const auto result = fca_forward(CompletionInput{base, eliminated, tuple}, true);
    std::vector<std::pair<int, int>> removals;
    for (int r : eliminated) removals.emplace_back(r, result.forest.parent(r));
    const auto back = fca_inverse(result.forest, removals);
    ASSERT_EQ(back.tuple, tuple);
    ASSERT_EQ(invert_permutation(back.sigma), result.fcp);
    const auto again = fca_forward(CompletionInput{back.base, eliminated, back.tuple});
    ASSERT_EQ(again.forest, result.forest);
    ++trials;
  }
}

}  // namespace
}  // namespace annular
