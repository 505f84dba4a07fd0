#include <gtest/gtest.h>

#include <set>

#include "annular/arith.hpp"
#include "annular/permutation.hpp"
#include "support.hpp"

namespace annular {
namespace {

using testing::naive_distribution;
using testing::random_permutation;

TEST(Binom, SmallValues) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(3, -1), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(4, 5), 0);
  EXPECT_THROW(binom(-1, 0), std::invalid_argument);
}

TEST(Binom, PascalRule) {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k)) << n << " " << k;
  }
}

TEST(Binom, ExceedsSixtyFourBits) {
  EXPECT_EQ(to_decimal(binom(100, 50)), "100891344545564193334812497256");
}

TEST(DoubleFactorial, Values) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(1), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(15), 2027025);
  EXPECT_THROW(double_factorial(4), std::invalid_argument);
  EXPECT_THROW(double_factorial(-3), std::invalid_argument);
}

TEST(FallingFactorial, Values) {
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(7, 0), 1);
  EXPECT_EQ(falling_factorial(3, -1), 0);
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_EQ(falling_factorial(6, 6), factorial(6));
}

TEST(RequireIntegral, RejectsFractions) {
  EXPECT_EQ(require_integral(Rational(6, 3), "two"), 2);
  EXPECT_THROW(require_integral(Rational(1, 2), "half"), IntegralityError);
}

TEST(Points, ParseAndPrint) {
  EXPECT_EQ(parse_point("7"), (Point{7, false}));
  EXPECT_EQ(parse_point("3'"), (Point{3, true}));
  EXPECT_EQ(to_string(Point{3, true}), "3'");
  EXPECT_THROW(parse_point("x"), std::invalid_argument);
  EXPECT_THROW(parse_point("0"), std::invalid_argument);
}

TEST(GroundSet, EncodingIsABijection) {
  const GroundSet g(4, 3);
  std::set<int> seen;
  for (int i = 1; i <= 4; ++i) seen.insert(g.encode(Point{i, false}));
  for (int j = 1; j <= 3; ++j) seen.insert(g.encode(Point{j, true}));
  EXPECT_EQ(seen, (std::set<int>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(g.encode(Point{2, true}), 5);
  EXPECT_EQ(g.decode(5), (Point{2, true}));
  EXPECT_THROW(g.encode(Point{4, true}), std::out_of_range);
}

TEST(Gamma, SmallCases) {
  EXPECT_EQ(gamma(2, 0), Permutation({1, 0}));
  EXPECT_EQ(gamma(1, 1), Permutation::identity(2));
  EXPECT_THROW(gamma(0, 3), std::invalid_argument);
  const auto g = gamma(11, 9);
  EXPECT_EQ(g.cycle_count(), 2);
  const GroundSet ground(11, 9);
  EXPECT_EQ(g(ground.encode(Point{11, false})), ground.encode(Point{1, false}));
  EXPECT_EQ(g(ground.encode(Point{9, true})), ground.encode(Point{1, true}));
}

TEST(Compose, AppliesRightFactorFirst) {
  const Permutation f({1, 2, 0});
  const Permutation g({0, 2, 1});
  const auto h = compose(f, g);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(h(i), f(g(i)));
  EXPECT_THROW(compose(f, Permutation::identity(2)), std::invalid_argument);
}

TEST(Compose, HandProducts) {
  const GroundSet one_one(1, 1);
  const auto mu = Pairing::from_pairs(one_one, {{Point{1, false}, Point{1, true}}});
  const auto product = compose(mu.to_permutation(), gamma(1, 1).inverse());
  EXPECT_EQ(product, Permutation({1, 0}));
  EXPECT_EQ(cycle_count(product), 1);

  const auto pair12 = Pairing::from_pairs(GroundSet(2, 0), {{Point{1, false}, Point{2, false}}});
  EXPECT_EQ(compose(pair12.to_permutation(), gamma(2, 0).inverse()), Permutation::identity(2));
}

TEST(CycleCount, Examples) {
  EXPECT_EQ(cycle_count(Permutation::identity(4)), 4);
  const GroundSet g(3, 1);
  const auto mu =
      Pairing::from_pairs(g, {{Point{1, false}, Point{1, true}}, {Point{2, false}, Point{3, false}}});
  EXPECT_EQ(cycle_count(compose(mu.to_permutation(), gamma(3, 1).inverse())), 2);
  EXPECT_EQ(naive_distribution(4, 0, std::nullopt).to_string(), "{3:2, 1:1}");
}

TEST(CycleCount, FastPathMatchesComposition) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 2}, {3, 3}, {6, 0}, {1, 5}}) {
    const auto g_inv = gamma(p, q).inverse();
    for (const auto& mu : enumerate_pairings(p, q)) {
      EXPECT_EQ(product_cycle_count(mu.partner(), p, q), cycle_count(compose(mu.to_permutation(), g_inv)));
    }
  }
}

TEST(Pairings, EnumerationExamples) {
  const auto two = enumerate_pairings(2, 0);
  ASSERT_EQ(two.size(), 1U);
  EXPECT_EQ(two[0].pairs(), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(enumerate_pairings(4, 0).size(), 3U);
  EXPECT_EQ(enumerate_pairings(2, 2, 2).size(), 2U);
  EXPECT_THROW(enumerate_pairings(3, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_pairings(3, 1, 2), std::invalid_argument);
  EXPECT_THROW(enumerate_pairings(2, 2, 4), std::invalid_argument);
}

TEST(Pairings, OrderPairsSmallestUnpairedFirst) {
  const auto all = enumerate_pairings(4, 0);
  EXPECT_EQ(all[0].pairs(), (std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(all[1].pairs(), (std::vector<std::pair<int, int>>{{0, 2}, {1, 3}}));
  EXPECT_EQ(all[2].pairs(), (std::vector<std::pair<int, int>>{{0, 3}, {1, 2}}));
}

TEST(PairingsProperty, UnfilteredCountIsDoubleFactorial) {
  for (int p = 0; p <= 12; p += 2) {
    EXPECT_EQ(BigInt(enumerate_pairings(p, 0).size()), double_factorial(p - 1)) << "p=" << p;
  }
}

TEST(PairingsProperty, FilteredCountMatchesFormula) {
  for (int p = 0; p <= 12; ++p) {
    for (int q = 0; p + q <= 12; ++q) {
      if ((p + q) % 2 != 0) continue;
      for (int s = p % 2; s <= std::min(p, q); s += 2) {
        const BigInt want =
            binom(p, s) * binom(q, s) * factorial(s) * double_factorial(p - s - 1) * double_factorial(q - s - 1);
        std::uint64_t visited = 0;
        visit_pairings(p, q, s, [&](std::span<const int>) { ++visited; });
        EXPECT_EQ(BigInt(visited), want) << p << " " << q << " " << s;
        EXPECT_EQ(BigInt(pairing_count(p, q, s)), want);
      }
    }
  }
}

TEST(PairingsProperty, EveryPairingIsAFixedPointFreeInvolution) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 4}, {5, 3}, {8, 0}, {2, 6}}) {
    for (const auto& mu : enumerate_pairings(p, q)) {
      const auto perm = mu.to_permutation();
      EXPECT_TRUE(perm.is_fixed_point_free_involution());
      EXPECT_EQ(compose(perm, perm), Permutation::identity(p + q));
    }
  }
}

TEST(PairingsProperty, BranchesPartitionTheEnumeration) {
  const int p = 5;
  const int q = 3;
  std::vector<std::vector<int>> whole;
  visit_pairings(p, q, std::nullopt, [&](std::span<const int> x) { whole.emplace_back(x.begin(), x.end()); });
  std::vector<std::vector<int>> pieces;
  for (int b = 0; b < p + q - 1; ++b) {
    visit_pairing_branch(p, q, std::nullopt, b, [&](std::span<const int> x) { pieces.emplace_back(x.begin(), x.end()); });
  }
  EXPECT_EQ(whole, pieces);
}

TEST(PermutationProperty, InverseExhaustiveSmall) {
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    do {
      const Permutation f(images);
      EXPECT_EQ(compose(f, f.inverse()), Permutation::identity(n));
      EXPECT_EQ(compose(f.inverse(), f), Permutation::identity(n));
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(PermutationProperty, CompositionIsAssociative) {
  for (int trial = 0; trial < 500; ++trial) {
    const int n = testing::uniform(1, 30);
    const auto f = random_permutation(n);
    const auto g = random_permutation(n);
    const auto h = random_permutation(n);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    EXPECT_EQ(compose(f, f.inverse()), Permutation::identity(n));
  }
}

TEST(PermutationProperty, CyclesPartitionTheGroundSet) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_permutation(testing::uniform(1, 25));
    std::vector<int> seen;
    for (const auto& c : f.cycles()) {
      for (std::size_t t = 0; t < c.size(); ++t) {
        EXPECT_EQ(f(c[t]), c[(t + 1) % c.size()]);
        seen.push_back(c[t]);
      }
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(static_cast<int>(seen.size()), f.size());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  }
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace annular
