#include <gtest/gtest.h>

#include "annular/closed_forms.hpp"
#include "annular/oracle.hpp"
#include "support.hpp"

namespace annular {
namespace {

using testing::naive_distribution;

Polynomial mono(std::vector<long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(big));
}

BinomialBasisPolynomial binomial(std::vector<long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return BinomialBasisPolynomial(std::move(big));
}

TEST(Basis, ToMonomialExamples) {
  EXPECT_EQ(to_monomial(binomial({0, 1})), mono({0, 1}));
  EXPECT_EQ(to_monomial(binomial({0, 0, 2})), mono({0, -1, 1}));
  EXPECT_EQ(to_monomial(hz_series(4)), mono({0, 1, 0, 2}));
}

TEST(Basis, ToMonomialRejectsNonIntegralResults) {
  EXPECT_THROW(to_monomial(binomial({0, 0, 1})), IntegralityError);
}

TEST(Basis, ForwardDifferenceExamples) {
  EXPECT_EQ(forward_differences({1, 1, 1, 1}), (std::vector<BigInt>{1, 0, 0, 0}));
  EXPECT_EQ(forward_differences({0, 1, 2, 3}), (std::vector<BigInt>{0, 1, 0, 0}));
}

TEST(BasisProperty, MonomialRoundTripOnRandomPolynomials) {
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = testing::uniform(0, 20);
    std::vector<BigInt> coeffs;
    for (int d = 0; d <= degree; ++d) coeffs.emplace_back(testing::uniform(-1000, 1000));
    const Polynomial poly(coeffs);
    EXPECT_EQ(to_monomial(from_monomial(poly)), poly);
  }
}

TEST(BasisProperty, ForwardDifferencesReproduceValues) {
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigInt> values;
    const int count = testing::uniform(1, 15);
    for (int t = 0; t < count; ++t) values.emplace_back(testing::uniform(-50, 50));
    const BinomialBasisPolynomial b(forward_differences(values));
    for (int x = 0; x < count; ++x) EXPECT_EQ(b.evaluate(x), values[static_cast<std::size_t>(x)]);
  }
}

TEST(SingleCycle, SmallCases) {
  EXPECT_EQ(to_monomial(hz_series(2)), mono({0, 0, 1}));
  EXPECT_EQ(distribution_of(hz_series(4)), naive_distribution(4, 0, std::nullopt));
  EXPECT_THROW(hz_series(3), std::invalid_argument);
  EXPECT_THROW(hz_series(0), std::invalid_argument);
}

TEST(SingleCycle, ValueAtOneCountsPairings) {
  for (int p = 2; p <= 12; p += 2) {
    EXPECT_EQ(to_monomial(hz_series(p)).evaluate(1), double_factorial(p - 1)) << p;
    EXPECT_EQ(distribution_of(hz_series(p)), naive_distribution(p, 0, std::nullopt)) << p;
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(SeriesSpec{1, 1, 1}, 1, 0, 0), 1);
  EXPECT_EQ(delta(SeriesSpec{2, 2, 2}, 2, 0, 0), 1);
}

TEST(Delta, NonnegativeInsideTheSummationRange) {
  for (int p = 1; p <= 12; ++p) {
    for (int q = 1; q <= 12; ++q) {
      if ((p - q) % 2 != 0) continue;
      for (int s = (p % 2 == 0 ? 2 : 1); s <= std::min(p, q); s += 2) {
        const SeriesSpec spec{p, q, s};
        for (int i = 0; i <= p / 2; ++i) {
          for (int j = 0; j <= q / 2; ++j) {
            for (int k = 1; k - 1 <= spec.n() - i - j; ++k) EXPECT_GE(delta(spec, k, i, j), 0);
          }
        }
      }
    }
  }
}

TEST(MainSeries, SmallCasesAgainstHandProducts) {
  EXPECT_EQ(distribution_of(main_series(SeriesSpec{1, 1, 1})).to_string(), "{1:1}");
  EXPECT_EQ(distribution_of(main_series(SeriesSpec{2, 2, 2})).to_string(), "{2:2}");
  EXPECT_EQ(distribution_of(main_series(SeriesSpec{3, 1, 1})).to_string(), "{2:3}");
}

TEST(MainSeries, MatchesCompositionBruteForce) {
  for (int p = 1; p <= 7; ++p) {
    for (int q = 1; p + q <= 10; ++q) {
      if ((p - q) % 2 != 0) continue;
      for (int s = (p % 2 == 0 ? 2 : 1); s <= std::min(p, q); s += 2) {
        EXPECT_EQ(distribution_of(main_series(SeriesSpec{p, q, s})), naive_distribution(p, q, s))
            << p << " " << q << " " << s;
      }
    }
  }
}

TEST(MainSeries, RejectsInfeasibleParameters) {
  EXPECT_THROW(main_series(SeriesSpec{2, 3, 1}), std::invalid_argument);
  EXPECT_THROW(main_series(SeriesSpec{3, 1, 3}), std::invalid_argument);
  EXPECT_THROW(main_series(SeriesSpec{4, 2, 1}), std::invalid_argument);
  EXPECT_THROW(main_series(SeriesSpec{3, 3, std::nullopt}), std::invalid_argument);
}

TEST(Planar, Examples) {
  EXPECT_EQ(planar_coefficient(SeriesSpec{3, 1, 1}), 3);
  EXPECT_EQ(planar_coefficient(SeriesSpec{2, 2, 2}), 2);
  EXPECT_EQ(planar_coefficient(SeriesSpec{1, 1, 1}), 1);
}

TEST(EqualCycleClosedForm, SmallCases) {
  EXPECT_EQ(jackson_series(1), mono({0, 1}));
  EXPECT_EQ(jackson_series(2), summed_main_series(2, 2));
  EXPECT_THROW(jackson_series(0), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(jackson_series(n), gs_series(n, n)) << n;
}

TEST(SummedClosedForm, SmallCases) {
  EXPECT_EQ(gs_series(1, 1), mono({0, 1}));
  EXPECT_EQ(gs_series(2, 4), summed_main_series(2, 4));
  EXPECT_EQ(gs_series(4, 2), gs_series(2, 4));
  EXPECT_EQ(gs_series(3, 3), jackson_series(3));
  EXPECT_THROW(gs_series(2, 3), std::invalid_argument);
}

TEST(SummedSeries, MatchesBruteForceOverPositiveS) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 5}, {4, 4}, {6, 2}}) {
    CycleDistribution brute;
    for (int s = (p % 2 == 0 ? 2 : 1); s <= std::min(p, q); s += 2) brute.merge(naive_distribution(p, q, s));
    EXPECT_EQ(CycleDistribution::from_polynomial(gs_series(p, q)), brute) << p << " " << q;
  }
}

TEST(FullVertical, Examples) {
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(f_full_vertical(s, 1, 0, 0), factorial(s));
  EXPECT_EQ(f_full_vertical(1, 1, 0, 0), 1);
  EXPECT_EQ(f_full_vertical(2, 2, 0, 0), 4);
  EXPECT_EQ(f_full_vertical(1, 2, 0, 0), 0);
}

TEST(Vertical, Examples) {
  EXPECT_EQ(v_vertical(1, 1, 0, 0), 1);
  EXPECT_EQ(v_vertical(2, 5, 1, 1), 0);
  EXPECT_EQ(v_vertical(1, 4, 0, 0), 0);
}

TEST(Reduction, MatchesBinomialCoefficientsOfMainSeries) {
  for (auto spec : {SeriesSpec{1, 1, 1}, SeriesSpec{3, 1, 1}, SeriesSpec{2, 2, 2}, SeriesSpec{5, 3, 1},
                    SeriesSpec{6, 4, 2}}) {
    EXPECT_EQ(reduction_series(spec), main_series(spec));
  }
  EXPECT_EQ(c_via_reduction(SeriesSpec{1, 1, 1}, 1), 1);
}

TEST(Reduction, MatchesForwardDifferencesOfTheOracle) {
  OracleJob job;
  job.p = 2;
  job.q = 2;
  job.s = 2;
  const auto values = brute_series_values(job, 3);
  const auto b = forward_differences(values);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(c_via_reduction(SeriesSpec{2, 2, 2}, k), b[static_cast<std::size_t>(k)]);
}

TEST(Genus, Relations) {
  EXPECT_EQ(genus_of(5, 5, 2), 0);
  EXPECT_EQ(genus_of(3, 5, 2), 1);
  EXPECT_EQ(genus_of(4, 5, 2), std::nullopt);
  EXPECT_EQ(genus_of(7, 5, 2), std::nullopt);
  EXPECT_EQ(genus_of(3, 2, 1), 0);
  EXPECT_EQ(genus_of(1, 2, 1), 1);
  EXPECT_THROW(genus_of(0, 2, 1), std::invalid_argument);
}

TEST(RootedMaps, CountsFromTheSeries) {
  EXPECT_EQ(rooted_map_count(SeriesSpec{1, 1, 1}, 1), 1);
  EXPECT_EQ(rooted_map_count(SeriesSpec{2, 2, 2}, 2), 1);
  for (auto spec : {SeriesSpec{3, 1, 1}, SeriesSpec{4, 2, 2}, SeriesSpec{5, 3, 3}}) {
    const int n = spec.n();
    EXPECT_EQ(Rational(rooted_map_count(spec, n)),
              Rational(planar_coefficient(spec)) * rooted_map_factor(spec.p, spec.q));
  }
}

}  // namespace
}  // namespace annular
