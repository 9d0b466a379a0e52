// Copyright 2026 The esf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "esf/ewens.h"
#include "esf/numeric.h"
#include "esf/partition.h"
#include "esf/stirling.h"
#include "oracles.h"

namespace esf {
namespace {

constexpr double kThetaProbes[] = {0.1, 1.0, 5.0, 50.0};

TEST(PartitionTest, DerivesSizeAndTypes) {
  const Partition p({{1, 3}, {2, 1}});
  EXPECT_EQ(p.n(), 5);
  EXPECT_EQ(p.k(), 4);
  EXPECT_EQ(p.multiplicity(1), 3);
  EXPECT_EQ(p.multiplicity(7), 0);
  EXPECT_EQ(p.ToString(), "1:3;2:1");
}

TEST(PartitionTest, DropsZeroMultiplicities) {
  const Partition p({{1, 2}, {3, 0}});
  EXPECT_EQ(p.multiplicities().size(), 1u);
  EXPECT_EQ(p, Partition(Partition::Multiplicities{{1, 2}}));
}

TEST(PartitionTest, RejectsInvalidEntries) {
  EXPECT_THROW(Partition(Partition::Multiplicities{{0, 1}}), std::invalid_argument);
  EXPECT_THROW(Partition(Partition::Multiplicities{{2, -1}}), std::invalid_argument);
  EXPECT_THROW(Partition(Partition::Multiplicities{}), std::invalid_argument);
  EXPECT_THROW(Partition::Parse("1:x"), std::invalid_argument);
  EXPECT_THROW(Partition::Parse("1:1;1:2"), std::invalid_argument);
  EXPECT_THROW(Partition::Parse("12"), std::invalid_argument);
}

TEST(PartitionTest, ParseInvertsToString) {
  for (const auto& p : EnumeratePartitions(8)) {
    EXPECT_EQ(Partition::Parse(p.ToString()), p);
  }
}

TEST(PartitionTest, FromTypeSizesIgnoresEmptyTypes) {
  const std::vector<int> sizes = {2, 0, 1, 2, 0};
  EXPECT_EQ(Partition::FromTypeSizes(sizes), Partition(Partition::Multiplicities{{1, 1}, {2, 2}}));
}

TEST(ModelParamsTest, EnforcesRegularity) {
  const auto params = ModelParams::Make(2.0, 100, 10);
  EXPECT_DOUBLE_EQ(params.xi(), std::log(2.0));
  EXPECT_THROW(ModelParams::Make(0.0, 100, 10), std::domain_error);
  EXPECT_THROW(ModelParams::Make(INFINITY, 100, 10), std::domain_error);
  EXPECT_THROW(ModelParams::Make(1.0, 100, 1), std::domain_error);
  EXPECT_THROW(ModelParams::Make(1.0, 5, 10), std::domain_error);
}

TEST(LogPochhammerTest, MatchesDirectProducts) {
  EXPECT_NEAR(LogPochhammer(1.0, 3), std::log(6.0), 1e-15);
  EXPECT_NEAR(LogPochhammer(2.0, 2), std::log(6.0), 1e-15);
  EXPECT_DOUBLE_EQ(LogPochhammer(3.7, 1), std::log(3.7));
  // Gamma-function route for a long product.
  const double theta = 2.5;
  const double gamma_route = std::lgamma(theta + 500) - std::lgamma(theta);
  EXPECT_NEAR(LogPochhammer(theta, 500), gamma_route,
              1e-12 * std::abs(gamma_route));
  EXPECT_THROW(LogPochhammer(0.0, 3), std::domain_error);
  EXPECT_THROW(LogPochhammer(-1.0, 3), std::domain_error);
}

TEST(EwensLogPmfTest, SmallCases) {
  EXPECT_NEAR(EwensLogPmf(Partition(Partition::Multiplicities{{1, 1}, {2, 1}}), 1.0), std::log(0.5),
              1e-14);
  EXPECT_NEAR(EwensLogPmf(Partition(Partition::Multiplicities{{3, 1}}), 1.0), std::log(1.0 / 3.0),
              1e-14);
  for (double theta : kThetaProbes) {
    EXPECT_NEAR(EwensLogPmf(Partition(Partition::Multiplicities{{1, 1}}), theta), 0.0, 1e-15);
  }
  EXPECT_THROW(EwensLogPmf(Partition(Partition::Multiplicities{{1, 1}}), 0.0), std::domain_error);
}

TEST(EwensLogPmfTest, AgreesWithDirectFormula) {
  for (int n = 1; n <= 10; ++n) {
    for (double theta : kThetaProbes) {
      for (const auto& parts : oracle::AllPartsLists(n)) {
        const auto s = oracle::ToMultiplicities(parts);
        const double expected = static_cast<double>(oracle::EwensPmf(s, theta));
        EXPECT_NEAR(std::exp(EwensLogPmf(Partition(s), theta)), expected,
                    1e-12 * expected + 1e-300);
      }
    }
  }
}

TEST(EwensLogPmfTest, NormalizesOverAllPartitions) {
  for (Count n = 1; n <= 10; ++n) {
    for (double theta : kThetaProbes) {
      double total = 0;
      for (const auto& p : EnumeratePartitions(n)) {
        total += std::exp(EwensLogPmf(p, theta));
      }
      EXPECT_NEAR(total, 1.0, 1e-10) << "n=" << n << " theta=" << theta;
    }
  }
}

TEST(StirlingTableTest, SmallRows) {
  const StirlingTable table(4);
  EXPECT_NEAR(std::exp(table.log_s(3, 1)), 2.0, 1e-13);
  EXPECT_NEAR(std::exp(table.log_s(3, 2)), 3.0, 1e-13);
  EXPECT_NEAR(std::exp(table.log_s(3, 3)), 1.0, 1e-13);
  EXPECT_NEAR(std::exp(table.log_s(4, 2)), 11.0, 1e-12);
  EXPECT_EQ(table.log_s(3, 0), -INFINITY);
  EXPECT_EQ(table.log_s(3, 4), -INFINITY);
  EXPECT_THROW(table.log_s(5, 1), std::out_of_range);
}

TEST(StirlingTableTest, MatchesPolynomialExpansion) {
  const StirlingTable table(20);
  for (int m = 1; m <= 20; ++m) {
    const auto row = oracle::StirlingRow(m);
    for (int k = 1; k <= m; ++k) {
      const double expected = std::log(static_cast<double>(row[k]));
      EXPECT_NEAR(table.log_s(m, k), expected, 1e-12 * std::abs(expected) + 1e-13)
          << "m=" << m << " k=" << k;
    }
  }
}

TEST(StirlingTableTest, DiagonalAndFirstColumn) {
  const StirlingTable table(400);
  for (Count m = 1; m <= 400; ++m) {
    EXPECT_NEAR(table.log_s(m, m), 0.0, 1e-9);
    const double log_factorial = std::lgamma(static_cast<double>(m));
    EXPECT_NEAR(table.log_s(m, 1), log_factorial,
                1e-12 * std::max(1.0, log_factorial));
  }
}

TEST(StirlingTableTest, RowsSumToRisingFactorial) {
  // Well past the double overflow of s(n, k) near n = 171.
  const StirlingTable table(300);
  for (Count m : {1, 2, 5, 50, 170, 171, 300}) {
    for (double theta : {0.1, 1.0, 5.0, 50.0}) {
      std::vector<double> terms;
      for (Count k = 1; k <= m; ++k) {
        terms.push_back(table.log_s(m, k) + k * std::log(theta));
      }
      EXPECT_NEAR(LogSumExp(terms), LogPochhammer(theta, m),
                  1e-10 * std::max(1.0, std::abs(LogPochhammer(theta, m))))
          << "m=" << m << " theta=" << theta;
    }
  }
}

TEST(StirlingTableTest, EnforcesCap) {
  EXPECT_THROW(StirlingTable(0), std::invalid_argument);
  EXPECT_THROW(StirlingTable(11, 10), std::length_error);
  EXPECT_NO_THROW(StirlingTable(10, 10));
}

TEST(StirlingTableTest, SharedTableIsReused) {
  const auto big = SharedStirlingTable(64);
  const auto small = SharedStirlingTable(32);
  EXPECT_GE(small->n(), 32);
  EXPECT_EQ(SharedStirlingTable(64).get(), big.get());
}

TEST(KnLogPmfTest, SmallCases) {
  const auto table = SharedStirlingTable(10);
  EXPECT_NEAR(KnLogPmf(3, 2, 1.0, *table), std::log(0.5), 1e-14);
  EXPECT_NEAR(KnLogPmf(2, 2, 1.0, *table), std::log(0.5), 1e-14);
  EXPECT_NEAR(KnLogPmf(3, 1, 1.0, *table), std::log(1.0 / 3.0), 1e-14);
  EXPECT_NEAR(KnLogPmf(3, 3, 1.0, *table), std::log(1.0 / 6.0), 1e-14);
  // P(K_n = n) -> 1 as theta grows.
  EXPECT_GT(KnLogPmf(5, 5, 1e9, *table), -1e-7);
  EXPECT_THROW(KnLogPmf(3, 0, 1.0, *table), std::domain_error);
  EXPECT_THROW(KnLogPmf(3, 4, 1.0, *table), std::domain_error);
  EXPECT_THROW(KnLogPmf(11, 2, 1.0, StirlingTable(10)), std::domain_error);
}

TEST(KnLogPmfTest, AggregatesPartitionMasses) {
  const auto table = SharedStirlingTable(10);
  for (Count n = 1; n <= 10; ++n) {
    for (double theta : kThetaProbes) {
      std::vector<double> by_k(static_cast<std::size_t>(n + 1), 0.0);
      for (const auto& p : EnumeratePartitions(n)) {
        by_k[static_cast<std::size_t>(p.k())] += std::exp(EwensLogPmf(p, theta));
      }
      double total = 0;
      for (Count k = 1; k <= n; ++k) {
        const double pk = std::exp(KnLogPmf(n, k, theta, *table));
        EXPECT_NEAR(pk, by_k[static_cast<std::size_t>(k)], 1e-10);
        total += pk;
      }
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(KnLogPmfTest, MeanEqualsExpectedNumTypes) {
  const auto table = SharedStirlingTable(60);
  for (Count n : {2, 7, 25, 60}) {
    for (double theta : {0.3, 1.0, 4.0, 30.0}) {
      double mean = 0;
      for (Count k = 1; k <= n; ++k) {
        mean += k * std::exp(KnLogPmf(n, k, theta, *table));
      }
      EXPECT_NEAR(mean, ExpectedNumTypes(theta, n), 1e-9);
    }
  }
}

TEST(ExpectedSizeIndexTest, ClosedForms) {
  for (Count big_n : {1, 10, 1000, 10000}) {
    for (Count i = 1; i <= big_n; i += std::max<Count>(1, big_n / 37)) {
      const double expected = 1.0 / static_cast<double>(i);
      EXPECT_NEAR(ExpectedSizeIndex(1.0, i, big_n), expected, 1e-12 * expected);
    }
  }
  EXPECT_NEAR(ExpectedSizeIndex(3.0, 1, 10000), 30000.0 / 10002.0, 1e-12);
  EXPECT_NEAR(ExpectedSizeIndex(std::numbers::sqrt2, 1, 100),
              static_cast<double>(oracle::SizeIndex(std::sqrt(2.0L), 1, 100)),
              1e-12);
  EXPECT_THROW(ExpectedSizeIndex(1.0, 11, 10), std::domain_error);
  EXPECT_THROW(ExpectedSizeIndex(1.0, 0, 10), std::domain_error);
  EXPECT_THROW(ExpectedSizeIndex(-1.0, 1, 10), std::domain_error);
}

TEST(ExpectedSizeIndexTest, MatchesDirectProduct) {
  for (double theta : {0.1, 2.0, 70.0, 900.0}) {
    for (int i : {1, 2, 5, 40}) {
      const double expected =
          static_cast<double>(oracle::SizeIndex(theta, i, 1000));
      EXPECT_NEAR(ExpectedSizeIndex(theta, i, 1000), expected,
                  1e-12 * expected);
    }
  }
}

TEST(ExpectedSizeIndexTest, MomentIdentities) {
  for (double theta : {0.1, 1.0, 10.0}) {
    for (Count big_n : {10, 1000}) {
      CompensatedSum weighted;
      CompensatedSum plain;
      for (Count i = 1; i <= big_n; ++i) {
        const double r = ExpectedSizeIndex(theta, i, big_n);
        weighted += static_cast<double>(i) * r;
        plain += r;
      }
      const double n = static_cast<double>(big_n);
      EXPECT_NEAR(weighted.value(), n, 1e-10 * n);
      const double eta = ExpectedNumTypes(theta, big_n);
      EXPECT_NEAR(plain.value(), eta, 1e-10 * eta);
    }
  }
}

TEST(ExpectedNumTypesTest, Values) {
  EXPECT_NEAR(ExpectedNumTypes(1.0, 3), 11.0 / 6.0, 1e-15);
  EXPECT_DOUBLE_EQ(ExpectedNumTypes(0.37, 1), 1.0);
  EXPECT_NEAR(ExpectedNumTypes(2.5, 700),
              static_cast<double>(oracle::Eta(2.5L, 700)), 1e-12);
  EXPECT_THROW(ExpectedNumTypes(1.0, 0), std::domain_error);
  EXPECT_THROW(ExpectedNumTypes(0.0, 3), std::domain_error);
}

TEST(EnumeratePartitionsTest, CountsMatchPartitionNumbers) {
  // p(n) for n = 1..12.
  const int counts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 1; n <= 12; ++n) {
    const auto parts = EnumeratePartitions(n);
    EXPECT_EQ(static_cast<int>(parts.size()), counts[n - 1]);
    EXPECT_EQ(parts.size(), oracle::AllPartsLists(n).size());
    for (std::size_t a = 1; a < parts.size(); ++a) {
      EXPECT_TRUE(parts[a - 1] < parts[a]);  // sorted, hence distinct
    }
    for (const auto& p : parts) EXPECT_EQ(p.n(), n);
  }
  EXPECT_THROW(EnumeratePartitions(13), std::length_error);
  EXPECT_NO_THROW(EnumeratePartitions(13, 13));
}

}  // namespace
}  // namespace esf
