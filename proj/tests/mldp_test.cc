// Copyright 2025 The Promptsan Authors
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

#include "promptsan/mldp.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace promptsan::mldp {
namespace {

const IntegerDomain kAges{10, 99, 1};  // k = 90

TEST(IntegerDomainTest, SizeIndexingAndClamp) {
  EXPECT_EQ(kAges.size(), 90);
  EXPECT_EQ(kAges.IndexOf(10), 0);
  EXPECT_EQ(kAges.IndexOf(99), 89);
  EXPECT_EQ(kAges.ValueAt(5), 15);
  EXPECT_EQ(kAges.Clamp(105.0), 99);
  EXPECT_EQ(kAges.Clamp(3.0), 10);
  EXPECT_EQ(kAges.Clamp(42.4), 42);

  const IntegerDomain money{500, 50000, 450};
  EXPECT_EQ(money.size(), 111);
  EXPECT_TRUE(money.Contains(950));
  EXPECT_FALSE(money.Contains(1000));
  EXPECT_EQ(money.Clamp(1000.0), 950);
  EXPECT_THROW(money.IndexOf(1000), DomainError);
}

TEST(IntegerDomainTest, ValidationRejectsBadShapes) {
  EXPECT_THROW((IntegerDomain{5, 1, 1}).Validate(), ValidationError);
  EXPECT_THROW((IntegerDomain{0, 10, 0}).Validate(), ValidationError);
  EXPECT_THROW((IntegerDomain{0, 10, 3}).Validate(), ValidationError);
}

TEST(DistributionTest, SingletonDomainIsDeterministic) {
  const IntegerDomain one{7, 7, 1};
  const Distribution dist = ComputeDistribution(7, 1.0, one);
  ASSERT_EQ(dist.probs.size(), 1u);
  EXPECT_DOUBLE_EQ(dist.probs[0], 1.0);
}

// Direct evaluation of the mechanism formula at k=3, x=1, eps=2:
// probs proportional to (1, e^-1, e^-2). Expected values computed with an
// independent script before the implementation existed.
TEST(DistributionTest, FrozenThreePointExample) {
  const IntegerDomain domain{1, 3, 1};
  const Distribution dist = ComputeDistribution(1, 2.0, domain);
  ASSERT_EQ(dist.probs.size(), 3u);
  EXPECT_NEAR(dist.probs[0], 0.6652409558, 1e-9);
  EXPECT_NEAR(dist.probs[1], 0.2447284711, 1e-9);
  EXPECT_NEAR(dist.probs[2], 0.0900305732, 1e-9);
}

TEST(DistributionTest, SymmetricAboutInput) {
  const Distribution dist = ComputeDistribution(55, 0.7, kAges);  // index 45, center-ish
  const std::int64_t xi = dist.x_index;
  for (std::int64_t d = 1; d <= 40; ++d) {
    EXPECT_DOUBLE_EQ(dist.probs[static_cast<std::size_t>(xi - d)],
                     dist.probs[static_cast<std::size_t>(xi + d)]);
  }
}

TEST(DistributionTest, NormalizedAndPositive) {
  for (const double eps : {0.1, 0.5, 1.0, 2.0}) {
    for (const std::int64_t x : {10, 37, 99}) {
      const Distribution dist = ComputeDistribution(x, eps, kAges);
      double sum = 0.0;
      for (const double p : dist.probs) {
        EXPECT_GT(p, 0.0);
        sum += p;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(DistributionTest, RejectsBadInputs) {
  EXPECT_THROW(ComputeDistribution(105, 1.0, kAges), DomainError);
  EXPECT_THROW(ComputeDistribution(50, 0.0, kAges), BudgetError);
  EXPECT_THROW(ComputeDistribution(50, -1.0, kAges), BudgetError);
}

// Property 1: the input is the strict mode, on a representative k grid.
TEST(DistributionTest, ModeAtInputIsStrict) {
  for (const std::int64_t k : {2, 3, 5, 10, 50, 100, 500, 1000}) {
    const IntegerDomain domain{0, k - 1, 1};
    for (const double eps : {0.1, 0.5, 1.0, 2.0}) {
      for (std::int64_t x = 0; x < k; ++x) {
        const Distribution dist = ComputeDistribution(x, eps, domain);
        for (std::int64_t y = 0; y < k; ++y) {
          if (y == x) continue;
          EXPECT_GT(dist.probs[static_cast<std::size_t>(x)],
                    dist.probs[static_cast<std::size_t>(y)])
              << "k=" << k << " eps=" << eps << " x=" << x << " y=" << y;
        }
      }
    }
  }
}

// Property 2: strictly closer outputs are strictly more likely, exhaustively
// at a moderate size (the acceptance suite covers k=200).
TEST(DistributionTest, DistanceMonotonicity) {
  const std::int64_t k = 60;
  const IntegerDomain domain{0, k - 1, 1};
  for (const double eps : {0.5, 2.0}) {
    for (std::int64_t x = 0; x < k; ++x) {
      const Distribution dist = ComputeDistribution(x, eps, domain);
      for (std::int64_t y1 = 0; y1 < k; ++y1) {
        for (std::int64_t y2 = 0; y2 < k; ++y2) {
          const std::int64_t d1 = std::abs(x - y1);
          const std::int64_t d2 = std::abs(x - y2);
          if (d1 < d2) {
            EXPECT_GT(dist.probs[static_cast<std::size_t>(y1)],
                      dist.probs[static_cast<std::size_t>(y2)]);
          } else if (d1 == d2) {
            EXPECT_DOUBLE_EQ(dist.probs[static_cast<std::size_t>(y1)],
                             dist.probs[static_cast<std::size_t>(y2)]);
          }
        }
      }
    }
  }
}

TEST(SampleTest, FixedSeedReproduces) {
  std::mt19937_64 rng1(12345);
  std::mt19937_64 rng2(12345);
  for (int i = 0; i < 200; ++i) {
    EXPECT_EQ(Sample(42, 1.0, kAges, rng1), Sample(42, 1.0, kAges, rng2));
  }
}

TEST(SampleTest, LargeEpsilonConcentratesOnInput) {
  const IntegerDomain domain{0, 99, 1};
  std::mt19937_64 rng(7);
  int hits = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    if (Sample(50, 50.0, domain, rng) == 50) ++hits;
  }
  EXPECT_GE(static_cast<double>(hits) / n, 0.999);
}

TEST(SampleTest, FrequenciesMatchExactDistribution) {
  const IntegerDomain domain{1, 10, 1};
  const Distribution dist = ComputeDistribution(5, 1.0, domain);
  std::mt19937_64 rng(99);
  const int n = 100000;
  std::vector<int> counts(10, 0);
  for (int i = 0; i < n; ++i) {
    ++counts[static_cast<std::size_t>(domain.IndexOf(Sample(5, 1.0, domain, rng)))];
  }
  for (std::size_t i = 0; i < 10; ++i) {
    const double p = dist.probs[i];
    const double sigma = std::sqrt(p * (1 - p) / n);
    EXPECT_NEAR(static_cast<double>(counts[i]) / n, p, 3 * sigma) << "bin " << i;
  }
}

TEST(SplitBudgetTest, DividesEvenly) {
  EXPECT_DOUBLE_EQ(SplitBudget(3.0, 3), 1.0);
  EXPECT_DOUBLE_EQ(SplitBudget(1.0, 1), 1.0);
  EXPECT_DOUBLE_EQ(SplitBudget(1.0, 4), 0.25);
  EXPECT_DOUBLE_EQ(SplitBudget(2.5, 0), 2.5);  // unused budget passes through
  EXPECT_THROW(SplitBudget(0.0, 1), BudgetError);
  EXPECT_THROW(SplitBudget(-1.0, 2), BudgetError);
}

TEST(RatioBoundTest, HoldsExhaustivelyAtModerateSize) {
  const IntegerDomain domain{0, 99, 1};
  EXPECT_LE(RatioBoundMargin(1.0, domain), 1.0 + 1e-9);
}

// Closed form at k=2: Z is shared, so p_{0,0}/p_{1,0} = e^{eps/2} and the
// scaled ratio is e^{-eps/2} < 1; the x == x' pairs pin the margin at 1.
TEST(RatioBoundTest, TwoPointClosedForm) {
  const IntegerDomain domain{0, 1, 1};
  for (const double eps : {0.1, 1.0, 5.0}) {
    const Distribution p0 = ComputeDistribution(0, eps, domain);
    const Distribution p1 = ComputeDistribution(1, eps, domain);
    EXPECT_NEAR(p0.probs[0] / p1.probs[0], std::exp(eps / 2.0), 1e-12);
    EXPECT_NEAR(p0.probs[0] / (p1.probs[0] * std::exp(eps)), std::exp(-eps / 2.0), 1e-12);
    EXPECT_DOUBLE_EQ(RatioBoundMargin(eps, domain), 1.0);
  }
}

TEST(RatioBoundTest, SingletonIsExactlyOne) {
  const IntegerDomain domain{5, 5, 1};
  EXPECT_DOUBLE_EQ(RatioBoundMargin(1.0, domain), 1.0);
}

// Total variation bound implied by the mLDP ratio:
// TV(p_x, p_x') <= 1 - e^{-eps |x - x'|}.
TEST(TotalVariationTest, BoundedByMldpConsequence) {
  const IntegerDomain domain{0, 199, 1};
  for (const double eps : {0.1, 0.5, 1.0, 2.0}) {
    for (const std::int64_t x : {0, 50, 120}) {
      for (const std::int64_t y : {5, 60, 199}) {
        if (x == y) continue;
        const double tv = TotalVariation(ComputeDistribution(x, eps, domain),
                                         ComputeDistribution(y, eps, domain));
        EXPECT_LE(tv, 1.0 - std::exp(-eps * std::abs(static_cast<double>(x - y))) + 1e-12);
      }
    }
  }
}

TEST(TotalVariationTest, BasicProperties) {
  const Distribution a = ComputeDistribution(20, 1.0, kAges);
  const Distribution b = ComputeDistribution(80, 1.0, kAges);
  EXPECT_DOUBLE_EQ(TotalVariation(a, a), 0.0);
  EXPECT_GT(TotalVariation(a, b), 0.9);
  EXPECT_LE(TotalVariation(a, b), 1.0);
}

}  // namespace
}  // namespace promptsan::mldp
