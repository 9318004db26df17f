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

#include "promptsan/eval.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace promptsan::eval {
namespace {

SanitizerConfig TestConfig(double epsilon = 1.0) {
  SanitizerConfig config = DefaultConfig(SanitizerKey::FromHex(std::string(64, 'b')));
  config.epsilon_total = epsilon;
  return config;
}

TEST(RelativeErrorTest, ExactAndArithmeticCases) {
  EXPECT_DOUBLE_EQ(RelativeError(100.0, 100.0), 0.0);
  EXPECT_DOUBLE_EQ(RelativeError(105.0, 100.0), 0.05);
  EXPECT_DOUBLE_EQ(RelativeError(50.0, 100.0), 0.5);
}

TEST(RelativeErrorTest, SignFlipAdjustment) {
  ScoreFlags flags;
  EXPECT_DOUBLE_EQ(RelativeError(-100.0, 100.0, &flags), 0.0);
  EXPECT_TRUE(flags.adjusted);
}

TEST(RelativeErrorTest, MagnitudeAdjustment) {
  ScoreFlags flags;
  // Off by a factor of ten: adjusted error 0 < 0.1 is recorded instead.
  EXPECT_DOUBLE_EQ(RelativeError(1000.0, 100.0, &flags), 0.0);
  EXPECT_TRUE(flags.adjusted);
  // Large mismatch that no adjustment rescues keeps the base error.
  EXPECT_DOUBLE_EQ(RelativeError(137.0, 100.0, &flags), 0.37);
  EXPECT_FALSE(flags.adjusted);
}

TEST(RelativeErrorTest, ZeroTruthFlag) {
  ScoreFlags flags;
  EXPECT_DOUBLE_EQ(RelativeError(3.0, 0.0, &flags), 3.0);
  EXPECT_TRUE(flags.zero_truth);
}

TEST(ConsistencyTest, Basics) {
  EXPECT_DOUBLE_EQ(Consistency(100.0, 100.0), 0.0);
  EXPECT_DOUBLE_EQ(Consistency(110.0, 100.0), 0.10);
  ScoreFlags flags;
  EXPECT_DOUBLE_EQ(Consistency(5.0, 0.0, &flags), 5.0);
  EXPECT_TRUE(flags.zero_truth);
}

// Naive independent percentile oracle: sort and interpolate, written
// separately from the implementation under test.
double NaivePercentile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const double rank = q / 100.0 * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(rank));
  const std::size_t hi = static_cast<std::size_t>(std::ceil(rank));
  if (lo == hi) return values[lo];
  return values[lo] + (values[hi] - values[lo]) * (rank - static_cast<double>(lo));
}

TEST(PercentileTest, AgreesWithNaiveOracleOnRandomVectors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    std::vector<double> values(n);
    for (double& v : values) v = static_cast<double>(rng() % 10000) / 100.0;
    const QualityReport report = Summarize("test", values);
    EXPECT_NEAR(report.p25, NaivePercentile(values, 25.0), 1e-12);
    EXPECT_NEAR(report.p50, NaivePercentile(values, 50.0), 1e-12);
    EXPECT_NEAR(report.p75, NaivePercentile(values, 75.0), 1e-12);
    EXPECT_LE(report.p25, report.p50);
    EXPECT_LE(report.p50, report.p75);
  }
}

TEST(OrderPreservationTest, ConcentratesAtLargeEpsilon) {
  const mldp::IntegerDomain ages{10, 99, 1};
  EXPECT_GT(OrderPreservationProbability(30, 60, 50.0, ages), 0.9999);
  EXPECT_THROW(OrderPreservationProbability(30, 30, 1.0, ages), DomainError);
}

TEST(OrderPreservationTest, SymmetricInArgumentOrder) {
  const mldp::IntegerDomain ages{10, 99, 1};
  EXPECT_DOUBLE_EQ(OrderPreservationProbability(30, 60, 1.0, ages),
                   OrderPreservationProbability(60, 30, 1.0, ages));
}

TEST(OrderPreservationTest, TranslationSymmetryAwayFromEdges) {
  const mldp::IntegerDomain wide{0, 999, 1};
  // Same gap, same distances to the boundaries.
  const double p1 = OrderPreservationProbability(400, 420, 1.0, wide);
  const double p2 = OrderPreservationProbability(579, 599, 1.0, wide);
  EXPECT_NEAR(p1, p2, 1e-9);
}

TEST(OrderPreservationTest, EmpiricalMatchAtModerateScale) {
  const mldp::IntegerDomain ages{10, 99, 1};
  const double exact = OrderPreservationProbability(30, 60, 1.0, ages);
  std::mt19937_64 rng(11);
  const int n = 20000;
  int ordered = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t a = mldp::Sample(30, 1.0, ages, rng);
    const std::int64_t b = mldp::Sample(60, 1.0, ages, rng);
    if (a < b) {
      ++ordered;
    } else if (a == b) {
      // half-credit ties, matching the exact definition
      if (i % 2 == 0) ++ordered;
    }
  }
  const double sigma = std::sqrt(exact * (1 - exact) / n);
  EXPECT_NEAR(static_cast<double>(ordered) / n, exact, 3 * sigma);
}

TEST(MockOracleTest, CompareCountsLargerValue) {
  MockOracle oracle;
  oracle.task = MockOracle::Task::kCompareTwoValues;
  oracle.recognizers = annotate::DefaultPatternPack();
  EXPECT_EQ(oracle.Respond("Card A balance of $900 vs card B balance of $450."), "1");
  EXPECT_EQ(oracle.Respond("Card A balance of $450 vs card B balance of $900."), "2");
}

TEST(MockOracleTest, RetrieveFieldEchoesRequestedToken) {
  MockOracle oracle;
  oracle.task = MockOracle::Task::kRetrieveField;
  oracle.field = SensitiveType(SensitiveType::Kind::kSsn);
  oracle.recognizers = annotate::DefaultPatternPack();
  EXPECT_EQ(oracle.Respond("Order from zip code 10001, SSN 055-46-6168."),
            "The answer is 055-46-6168.");
}

TEST(MockOracleTest, LinearFormulaScalesFirstValue) {
  MockOracle oracle;
  oracle.task = MockOracle::Task::kLinearFormula;
  oracle.coefficient = 0.2;
  oracle.recognizers = annotate::DefaultPatternPack();
  EXPECT_EQ(oracle.Respond("My income is $5,000 monthly."), "1000.00");
}

// Category I only: FPE round-trips exactly, so the mock's answers restore
// perfectly and alpha equals beta at accuracy 1.0.
TEST(RunEvalTest, RetrieveFieldCorpusHasPerfectUtility) {
  const SanitizerConfig config = TestConfig();
  const annotate::RecognizerSet pack = annotate::DefaultPatternPack();
  MockOracle oracle;
  oracle.task = MockOracle::Task::kRetrieveField;
  oracle.field = SensitiveType(SensitiveType::Kind::kSsn);
  oracle.recognizers = pack;

  std::vector<EvalSample> corpus;
  std::mt19937_64 gen(5);
  for (int i = 0; i < 25; ++i) {
    std::string digits;
    for (int d = 0; d < 9; ++d) digits += static_cast<char>('0' + gen() % 10);
    const std::string ssn =
        digits.substr(0, 3) + "-" + digits.substr(3, 2) + "-" + digits.substr(5);
    corpus.push_back({"Customer record: SSN " + ssn + ". What is the SSN?", ssn, std::nullopt});
  }

  const EvalOutcome outcome = RunEval(corpus, config, oracle, pack, Scoring::kExactMatch, 99);
  EXPECT_TRUE(outcome.warnings.empty());
  ASSERT_EQ(outcome.clean.samples, corpus.size());
  ASSERT_EQ(outcome.sanitized.samples, corpus.size());
  for (const double s : outcome.clean.scores) EXPECT_DOUBLE_EQ(s, 1.0);
  for (const double s : outcome.sanitized.scores) EXPECT_DOUBLE_EQ(s, 1.0);
}

TEST(RunEvalTest, MedianConsistencyShrinksWithBudget) {
  const annotate::RecognizerSet pack = annotate::DefaultPatternPack();
  MockOracle oracle;
  oracle.task = MockOracle::Task::kLinearFormula;
  oracle.coefficient = 0.2;
  oracle.recognizers = pack;

  std::vector<EvalSample> corpus;
  std::mt19937_64 gen(13);
  for (int i = 0; i < 120; ++i) {
    const std::int64_t income = 500 + 450 * static_cast<std::int64_t>(gen() % 111);
    corpus.push_back(
        {"My income is $" + std::to_string(income) + " per month. How much should I save?",
         "", std::nullopt});
  }

  double previous = 1e9;
  for (const double eps : {0.1, 0.5, 1.0, 2.0}) {
    const EvalOutcome outcome =
        RunEval(corpus, TestConfig(eps), oracle, pack, Scoring::kConsistency, 7);
    EXPECT_LT(outcome.sanitized.p50, previous) << "eps=" << eps;
    previous = outcome.sanitized.p50;
  }
}

TEST(RunEvalTest, EmptyCorpusGivesEmptyReport) {
  const EvalOutcome outcome =
      RunEval({}, TestConfig(), MockOracle{}, annotate::DefaultPatternPack(),
              Scoring::kExactMatch, 1);
  EXPECT_EQ(outcome.clean.samples, 0u);
  EXPECT_EQ(outcome.sanitized.samples, 0u);
}

TEST(RunEvalTest, PerSampleFailuresAreRecordedNotFatal) {
  const SanitizerConfig config = TestConfig();
  const annotate::RecognizerSet pack = annotate::DefaultPatternPack();
  MockOracle oracle;
  oracle.task = MockOracle::Task::kLinearFormula;
  oracle.recognizers = pack;
  // Second sample has no numeric token, so the oracle reply is not numeric.
  const std::vector<EvalSample> corpus = {
      {"My income is $5,000.", "1000", std::nullopt},
      {"No numbers here.", "1000", std::nullopt},
  };
  const EvalOutcome outcome = RunEval(corpus, config, oracle, pack, Scoring::kRelativeError, 3);
  EXPECT_EQ(outcome.sanitized.samples, 1u);
  ASSERT_EQ(outcome.warnings.size(), 1u);
}

}  // namespace
}  // namespace promptsan::eval
