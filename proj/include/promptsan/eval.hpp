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

#ifndef PROMPTSAN_EVAL_HPP_
#define PROMPTSAN_EVAL_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "promptsan/annotate.hpp"
#include "promptsan/config.hpp"
#include "promptsan/mldp.hpp"
#include "promptsan/pipeline.hpp"

// Utility measurement: quality oracles (relative error with sign/magnitude
// adjustment, prediction consistency, order preservation) and percentile
// reporting, runnable against deterministic mock oracles so no external
// model is needed.

namespace promptsan::eval {

struct ScoreFlags {
  bool zero_truth = false;  // truth was zero; |pred| returned instead
  bool adjusted = false;    // sign/magnitude-adjusted error was used
};

// |pred - truth| / |truth|; additionally tries sign flips and power-of-ten
// rescalings of pred (factors 10^-4..10^4) and returns the best adjusted
// error instead when it is below 0.1.
double RelativeError(double pred, double truth, ScoreFlags* flags = nullptr);

// |pred_sanitized - pred_clean| / |pred_clean|.
double Consistency(double pred_sanitized, double pred_clean, ScoreFlags* flags = nullptr);

// Exact Pr[perturbed(a) < perturbed(b)] + 1/2 Pr[tie] for a < b (mirror for
// a > b), from the two mechanism distributions. Domain size capped at 2000
// for the exact double sum.
double OrderPreservationProbability(std::int64_t a, std::int64_t b, double epsilon,
                                    const mldp::IntegerDomain& domain);

struct QualityReport {
  std::string oracle_name;
  std::vector<double> scores;
  std::size_t samples = 0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
};

// Percentiles by linear interpolation on the sorted scores.
QualityReport Summarize(std::string oracle_name, std::vector<double> scores);
double Percentile(const std::vector<double>& sorted_scores, double q);

// Deterministic stand-ins for the LLM.
struct MockOracle {
  enum class Task {
    kCompareTwoValues,  // answers "1" or "2": which of the two numbers is larger
    kRetrieveField,     // answers with the requested sensitive token's text
    kLinearFormula,     // answers coefficient * (first numeric value)
  };

  Task task = Task::kRetrieveField;
  double coefficient = 0.2;              // kLinearFormula
  SensitiveType field;                   // kRetrieveField: which type to return
  annotate::RecognizerSet recognizers;   // how the mock reads its prompt

  std::string Respond(const std::string& prompt) const;
};

struct EvalSample {
  std::string prompt;
  std::string answer;  // ground truth
  std::optional<pipeline::HelperString> psi;
};

// Corpus file: one JSON record per line {"prompt": ..., "answer": ...,
// "psi": {...}? }.
std::vector<EvalSample> LoadCorpus(const std::filesystem::path& path);

enum class Scoring {
  kExactMatch,      // response contains/equals the expected answer -> 1 else 0
  kRelativeError,   // numeric comparison of response vs expected
  kConsistency,     // response on sanitized prompt vs response on clean prompt
};

struct EvalOutcome {
  QualityReport clean;      // alpha: oracle scored on the original prompts
  QualityReport sanitized;  // beta: sanitize -> oracle -> desanitize -> score
  std::vector<std::string> warnings;
};

// Runs the full loop per sample: sanitize the prompt, query the oracle,
// desanitize its response against the original, score both sides.
// Per-sample failures are recorded and skipped, never fatal.
EvalOutcome RunEval(const std::vector<EvalSample>& corpus, const SanitizerConfig& config,
                    const MockOracle& oracle, const annotate::RecognizerSet& recognizers,
                    Scoring scoring, std::uint64_t master_seed);

// First numeric literal in a text (plain scan, no recognizers): how the
// scorers read oracle replies, which carry bare numbers without any
// sensitive-token context.
std::optional<double> FirstNumericValue(const std::string& text);

}  // namespace promptsan::eval

#endif  // PROMPTSAN_EVAL_HPP_
