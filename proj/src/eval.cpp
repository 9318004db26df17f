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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>

#include <json.hpp>

#include "promptsan/utf8.hpp"

namespace promptsan::eval {
namespace {

using nlohmann::json;

constexpr int kMagnitudeSearchRange = 4;  // powers of ten, 10^-4 .. 10^4
constexpr std::int64_t kMaxExactOrderDomain = 2000;

std::uint64_t SampleSeed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> NumericTokens(const std::string& text,
                                  const annotate::RecognizerSet& recognizers) {
  std::vector<double> values;
  for (const TypedToken& token : annotate::Annotate(text, recognizers).tokens) {
    try {
      values.push_back(pipeline::ParseNumeric(token.text).ToDouble());
    } catch (const DomainError&) {
      // non-numeric token (a name, a password); skip
    }
  }
  return values;
}

}  // namespace

double RelativeError(double pred, double truth, ScoreFlags* flags) {
  if (flags != nullptr) *flags = {};
  if (truth == 0.0) {
    if (flags != nullptr) flags->zero_truth = true;
    return std::abs(pred);
  }
  const double base = std::abs(pred - truth) / std::abs(truth);
  double best_adjusted = base;
  for (int sign = 0; sign < 2; ++sign) {
    for (int power = -kMagnitudeSearchRange; power <= kMagnitudeSearchRange; ++power) {
      const double adjusted = (sign == 0 ? pred : -pred) * std::pow(10.0, power);
      best_adjusted = std::min(best_adjusted, std::abs(adjusted - truth) / std::abs(truth));
    }
  }
  if (best_adjusted < 0.1 && best_adjusted < base) {
    if (flags != nullptr) flags->adjusted = true;
    return best_adjusted;
  }
  return base;
}

double Consistency(double pred_sanitized, double pred_clean, ScoreFlags* flags) {
  if (flags != nullptr) *flags = {};
  if (pred_clean == 0.0) {
    if (flags != nullptr) flags->zero_truth = true;
    return std::abs(pred_sanitized);
  }
  return std::abs(pred_sanitized - pred_clean) / std::abs(pred_clean);
}

double OrderPreservationProbability(std::int64_t a, std::int64_t b, double epsilon,
                                    const mldp::IntegerDomain& domain) {
  if (a == b) throw DomainError("order preservation requires a != b");
  if (domain.size() > kMaxExactOrderDomain) {
    throw ValidationError("domain: exact double sum capped at size " +
                          std::to_string(kMaxExactOrderDomain));
  }
  const bool swapped = a > b;
  const std::int64_t lo_val = swapped ? b : a;
  const std::int64_t hi_val = swapped ? a : b;
  const mldp::Distribution pa = mldp::ComputeDistribution(lo_val, epsilon, domain);
  const mldp::Distribution pb = mldp::ComputeDistribution(hi_val, epsilon, domain);

  // Pr[A < B] via the running CDF of A, plus half the tie mass.
  double cdf_a = 0.0;
  double less = 0.0;
  double tie = 0.0;
  for (std::size_t j = 0; j < pb.probs.size(); ++j) {
    less += pb.probs[j] * cdf_a;
    tie += pa.probs[j] * pb.probs[j];
    cdf_a += pa.probs[j];
  }
  return less + 0.5 * tie;
}

double Percentile(const std::vector<double>& sorted_scores, double q) {
  if (sorted_scores.empty()) throw ValidationError("percentile of empty score list");
  if (sorted_scores.size() == 1) return sorted_scores[0];
  const double pos = q / 100.0 * static_cast<double>(sorted_scores.size() - 1);
  const std::size_t lower = static_cast<std::size_t>(pos);
  const std::size_t upper = std::min(lower + 1, sorted_scores.size() - 1);
  const double frac = pos - static_cast<double>(lower);
  return sorted_scores[lower] * (1.0 - frac) + sorted_scores[upper] * frac;
}

QualityReport Summarize(std::string oracle_name, std::vector<double> scores) {
  QualityReport report;
  report.oracle_name = std::move(oracle_name);
  report.samples = scores.size();
  report.scores = std::move(scores);
  if (report.samples == 0) return report;
  std::vector<double> sorted = report.scores;
  std::sort(sorted.begin(), sorted.end());
  report.p25 = Percentile(sorted, 25.0);
  report.p50 = Percentile(sorted, 50.0);
  report.p75 = Percentile(sorted, 75.0);
  return report;
}

std::optional<double> FirstNumericValue(const std::string& text) {
  static const std::regex number(R"([-+]?[0-9][0-9,]*(?:\.[0-9]+)?)");
  std::smatch match;
  if (!std::regex_search(text, match, number)) return std::nullopt;
  std::string cleaned = match.str();
  cleaned.erase(std::remove(cleaned.begin(), cleaned.end(), ','), cleaned.end());
  return std::stod(cleaned);
}

std::string MockOracle::Respond(const std::string& prompt) const {
  switch (task) {
    case Task::kCompareTwoValues: {
      const std::vector<double> values = NumericTokens(prompt, recognizers);
      if (values.size() < 2) return "?";
      return values[0] >= values[1] ? "1" : "2";
    }
    case Task::kRetrieveField: {
      for (const TypedToken& token : annotate::Annotate(prompt, recognizers).tokens) {
        if (token.type == field) return "The answer is " + token.text + ".";
      }
      return "not found";
    }
    case Task::kLinearFormula: {
      const std::vector<double> values = NumericTokens(prompt, recognizers);
      if (values.empty()) return "?";
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.2f", coefficient * values[0]);
      return buf;
    }
  }
  return "?";
}

std::vector<EvalSample> LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus: " + path.string());
  std::vector<EvalSample> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
    EvalSample sample;
    sample.prompt = record.value("prompt", "");
    if (record.contains("answer")) {
      const json& a = record.at("answer");
      sample.answer = a.is_string() ? a.get<std::string>() : a.dump();
    }
    if (record.contains("psi")) {
      sample.psi = pipeline::HelperStringFromJson(record.at("psi").dump());
    }
    corpus.push_back(std::move(sample));
  }
  return corpus;
}

EvalOutcome RunEval(const std::vector<EvalSample>& corpus, const SanitizerConfig& config,
                    const MockOracle& oracle, const annotate::RecognizerSet& recognizers,
                    Scoring scoring, std::uint64_t master_seed) {
  EvalOutcome outcome;
  std::vector<double> clean_scores;
  std::vector<double> sanitized_scores;

  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const EvalSample& sample = corpus[s];
    try {
      const std::string clean_response = oracle.Respond(sample.prompt);

      const TypedSequence typed = annotate::Annotate(sample.prompt, recognizers);
      const pipeline::PreprocessResult pre = pipeline::Preprocess(
          typed, config, sample.psi.has_value() ? &*sample.psi : nullptr);
      std::mt19937_64 rng(SampleSeed(master_seed, s));
      const pipeline::SanitizedPrompt sanitized = pipeline::Sanitize(config, typed, pre.psi, rng);
      const std::string sanitized_response = oracle.Respond(sanitized.text);
      const pipeline::DesanitizeResult restored =
          pipeline::Desanitize(config, sanitized_response, sample.prompt, recognizers);

      switch (scoring) {
        case Scoring::kExactMatch: {
          clean_scores.push_back(clean_response.find(sample.answer) != std::string::npos ? 1.0
                                                                                         : 0.0);
          sanitized_scores.push_back(
              restored.text.find(sample.answer) != std::string::npos ? 1.0 : 0.0);
          break;
        }
        case Scoring::kRelativeError: {
          const double truth = std::stod(sample.answer);
          const auto clean_pred = FirstNumericValue(clean_response);
          const auto restored_pred = FirstNumericValue(restored.text);
          if (!clean_pred || !restored_pred) throw DomainError("oracle reply not numeric");
          clean_scores.push_back(RelativeError(*clean_pred, truth));
          sanitized_scores.push_back(RelativeError(*restored_pred, truth));
          break;
        }
        case Scoring::kConsistency: {
          const auto clean_pred = FirstNumericValue(clean_response);
          const auto restored_pred = FirstNumericValue(restored.text);
          if (!clean_pred || !restored_pred) throw DomainError("oracle reply not numeric");
          clean_scores.push_back(0.0);
          sanitized_scores.push_back(Consistency(*restored_pred, *clean_pred));
          break;
        }
      }
    } catch (const Error& e) {
      outcome.warnings.push_back("sample " + std::to_string(s) + ": " + e.what());
    }
  }

  outcome.clean = Summarize("clean", std::move(clean_scores));
  outcome.sanitized = Summarize("sanitized", std::move(sanitized_scores));
  return outcome;
}

}  // namespace promptsan::eval
