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

// Command-line front door. Every invocation is a separate session: state on
// disk is limited to the key/config written by `register`, and only the key
// is needed to desanitize.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "promptsan/annotate.hpp"
#include "promptsan/config.hpp"
#include "promptsan/eval.hpp"
#include "promptsan/pipeline.hpp"
#include "promptsan/privacy_game.hpp"

namespace {

using namespace promptsan;
using nlohmann::json;

std::string ReadAll(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string ReadInput(const std::string& path) {
  if (path.empty() || path == "-") return ReadAll(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input: " + path);
  return ReadAll(in);
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write output: " + path);
  out << text;
}

struct CommonOpts {
  std::string config_path;
  std::string key_path;  // overrides the config's key file
  std::optional<double> epsilon;
};

SanitizerConfig LoadSession(const CommonOpts& opts) {
  SanitizerConfig config = LoadConfig(opts.config_path);
  if (!opts.key_path.empty()) config.key = LoadKeyFile(opts.key_path);
  if (opts.epsilon.has_value()) config.epsilon_total = *opts.epsilon;
  config.Validate();
  return config;
}

std::mt19937_64 MakeRng(const std::optional<std::uint64_t>& seed) {
  if (seed.has_value()) return std::mt19937_64(*seed);
  std::random_device rd;
  return std::mt19937_64((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
}

std::string TokenReportJsonl(const pipeline::SanitizedPrompt& sanitized) {
  std::ostringstream out;
  for (std::size_t i = 0; i < sanitized.token_report.size(); ++i) {
    const pipeline::TokenRecord& r = sanitized.token_report[i];
    json line;
    line["index"] = i;
    line["type"] = r.type_name;
    line["category"] = r.category == Category::kCategoryI ? "I" : "II";
    line["mechanism"] = r.mechanism;
    line["span_in"] = {r.span_in.begin, r.span_in.end};
    line["span_out"] = {r.span_out.begin, r.span_out.end};
    if (r.epsilon.has_value()) {
      line["epsilon"] = *r.epsilon;
      line["epsilon_den"] = r.epsilon_denominator;
    }
    out << line.dump() << "\n";
  }
  return out.str();
}

void PrintWarnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

int RunRegister(const std::string& key_path, const std::string& config_path, double epsilon,
                int bits) {
  const SanitizerKey key = Keygen(bits);
  SaveKeyFile(key, key_path);
  std::filesystem::permissions(key_path,
                               std::filesystem::perms::owner_read |
                                   std::filesystem::perms::owner_write,
                               std::filesystem::perm_options::replace);
  SanitizerConfig config = DefaultConfig(key);
  config.epsilon_total = epsilon;
  config.Validate();
  // The config references the key file by the path it will be used from.
  std::filesystem::path key_ref = key_path;
  const std::filesystem::path config_dir =
      std::filesystem::absolute(config_path).parent_path();
  if (key_ref.is_relative()) {
    key_ref = std::filesystem::absolute(key_ref).lexically_relative(config_dir);
  }
  SaveConfig(config, config_path, key_ref);
  std::cout << "registered: key " << key_path << " (id " << key.key_id() << "), config "
            << config_path << "\n";
  return 0;
}

int RunSanitize(const CommonOpts& common, const std::string& input_path,
                const std::string& psi_path, const std::optional<std::uint64_t>& seed,
                const std::string& out_path, std::string report_path) {
  const SanitizerConfig config = LoadSession(common);
  const std::string prompt = ReadInput(input_path);

  const annotate::RecognizerSet recognizers = annotate::DefaultPatternPack();
  const TypedSequence typed = annotate::Annotate(prompt, recognizers);

  std::optional<pipeline::HelperString> user_psi;
  if (!psi_path.empty()) user_psi = pipeline::LoadHelperString(psi_path);

  const pipeline::PreprocessResult pre =
      pipeline::Preprocess(typed, config, user_psi.has_value() ? &*user_psi : nullptr);
  PrintWarnings(pre.warnings);

  std::mt19937_64 rng = MakeRng(seed);
  const pipeline::SanitizedPrompt sanitized = pipeline::Sanitize(config, typed, pre.psi, rng);
  PrintWarnings(sanitized.warnings);

  WriteOutput(out_path, sanitized.text);
  // The report travels on a separate stream so it never reaches the LLM
  // alongside the prompt.
  if (report_path.empty() && !out_path.empty() && out_path != "-") {
    report_path = out_path + ".report.jsonl";
  }
  if (!report_path.empty()) WriteOutput(report_path, TokenReportJsonl(sanitized));
  return 0;
}

int RunDesanitize(const CommonOpts& common, const std::string& input_path,
                  const std::string& original_path, const std::string& out_path) {
  const SanitizerConfig config = LoadSession(common);
  const std::string response = ReadInput(input_path);
  std::optional<std::string> original;
  if (!original_path.empty()) original = ReadInput(original_path);

  const pipeline::DesanitizeResult result =
      pipeline::Desanitize(config, response, original, annotate::DefaultPatternPack());
  PrintWarnings(result.warnings);
  WriteOutput(out_path, result.text);
  return 0;
}

std::pair<std::string, std::string> ReadPairFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pair file: " + path);
  std::string line;
  std::string first, second;
  bool after_separator = false;
  bool first_line_of_part = true;
  while (std::getline(in, line)) {
    if (line == "---") {
      if (after_separator) throw ParseError("pair file: more than one '---' separator");
      after_separator = true;
      first_line_of_part = true;
      continue;
    }
    std::string& target = after_separator ? second : first;
    if (!first_line_of_part) target += "\n";
    target += line;
    first_line_of_part = false;
  }
  if (!after_separator) throw ParseError("pair file: missing '---' separator");
  return {first, second};
}

int RunGame(const CommonOpts& common, const std::string& pair_path, std::int64_t trials,
            std::uint64_t seed, const std::string& adversary_name, double lambda_pct,
            const std::string& out_path) {
  const SanitizerConfig config = LoadSession(common);
  auto [p0, p1] = ReadPairFile(pair_path);
  const annotate::RecognizerSet recognizers = annotate::DefaultPatternPack();

  if (lambda_pct > 0.0) {
    std::mt19937_64 leak_rng(seed ^ 0x6c65616bULL);
    p1 = game::ApplyNerLeakage(p0, p1, lambda_pct, recognizers, leak_rng);
    std::cerr << "note: applied " << lambda_pct << "% NER leakage to the second prompt\n";
  }

  game::Adversary adversary;
  if (adversary_name == "likelihood") {
    adversary = game::LikelihoodAdversary(p0, p1, config, recognizers);
  } else if (adversary_name == "first-byte") {
    adversary = game::FirstByteAdversary(p0, p1);
  } else {
    throw ValidationError("adversary: expected 'likelihood' or 'first-byte'");
  }

  game::GameOptions options;
  options.trials = trials;
  options.master_seed = seed;
  const game::GameResult result = game::PlayGame(p0, p1, config, recognizers, options, adversary);

  std::cout << "trials:              " << result.trials << "\n";
  std::cout << "wins:                " << result.wins << "\n";
  std::cout << "empirical advantage: " << result.empirical_advantage << "\n";
  std::cout << "advantage std error: " << result.advantage_std_error << "\n";
  if (result.exact_tv_bound.has_value()) {
    std::cout << "exact TV bound:      " << *result.exact_tv_bound << "\n";
  }
  if (!out_path.empty()) {
    std::ostringstream csv;
    csv << "trials,wins,empirical_advantage,advantage_std_error,exact_tv_bound\n";
    csv << result.trials << "," << result.wins << "," << result.empirical_advantage << ","
        << result.advantage_std_error << ",";
    if (result.exact_tv_bound.has_value()) csv << *result.exact_tv_bound;
    csv << "\n";
    WriteOutput(out_path, csv.str());
  }
  return 0;
}

int RunEvalCommand(const CommonOpts& common, const std::string& corpus_path,
                   const std::string& oracle_name, const std::string& scoring_name,
                   std::uint64_t seed, const std::string& out_path) {
  const SanitizerConfig config = LoadSession(common);
  const std::vector<eval::EvalSample> corpus = eval::LoadCorpus(corpus_path);
  const annotate::RecognizerSet recognizers = annotate::DefaultPatternPack();

  eval::MockOracle oracle;
  oracle.recognizers = recognizers;
  if (oracle_name == "compare") {
    oracle.task = eval::MockOracle::Task::kCompareTwoValues;
  } else if (oracle_name.rfind("retrieve-field:", 0) == 0) {
    oracle.task = eval::MockOracle::Task::kRetrieveField;
    oracle.field = SensitiveType::FromName(oracle_name.substr(std::string("retrieve-field:").size()));
  } else if (oracle_name.rfind("linear:", 0) == 0) {
    oracle.task = eval::MockOracle::Task::kLinearFormula;
    oracle.coefficient = std::stod(oracle_name.substr(std::string("linear:").size()));
  } else {
    throw ValidationError(
        "oracle: expected 'compare', 'retrieve-field:<Type>', or 'linear:<coef>'");
  }

  eval::Scoring scoring;
  if (scoring_name == "exact") {
    scoring = eval::Scoring::kExactMatch;
  } else if (scoring_name == "relative-error") {
    scoring = eval::Scoring::kRelativeError;
  } else if (scoring_name == "consistency") {
    scoring = eval::Scoring::kConsistency;
  } else {
    throw ValidationError("scoring: expected 'exact', 'relative-error', or 'consistency'");
  }

  const eval::EvalOutcome outcome =
      eval::RunEval(corpus, config, oracle, recognizers, scoring, seed);
  PrintWarnings(outcome.warnings);

  auto print_report = [](const char* label, const eval::QualityReport& r) {
    std::cout << label << ": samples=" << r.samples << " p25=" << r.p25 << " p50=" << r.p50
              << " p75=" << r.p75 << "\n";
  };
  print_report("clean (alpha)", outcome.clean);
  print_report("sanitized (beta)", outcome.sanitized);

  if (!out_path.empty()) {
    std::ostringstream csv;
    csv << "side,samples,p25,p50,p75\n";
    csv << "clean," << outcome.clean.samples << "," << outcome.clean.p25 << ","
        << outcome.clean.p50 << "," << outcome.clean.p75 << "\n";
    csv << "sanitized," << outcome.sanitized.samples << "," << outcome.sanitized.p25 << ","
        << outcome.sanitized.p50 << "," << outcome.sanitized.p75 << "\n";
    WriteOutput(out_path, csv.str());
  }
  return 0;
}

int RunFormats(const std::string& config_path) {
  SanitizerConfig config =
      config_path.empty() ? DefaultConfig(Keygen(256)) : LoadConfig(config_path);
  for (const auto& [type, entry] : config.type_registry) {
    std::cout << type.name() << ": category "
              << (entry.category == Category::kCategoryI ? "I" : "II");
    if (entry.category == Category::kCategoryII) {
      std::cout << ", domain [" << entry.domain.lo << ".." << entry.domain.hi << " step "
                << entry.domain.step << "] (k=" << entry.domain.size() << ")";
      std::cout << "\n";
      continue;
    }
    std::cout << ", strategy " << FormatStrategyName(entry.strategy);
    std::optional<double> size;
    switch (entry.strategy) {
      case FormatStrategy::kSkeleton: {
        const auto slots = std::count(entry.skeleton.begin(), entry.skeleton.end(), '#');
        std::cout << " '" << entry.skeleton << "'";
        size = std::pow(10.0, static_cast<double>(slots));
        break;
      }
      case FormatStrategy::kCreditCard:
        std::cout << " '" << entry.skeleton << "' luhn=" << (entry.luhn ? "on" : "off");
        size = 1e15;
        break;
      case FormatStrategy::kDate:
        size = 73049.0;
        break;
      case FormatStrategy::kEnum:
        size = static_cast<double>(entry.enum_values.size());
        break;
      case FormatStrategy::kNameIndex:
        size = 1e6;
        break;
      case FormatStrategy::kNumericRange:
        size = static_cast<double>(entry.range_hi - entry.range_lo + 1);
        break;
      case FormatStrategy::kAlnumFamily:
      case FormatStrategy::kDigitFamily:
      case FormatStrategy::kMoneySkeleton:
        std::cout << " (domain per token length)";
        break;
    }
    if (size.has_value()) {
      std::cout << ", |N|=" << *size;
      if (*size < 100.0) {
        std::cout << "  [warning: tiny domain, weak FPE security]";
      }
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"promptsan: stateless prompt sanitization with format-preserving encryption "
               "and metric-LDP numeric perturbation"};
  app.require_subcommand(1);

  // register
  auto* reg = app.add_subcommand("register", "one-time setup: generate key + default config");
  std::string reg_key = "promptsan.key";
  std::string reg_out = "promptsan.json";
  double reg_epsilon = 1.0;
  int reg_bits = 256;
  reg->add_option("--key", reg_key, "key file to create");
  reg->add_option("--out", reg_out, "config file to create");
  reg->add_option("--epsilon", reg_epsilon, "session privacy budget");
  reg->add_option("--bits", reg_bits, "key size in bits (128 or 256)");

  // shared options helper
  auto add_common = [](CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "config file")->required();
    cmd->add_option("--key", opts.key_path, "key file (overrides config reference)");
    cmd->add_option_function<double>(
        "--epsilon", [&opts](const double& v) { opts.epsilon = v; },
        "override the config's privacy budget");
  };

  // sanitize
  auto* san = app.add_subcommand("sanitize", "sanitize a prompt (stdin or file)");
  CommonOpts san_common;
  add_common(san, san_common);
  std::string san_in, san_psi, san_out, san_report;
  std::optional<std::uint64_t> san_seed;
  san->add_option("input", san_in, "prompt file ('-' or omitted: stdin)");
  san->add_option("--psi", san_psi, "helper string file (JSON)");
  san->add_option_function<std::uint64_t>(
      "--seed", [&san_seed](const std::uint64_t& v) { san_seed = v; },
      "deterministic sampling seed (default: OS entropy)");
  san->add_option("--out", san_out, "sanitized text output ('-': stdout)");
  san->add_option("--report", san_report, "token report path (JSONL)");

  // desanitize
  auto* desan = app.add_subcommand("desanitize", "desanitize an LLM response");
  CommonOpts desan_common;
  add_common(desan, desan_common);
  std::string desan_in, desan_original, desan_out;
  desan->add_option("input", desan_in, "response file ('-' or omitted: stdin)");
  desan->add_option("--original", desan_original,
                    "original prompt file; restricts decryption to its ciphertexts");
  desan->add_option("--out", desan_out, "output path ('-': stdout)");

  // game
  auto* gm = app.add_subcommand("game", "run the distinguishing game on a prompt pair");
  CommonOpts game_common;
  add_common(gm, game_common);
  std::string game_pair, game_adversary = "likelihood", game_out;
  std::int64_t game_trials = 10000;
  std::uint64_t game_seed = 1;
  double game_lambda = 0.0;
  gm->add_option("--pair", game_pair, "two prompts separated by a '---' line")->required();
  gm->add_option("--trials", game_trials, "number of trials");
  gm->add_option("--seed", game_seed, "master seed");
  gm->add_option("--adversary", game_adversary, "'likelihood' or 'first-byte'");
  gm->add_option("--lambda", game_lambda, "NER leakage percent [0..100]");
  gm->add_option("--out", game_out, "CSV output path");

  // eval
  auto* ev = app.add_subcommand("eval", "utility evaluation against a mock oracle");
  CommonOpts eval_common;
  add_common(ev, eval_common);
  std::string eval_corpus, eval_oracle = "compare", eval_scoring = "exact", eval_out;
  std::uint64_t eval_seed = 1;
  ev->add_option("--corpus", eval_corpus, "JSONL corpus file")->required();
  ev->add_option("--oracle", eval_oracle,
                 "'compare', 'retrieve-field:<Type>', or 'linear:<coef>'");
  ev->add_option("--scoring", eval_scoring, "'exact', 'relative-error', or 'consistency'");
  ev->add_option("--seed", eval_seed, "master seed");
  ev->add_option("--out", eval_out, "CSV output path");

  // formats
  auto* fm = app.add_subcommand("formats", "list registered formats and domains");
  std::string fm_config;
  fm->add_option("--config", fm_config, "config file (default: builtin registry)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
  }

  try {
    if (reg->parsed()) return RunRegister(reg_key, reg_out, reg_epsilon, reg_bits);
    if (san->parsed()) {
      return RunSanitize(san_common, san_in, san_psi, san_seed, san_out, san_report);
    }
    if (desan->parsed()) {
      return RunDesanitize(desan_common, desan_in, desan_original, desan_out);
    }
    if (gm->parsed()) {
      return RunGame(game_common, game_pair, game_trials, game_seed, game_adversary, game_lambda,
                     game_out);
    }
    if (ev->parsed()) {
      return RunEvalCommand(eval_common, eval_corpus, eval_oracle, eval_scoring, eval_seed,
                            eval_out);
    }
    if (fm->parsed()) return RunFormats(fm_config);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PsiValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LeakageMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
