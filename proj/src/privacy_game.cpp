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

#include "promptsan/privacy_game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "promptsan/mldp.hpp"
#include "promptsan/utf8.hpp"

namespace promptsan::game {
namespace {

// Fixed stream labels for per-trial substreams.
constexpr std::uint64_t kKeyStream = 0x6b65795f73747265;  // "key_stre"
constexpr std::uint64_t kCoinStream = 0x636f696e5f737472;
constexpr std::uint64_t kNoiseStream = 0x6e6f6973655f7374;

// splitmix64: decorrelates (master_seed, trial, stream) into a seed.
std::uint64_t Substream(std::uint64_t master, std::uint64_t trial, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1) + stream;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SanitizerKey TrialKey(std::mt19937_64& rng, int key_bits) {
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(key_bits / 8));
  for (std::size_t i = 0; i < bytes.size(); i += 8) {
    const std::uint64_t word = rng();
    for (std::size_t j = 0; j < 8 && i + j < bytes.size(); ++j) {
      bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
    }
  }
  return SanitizerKey::FromBytes(std::move(bytes));
}

struct AnnotatedPair {
  TypedSequence typed0;
  TypedSequence typed1;
  pipeline::HelperString psi0;
  pipeline::HelperString psi1;
  std::int64_t t0 = 0;
  std::int64_t t1 = 0;
};

AnnotatedPair Prepare(const std::string& p0, const std::string& p1,
                      const SanitizerConfig& config,
                      const annotate::RecognizerSet& recognizers) {
  if (!(Leakage(p0, recognizers, &config) == Leakage(p1, recognizers, &config))) {
    throw LeakageMismatchError("prompt pair has unequal leakage; game returns bottom");
  }
  AnnotatedPair pair;
  pair.typed0 = annotate::Annotate(p0, recognizers);
  pair.typed1 = annotate::Annotate(p1, recognizers);
  auto pre0 = pipeline::Preprocess(pair.typed0, config, nullptr);
  auto pre1 = pipeline::Preprocess(pair.typed1, config, nullptr);
  pair.psi0 = std::move(pre0.psi);
  pair.psi1 = std::move(pre1.psi);
  pair.t0 = pre0.budget_token_count;
  pair.t1 = pre1.budget_token_count;
  return pair;
}

}  // namespace

LeakageDescriptor Leakage(const std::string& prompt, const annotate::RecognizerSet& recognizers,
                          const SanitizerConfig* config) {
  const TypedSequence typed = annotate::Annotate(prompt, recognizers);
  LeakageDescriptor descriptor;
  std::string skeleton;
  std::size_t cursor = 0;
  for (const TypedToken& token : typed.tokens) {
    skeleton += utf8::Substr(prompt, cursor, token.span.begin - cursor);
    skeleton += "[ ]";
    cursor = token.span.end;
    descriptor.type_sequence.push_back(token.type.name());
    if (config != nullptr) {
      descriptor.category_sequence.push_back(config->CategoryFor(token.type));
    }
  }
  skeleton += utf8::Substr(prompt, cursor, utf8::Length(prompt) - cursor);
  descriptor.skeleton = std::move(skeleton);
  return descriptor;
}

GameResult PlayGame(const std::string& p0, const std::string& p1, const SanitizerConfig& config,
                    const annotate::RecognizerSet& recognizers, const GameOptions& options,
                    const Adversary& adversary) {
  const AnnotatedPair pair = Prepare(p0, p1, config, recognizers);

  GameResult result;
  result.trials = options.trials;
  result.exact_tv_bound = ExactTvBound(p0, p1, config, recognizers);

  for (std::int64_t trial = 0; trial < options.trials; ++trial) {
    std::mt19937_64 key_rng(Substream(options.master_seed, static_cast<std::uint64_t>(trial),
                                      kKeyStream));
    std::mt19937_64 coin_rng(Substream(options.master_seed, static_cast<std::uint64_t>(trial),
                                       kCoinStream));
    std::mt19937_64 noise_rng(Substream(options.master_seed, static_cast<std::uint64_t>(trial),
                                        kNoiseStream));

    SanitizerConfig trial_config = config;  // fresh key per trial: Initialize runs S()
    trial_config.key = TrialKey(key_rng, options.key_bits);

    const int b = static_cast<int>(coin_rng() & 1);
    const TypedSequence& typed = b == 0 ? pair.typed0 : pair.typed1;
    const pipeline::HelperString& psi = b == 0 ? pair.psi0 : pair.psi1;
    const pipeline::SanitizedPrompt sanitized =
        pipeline::Sanitize(trial_config, typed, psi, noise_rng);

    const int guess = adversary(sanitized);
    if (guess == b) ++result.wins;
  }

  const double p_hat =
      static_cast<double>(result.wins) / static_cast<double>(std::max<std::int64_t>(1, result.trials));
  result.empirical_advantage = 2.0 * p_hat - 1.0;
  result.advantage_std_error =
      2.0 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(std::max<std::int64_t>(1, result.trials)));
  return result;
}

std::optional<double> ExactTvBound(const std::string& p0, const std::string& p1,
                                   const SanitizerConfig& config,
                                   const annotate::RecognizerSet& recognizers) {
  const AnnotatedPair pair = Prepare(p0, p1, config, recognizers);
  // Category I differences contribute only the negligible cipher term; the
  // numeric reference bound sums the per-token TVs at the per-token budget.
  double bound = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < pair.typed0.tokens.size(); ++i) {
    const TypedToken& a = pair.typed0.tokens[i];
    const TypedToken& b = pair.typed1.tokens[i];
    if (config.CategoryFor(a.type) != Category::kCategoryII) continue;
    if (a.text == b.text) continue;
    const mldp::IntegerDomain& domain = config.EntryFor(a.type).domain;
    const std::int64_t xa = domain.Clamp(pipeline::ParseNumeric(a.text).ToDouble());
    const std::int64_t xb = domain.Clamp(pipeline::ParseNumeric(b.text).ToDouble());
    if (xa == xb) continue;
    const double eps = mldp::SplitBudget(config.epsilon_total, pair.t0);
    bound += mldp::TotalVariation(mldp::ComputeDistribution(xa, eps, domain),
                                  mldp::ComputeDistribution(xb, eps, domain));
    any = true;
  }
  if (!any) return std::nullopt;
  return bound;
}

Adversary LikelihoodAdversary(const std::string& p0, const std::string& p1,
                              const SanitizerConfig& config,
                              const annotate::RecognizerSet& recognizers) {
  const AnnotatedPair pair = Prepare(p0, p1, config, recognizers);

  // First differing Category II token index.
  std::optional<std::size_t> target;
  for (std::size_t i = 0; i < pair.typed0.tokens.size(); ++i) {
    if (config.CategoryFor(pair.typed0.tokens[i].type) != Category::kCategoryII) continue;
    if (pair.typed0.tokens[i].text != pair.typed1.tokens[i].text) {
      target = i;
      break;
    }
  }
  if (!target.has_value()) {
    // Nothing to distinguish on; guess 0.
    return [](const pipeline::SanitizedPrompt&) { return 0; };
  }

  const std::size_t d = *target;
  const mldp::IntegerDomain domain = config.EntryFor(pair.typed0.tokens[d].type).domain;
  const double eps = mldp::SplitBudget(config.epsilon_total, pair.t0);
  const std::int64_t x0 = domain.Clamp(pipeline::ParseNumeric(pair.typed0.tokens[d].text).ToDouble());
  const std::int64_t x1 = domain.Clamp(pipeline::ParseNumeric(pair.typed1.tokens[d].text).ToDouble());
  const mldp::Distribution dist0 = mldp::ComputeDistribution(x0, eps, domain);
  const mldp::Distribution dist1 = mldp::ComputeDistribution(x1, eps, domain);

  return [d, domain, dist0, dist1](const pipeline::SanitizedPrompt& sanitized) {
    if (d >= sanitized.token_report.size()) return 0;
    const pipeline::TokenRecord& record = sanitized.token_report[d];
    const std::string observed = utf8::Substr(sanitized.text, record.span_out.begin,
                                              record.span_out.end - record.span_out.begin);
    std::int64_t index;
    try {
      index = domain.IndexOf(
          domain.Clamp(pipeline::ParseNumeric(observed).ToDouble()));
    } catch (const Error&) {
      return 0;
    }
    const double l0 = dist0.probs[static_cast<std::size_t>(index)];
    const double l1 = dist1.probs[static_cast<std::size_t>(index)];
    return l0 >= l1 ? 0 : 1;
  };
}

Adversary FirstByteAdversary(const std::string& p0, const std::string& p1) {
  std::size_t k = 0;
  while (k < p0.size() && k < p1.size() && p0[k] == p1[k]) ++k;
  const char c0 = k < p0.size() ? p0[k] : '\0';
  const char c1 = k < p1.size() ? p1[k] : '\0';
  return [k, c0, c1](const pipeline::SanitizedPrompt& sanitized) {
    if (k >= sanitized.text.size()) return 0;
    if (sanitized.text[k] == c0) return 0;
    if (sanitized.text[k] == c1) return 1;
    return 0;
  };
}

std::string ApplyNerLeakage(const std::string& p0, const std::string& p1, double lambda_pct,
                            const annotate::RecognizerSet& recognizers, std::mt19937_64& rng) {
  if (lambda_pct < 0.0 || lambda_pct > 100.0) {
    throw ValidationError("lambda_pct: must be within [0, 100]");
  }
  if (!(Leakage(p0, recognizers) == Leakage(p1, recognizers))) {
    throw LeakageMismatchError("prompt pair has unequal leakage");
  }
  const TypedSequence typed0 = annotate::Annotate(p0, recognizers);
  const TypedSequence typed1 = annotate::Annotate(p1, recognizers);
  const std::size_t total = typed1.tokens.size();
  const std::size_t leak =
      static_cast<std::size_t>(std::ceil(lambda_pct / 100.0 * static_cast<double>(total)));
  if (leak == 0 || total == 0) return p1;

  // Uniform sample of `leak` distinct positions (partial Fisher-Yates).
  std::vector<std::size_t> positions(total);
  std::iota(positions.begin(), positions.end(), 0);
  for (std::size_t i = 0; i < leak; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(positions[i], positions[j]);
  }
  positions.resize(leak);
  std::sort(positions.begin(), positions.end());

  // Copy p0's values into p1 at the chosen spans, right to left so byte
  // offsets computed against the untouched prefix stay valid.
  std::string out = p1;
  for (std::size_t r = positions.size(); r-- > 0;) {
    const TypedToken& dst = typed1.tokens[positions[r]];
    const TypedToken& src = typed0.tokens[positions[r]];
    const std::size_t begin = utf8::ByteOffset(p1, dst.span.begin);
    const std::size_t end = utf8::ByteOffset(p1, dst.span.end);
    out.replace(begin, end - begin, src.text);
  }
  return out;
}

}  // namespace promptsan::game
