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

#ifndef PROMPTSAN_PRIVACY_GAME_HPP_
#define PROMPTSAN_PRIVACY_GAME_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "promptsan/annotate.hpp"
#include "promptsan/config.hpp"
#include "promptsan/pipeline.hpp"

// The distinguishing game: an adversary submits two prompts with equal
// leakage, receives the sanitization of one chosen by a fair coin under a
// fresh key, and guesses which. Empirical advantage is measured over many
// independent trials with fresh keys and fresh mechanism randomness; for
// numeric-token differences, the exact total-variation bound is computed as
// the reference.

namespace promptsan::game {

// What a sanitized prompt legitimately reveals: the nonsensitive skeleton
// and the token type/category sequence. Two prompts are game-eligible iff
// their descriptors are equal.
struct LeakageDescriptor {
  std::string skeleton;  // sensitive spans blanked with "[ ]"
  std::vector<std::string> type_sequence;
  std::vector<Category> category_sequence;

  friend bool operator==(const LeakageDescriptor&, const LeakageDescriptor&) = default;
};

// Deterministic descriptor of a prompt. Categories are filled from the
// config registry when one is supplied.
LeakageDescriptor Leakage(const std::string& prompt, const annotate::RecognizerSet& recognizers,
                          const SanitizerConfig* config = nullptr);

struct GameResult {
  std::int64_t trials = 0;
  std::int64_t wins = 0;
  double empirical_advantage = 0.0;   // 2 * wins/trials - 1
  double advantage_std_error = 0.0;   // 2 * sqrt(p(1-p)/trials)
  std::optional<double> exact_tv_bound;  // sum of per-token TVs, when computable
};

// A pure decision function from a sanitized prompt to a guess bit.
using Adversary = std::function<int(const pipeline::SanitizedPrompt&)>;

struct GameOptions {
  std::int64_t trials = 10000;
  std::uint64_t master_seed = 1;
  int key_bits = 256;
};

// Runs the Initialize/Sanitize/Finalize loop `trials` times. Each trial owns
// a deterministic substream of the master seed (fresh key, fresh coin, fresh
// mechanism randomness), so results reproduce exactly and trials could run
// in any order. Throws LeakageMismatchError for ineligible pairs.
GameResult PlayGame(const std::string& p0, const std::string& p1, const SanitizerConfig& config,
                    const annotate::RecognizerSet& recognizers, const GameOptions& options,
                    const Adversary& adversary);

// Exact sum of per-token total-variation distances over the Category II
// tokens where the prompts differ (the hybrid-argument reference bound).
// Empty when the pair differs in no Category II token.
std::optional<double> ExactTvBound(const std::string& p0, const std::string& p1,
                                   const SanitizerConfig& config,
                                   const annotate::RecognizerSet& recognizers);

// Likelihood-ratio adversary on the first differing Category II token;
// optimal when that token is the only difference.
Adversary LikelihoodAdversary(const std::string& p0, const std::string& p1,
                              const SanitizerConfig& config,
                              const annotate::RecognizerSet& recognizers);

// Naive baseline: compares the first differing character position.
Adversary FirstByteAdversary(const std::string& p0, const std::string& p1);

// NER-leakage game construction: replaces ceil(lambda_pct/100 * #sensitive)
// uniformly chosen token positions of p1 with p0's values, modeling an
// adversary that already learned that fraction of the sensitive tokens.
std::string ApplyNerLeakage(const std::string& p0, const std::string& p1, double lambda_pct,
                            const annotate::RecognizerSet& recognizers, std::mt19937_64& rng);

}  // namespace promptsan::game

#endif  // PROMPTSAN_PRIVACY_GAME_HPP_
