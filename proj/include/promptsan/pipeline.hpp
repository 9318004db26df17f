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

#ifndef PROMPTSAN_PIPELINE_HPP_
#define PROMPTSAN_PIPELINE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "promptsan/annotate.hpp"
#include "promptsan/config.hpp"
#include "promptsan/mldp.hpp"
#include "promptsan/rational.hpp"
#include "promptsan/types.hpp"

// The prompt sanitizer proper: preprocessing (helper-string validation,
// budget token counting), per-token sanitization (FPE for Category I,
// mLDP for Category II roots), post-processing (functional dependencies and
// repetition groups), and response desanitization. Every call is
// self-contained: nothing survives a call except its return value, so
// sanitize/desanitize sessions compose in any order given only the key.

namespace promptsan::pipeline {

// A derivation rule for one dependent token.
struct Transform {
  enum class Kind {
    kIdentity,     // dependent := determinant
    kYearFromAge,  // dependent := reference_year - determinant
    kScale,        // dependent := factor * determinant
    kDifference,   // dependent := minuend - subtrahend
    kExpression,   // dependent := arithmetic expression over $k references
  };

  Kind kind = Kind::kIdentity;
  std::size_t determinant = 0;  // identity / year-from-age / scale
  std::size_t minuend = 0;
  std::size_t subtrahend = 0;
  Rational factor = 1;
  std::string expression;

  // Token indices this transform reads.
  std::vector<std::size_t> Inputs() const;
};

struct Dependency {
  std::size_t dependent = 0;
  Transform transform;
};

// Auxiliary knowledge about the sensitive tokens of one prompt: which
// indices repeat the same ground-truth value, and which are functionally
// derived from others. Dependents and repeated occurrences beyond the first
// never consume privacy budget; only DAG roots are noised.
struct HelperString {
  std::vector<std::vector<std::size_t>> repetition_groups;
  std::vector<Dependency> dependencies;

  bool Empty() const { return repetition_groups.empty() && dependencies.empty(); }
};

// Helper-string file format: {"groups": [[i, j], ...], "deps": [{...}]}.
HelperString HelperStringFromJson(const std::string& json_text);
HelperString LoadHelperString(const std::filesystem::path& path);

struct PreprocessResult {
  HelperString psi;                      // user psi + auto-detected duplicate groups
  std::int64_t budget_token_count = 0;   // t: Category II roots
  std::vector<std::string> warnings;
};

// Validates the user helper string against the typed sequence (acyclic,
// in-range, one rule per dependent, Category II determinants/dependents),
// merges in automatic exact-duplicate repetition groups, and counts t.
PreprocessResult Preprocess(const TypedSequence& typed_seq, const SanitizerConfig& config,
                            const HelperString* user_psi);

// Per-token audit record. Carries no plaintext and no key material.
struct TokenRecord {
  Span span_in;   // character span in the source prompt
  Span span_out;  // character span in the sanitized text
  std::string type_name;
  Category category = Category::kCategoryI;
  std::string mechanism;  // "fpe" | "mldp" | "copy" | "derived"
  std::optional<double> epsilon;       // per-token budget, mldp roots only
  std::int64_t epsilon_denominator = 0;  // t, so the budget sum audits exactly
};

struct SanitizedPrompt {
  std::string text;
  std::vector<TokenRecord> token_report;
  std::vector<std::string> warnings;
};

// Test seam: replaces the mLDP draw for Category II roots.
using SamplerOverride =
    std::function<std::int64_t(std::int64_t x, double epsilon, const mldp::IntegerDomain& domain,
                               std::mt19937_64& rng)>;

struct SanitizeOptions {
  SamplerOverride sampler;  // empty -> mldp::Sample
};

// Sanitizes a typed sequence under `psi` (as returned by Preprocess).
// Category I tokens are enciphered; Category II roots are perturbed with
// epsilon_total/t; dependents and copies are derived in post-processing;
// nonsensitive text passes through byte-identical.
SanitizedPrompt Sanitize(const SanitizerConfig& config, const TypedSequence& typed_seq,
                         const HelperString& psi, std::mt19937_64& rng,
                         const SanitizeOptions& options = {});

// Evaluates a transform over the emitted numeric token values (exact
// rational arithmetic). Exposed so derivations are testable in isolation.
Rational EvaluateTransform(const Transform& transform,
                           const std::vector<std::optional<Rational>>& token_values,
                           const SanitizerConfig& config);

struct DesanitizedItem {
  Span span;  // span in the desanitized text
  std::string type_name;
  bool decrypted = false;
  // "prompt" when the ciphertext was recomputed from the original prompt,
  // "unknown" when no original was available, "foreign" when the token never
  // appeared in the original and was passed through.
  std::string provenance;
};

struct DesanitizeResult {
  std::string text;
  std::vector<DesanitizedItem> items;
  std::vector<std::string> warnings;
};

// Reverses sanitization on an LLM response. Category I tokens are decrypted;
// Category II and nonsensitive tokens pass through. When `original_prompt`
// is supplied, its ciphertexts are recomputed on the fly and only tokens
// matching one of them are decrypted.
DesanitizeResult Desanitize(const SanitizerConfig& config, const std::string& response,
                            const std::optional<std::string>& original_prompt,
                            const annotate::RecognizerSet& recognizers);

// Number rendering skeleton of a numeric token (digit grouping and decimal
// places), mirrored onto perturbed and derived values.
struct NumberSkeleton {
  bool grouped = false;
  char group_separator = ',';
  int decimal_places = 0;
};

NumberSkeleton SkeletonOf(std::string_view numeric_text);
std::string RenderNumber(const Rational& value, const NumberSkeleton& skeleton,
                         std::vector<std::string>* warnings = nullptr);

// Parses a Category II token's numeric text ("5,000" / "6.07") exactly.
Rational ParseNumeric(std::string_view text);

}  // namespace promptsan::pipeline

#endif  // PROMPTSAN_PIPELINE_HPP_
