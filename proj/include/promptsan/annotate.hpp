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

#ifndef PROMPTSAN_ANNOTATE_HPP_
#define PROMPTSAN_ANNOTATE_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "promptsan/config.hpp"
#include "promptsan/types.hpp"

// The type annotator: finds sensitive tokens and their types via pluggable
// recognizers. Pattern recognizers are pure and deterministic; the external
// NER adapter contributes surface strings that are matched back to spans
// here. Overlaps resolve by priority, then leftmost-longest.

namespace promptsan::annotate {

// A pattern recognizer. If the regular expression has a capture group, the
// token is group 1; otherwise the whole match. Priorities must be unique
// within a recognizer set.
struct Recognizer {
  SensitiveType type;
  std::string pattern;  // ECMAScript syntax
  int priority = 0;
};

using RecognizerSet = std::vector<Recognizer>;

// Builtin context-aware patterns for the default registry's types (Name has
// no pattern entry; it is NER-backed). Annotation with this pack encodes
// context dependence: "My age is 53 years" types 53 as Age while
// "53 Broadway Street" stays nonsensitive.
RecognizerSet DefaultPatternPack();

// Pattern pack file: JSON list of {type, pattern, priority}.
RecognizerSet LoadPatternPack(const std::filesystem::path& path);

// Runs every pattern recognizer over the prompt and returns the sorted,
// non-overlapping typed sequence. Deterministic; spans are character
// offsets.
TypedSequence Annotate(const std::string& prompt, const RecognizerSet& recognizers);

// Entity label -> surface strings, as replied by an LLM NER call.
using NerEntityMap = std::map<std::string, std::vector<std::string>>;

// Extracts the first well-formed dictionary-of-lists from an LLM reply,
// tolerating surrounding prose and Python-style quoting. Throws
// NerParseError when no parseable structure exists.
NerEntityMap ParseNerResponse(const std::string& raw, const std::string& expected_entity);

// Locates each reported surface string in the prompt and merges the
// resulting tokens (at `priority`) into `existing`. Every occurrence of a
// reported surface is marked; surfaces that never occur are dropped into
// `warnings`.
TypedSequence MergeNerMatches(const std::string& prompt, const SensitiveType& type,
                              const std::vector<std::string>& surfaces, int priority,
                              const TypedSequence& existing, std::vector<std::string>* warnings);

// Registry lookup; throws UnknownTypeError for unregistered types.
Category CategoryOf(const SensitiveType& type, const SanitizerConfig& config);

}  // namespace promptsan::annotate

#endif  // PROMPTSAN_ANNOTATE_HPP_
