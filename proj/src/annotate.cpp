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

#include "promptsan/annotate.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <regex>
#include <set>

#include <json.hpp>

#include "promptsan/utf8.hpp"

namespace promptsan::annotate {
namespace {

using nlohmann::json;

struct Candidate {
  SensitiveType type;
  Span span;  // character coordinates
  int priority = 0;
};

// Priority then leftmost then longest; the stable selection order.
bool CandidateOrder(const Candidate& a, const Candidate& b) {
  if (a.priority != b.priority) return a.priority > b.priority;
  if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
  return a.span.length() > b.span.length();
}

bool Overlaps(const Span& a, const Span& b) { return a.begin < b.end && b.begin < a.end; }

std::vector<Candidate> CollectPatternCandidates(const std::string& prompt,
                                                const RecognizerSet& recognizers) {
  std::vector<Candidate> candidates;
  for (const Recognizer& rec : recognizers) {
    if (rec.pattern.empty()) continue;
    std::regex re;
    try {
      re.assign(rec.pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw ValidationError("recognizer " + rec.type.name() + ": pattern does not compile: " +
                            e.what());
    }
    auto begin = std::sregex_iterator(prompt.begin(), prompt.end(), re);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      const std::smatch& m = *it;
      const bool use_group = m.size() > 1 && m[1].matched;
      const std::size_t byte_begin =
          static_cast<std::size_t>((use_group ? m.position(1) : m.position(0)));
      const std::size_t byte_len =
          static_cast<std::size_t>((use_group ? m.length(1) : m.length(0)));
      Candidate c;
      c.type = rec.type;
      c.priority = rec.priority;
      c.span.begin = utf8::CharOffset(prompt, byte_begin);
      c.span.end = utf8::CharOffset(prompt, byte_begin + byte_len);
      candidates.push_back(std::move(c));
    }
  }
  return candidates;
}

TypedSequence SelectCandidates(const std::string& prompt, std::vector<Candidate> candidates) {
  std::sort(candidates.begin(), candidates.end(), CandidateOrder);
  std::vector<Candidate> accepted;
  for (const Candidate& c : candidates) {
    const bool clash = std::any_of(accepted.begin(), accepted.end(),
                                   [&c](const Candidate& a) { return Overlaps(a.span, c.span); });
    if (!clash) accepted.push_back(c);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const Candidate& a, const Candidate& b) { return a.span.begin < b.span.begin; });

  TypedSequence seq;
  seq.source = prompt;
  for (const Candidate& c : accepted) {
    TypedToken token;
    token.type = c.type;
    token.span = c.span;
    token.text = utf8::Substr(prompt, c.span.begin, c.span.length());
    seq.tokens.push_back(std::move(token));
  }
  return seq;
}

void CheckUniquePriorities(const RecognizerSet& recognizers) {
  std::set<int> seen;
  for (const Recognizer& rec : recognizers) {
    if (!seen.insert(rec.priority).second) {
      throw ValidationError("recognizer set: duplicate priority " +
                            std::to_string(rec.priority));
    }
  }
}

const char kMoneyValue[] = "([0-9][0-9,]*(?:\\.[0-9]+)?)";

}  // namespace

RecognizerSet DefaultPatternPack() {
  using Kind = SensitiveType::Kind;
  RecognizerSet pack;
  auto add = [&pack](Kind kind, std::string pattern, int priority) {
    pack.push_back({SensitiveType(kind), std::move(pattern), priority});
  };

  add(Kind::kSsn, R"(\b\d{3}-\d{2}-\d{4}\b)", 100);
  add(Kind::kCreditCard, R"(\b\d{4} \d{4} \d{4} \d{4}\b)", 95);
  add(Kind::kPhone, R"(\b\d{3}-\d{3}-\d{4}\b)", 90);
  add(Kind::kDate, R"(\b\d{2}/\d{2}/\d{4}\b)", 85);
  add(Kind::kPassword, R"([Pp]assword\s*(?:is|was|:)?\s*([0-9A-Za-z]{4,21})\b)", 75);
  add(Kind::kBankAccount,
      R"((?:[Aa]ccount(?:\s+[Nn]umber)?|A/[Cc])\s*(?:is|was|:)?\s*(\d{6,17})\b)", 70);

  add(Kind::kMoney, std::string(R"(\$\s?)") + kMoneyValue, 60);
  add(Kind::kMoney,
      std::string(
          R"((?:[Ss]alary|[Ii]ncome|[Bb]alance|[Cc]ost|[Pp]rice|[Dd]eductions?|[Ss]avings)\s+(?:of|is|was|:)\s+\$?\s?)") +
          kMoneyValue,
      59);
  add(Kind::kMoney, std::string(R"((?:earns?|earning|earned|costs?|paid|pays?)\s+\$?\s?)") + kMoneyValue,
      58);

  // Context encodes type: a bare two-digit number is not an age, but
  // "age is 53" / "53 years old" / "I am 53" is.
  add(Kind::kAge, R"([Aa]ge\s*(?:is|was|of|:)\s*(\d{1,3})\b)", 50);
  add(Kind::kAge, R"((?:\bI\s+am|\bI'm|\baged)\s+(\d{1,3})\b)", 49);
  add(Kind::kAge, R"(\b(\d{1,3})\s+years?\s+old\b)", 48);

  add(Kind::kZipcode, R"([Zz]ip\s?(?:[Cc]ode)?\s*(?:is|was|:)?\s*(\d{5})\b)", 40);
  add(Kind::kSex, R"((?:[Ss]ex|[Gg]ender)\s*(?:is|was|:)?\s*([Mm]ale|[Ff]emale|M\b|F\b))", 30);

  return pack;
}

RecognizerSet LoadPatternPack(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pattern pack: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("pattern pack " + path.string() + ": " + e.what());
  }
  if (!doc.is_array()) throw ParseError("pattern pack: expected a JSON list");
  RecognizerSet pack;
  for (const auto& item : doc) {
    Recognizer rec;
    rec.type = SensitiveType::FromName(item.value("type", ""));
    rec.pattern = item.value("pattern", "");
    rec.priority = item.value("priority", 0);
    pack.push_back(std::move(rec));
  }
  CheckUniquePriorities(pack);
  return pack;
}

TypedSequence Annotate(const std::string& prompt, const RecognizerSet& recognizers) {
  if (recognizers.empty()) throw ValidationError("recognizer set: must be non-empty");
  CheckUniquePriorities(recognizers);
  return SelectCandidates(prompt, CollectPatternCandidates(prompt, recognizers));
}

namespace {

// Extracts balanced {...} blocks, outermost only.
std::vector<std::string> BraceBlocks(const std::string& raw) {
  std::vector<std::string> blocks;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '{') {
      if (depth == 0) start = i;
      ++depth;
    } else if (raw[i] == '}') {
      if (depth > 0 && --depth == 0) blocks.push_back(raw.substr(start, i - start + 1));
    }
  }
  return blocks;
}

bool TryParseEntityMap(const std::string& block, NerEntityMap* out) {
  json doc = json::parse(block, nullptr, false);
  if (doc.is_discarded()) {
    // Python-style dict: swap single quotes for double and retry.
    std::string converted = block;
    std::replace(converted.begin(), converted.end(), '\'', '"');
    doc = json::parse(converted, nullptr, false);
  }
  if (doc.is_discarded() || !doc.is_object()) return false;
  NerEntityMap map;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_array()) return false;
    std::vector<std::string>& list = map[key];
    for (const auto& item : value) {
      if (item.is_string()) {
        list.push_back(item.get<std::string>());
      } else if (item.is_number()) {
        list.push_back(item.dump());
      } else {
        return false;
      }
    }
  }
  *out = std::move(map);
  return true;
}

}  // namespace

NerEntityMap ParseNerResponse(const std::string& raw, const std::string& expected_entity) {
  for (const std::string& block : BraceBlocks(raw)) {
    NerEntityMap map;
    if (TryParseEntityMap(block, &map)) return map;
  }
  throw NerParseError("no dictionary-of-lists for entity '" + expected_entity +
                      "' in NER reply");
}

TypedSequence MergeNerMatches(const std::string& prompt, const SensitiveType& type,
                              const std::vector<std::string>& surfaces, int priority,
                              const TypedSequence& existing, std::vector<std::string>* warnings) {
  std::vector<Candidate> candidates;
  for (const TypedToken& token : existing.tokens) {
    // Existing tokens keep an arbitrarily high rank so NER never displaces
    // a pattern match.
    candidates.push_back({token.type, token.span, std::numeric_limits<int>::max()});
  }
  std::set<std::string> seen;
  for (const std::string& surface : surfaces) {
    if (surface.empty() || !seen.insert(surface).second) continue;
    std::size_t byte_pos = prompt.find(surface);
    if (byte_pos == std::string::npos) {
      if (warnings != nullptr) {
        warnings->push_back("NER surface '" + surface + "' not found in prompt; dropped");
      }
      continue;
    }
    // Every occurrence is marked: repeated PII stays protected even when
    // NER reported fewer copies.
    while (byte_pos != std::string::npos) {
      Candidate c;
      c.type = type;
      c.priority = priority;
      c.span.begin = utf8::CharOffset(prompt, byte_pos);
      c.span.end = utf8::CharOffset(prompt, byte_pos + surface.size());
      candidates.push_back(std::move(c));
      byte_pos = prompt.find(surface, byte_pos + surface.size());
    }
  }
  return SelectCandidates(prompt, std::move(candidates));
}

Category CategoryOf(const SensitiveType& type, const SanitizerConfig& config) {
  return config.CategoryFor(type);
}

}  // namespace promptsan::annotate
