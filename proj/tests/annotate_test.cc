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

#include <gtest/gtest.h>

#include "promptsan/utf8.hpp"

namespace promptsan::annotate {
namespace {

using Kind = SensitiveType::Kind;

TEST(AnnotateTest, FindsSsnWithExactSpan) {
  const std::string prompt = "My SSN is 055-46-6168";
  const TypedSequence seq = Annotate(prompt, DefaultPatternPack());
  ASSERT_EQ(seq.tokens.size(), 1u);
  EXPECT_EQ(seq.tokens[0].type.kind(), Kind::kSsn);
  EXPECT_EQ(seq.tokens[0].text, "055-46-6168");
  EXPECT_EQ(seq.tokens[0].span.begin, 10u);
  EXPECT_EQ(seq.tokens[0].span.end, 21u);
}

TEST(AnnotateTest, EmptyPromptYieldsEmptySequence) {
  const TypedSequence seq = Annotate("", DefaultPatternPack());
  EXPECT_TRUE(seq.tokens.empty());
  EXPECT_EQ(seq.Reconstruct(), "");
}

// Context decides the type: the first 53 is an age, the second is a street
// number and stays nonsensitive.
TEST(AnnotateTest, ContextDependentAgeVersusStreetNumber) {
  const std::string prompt = "My age is 53 years. I stay at 53 Broadway Street.";
  const TypedSequence seq = Annotate(prompt, DefaultPatternPack());
  ASSERT_EQ(seq.tokens.size(), 1u);
  EXPECT_EQ(seq.tokens[0].type.kind(), Kind::kAge);
  EXPECT_EQ(seq.tokens[0].span.begin, 10u);
  EXPECT_EQ(seq.tokens[0].text, "53");
}

TEST(AnnotateTest, SpanSoundnessOnMultibyteText) {
  const std::string prompt = "Müller überweist $1,200 an Frau Schröder, SSN 055-46-6168.";
  const TypedSequence seq = Annotate(prompt, DefaultPatternPack());
  ASSERT_EQ(seq.tokens.size(), 2u);
  for (const TypedToken& token : seq.tokens) {
    EXPECT_EQ(token.text, utf8::Substr(prompt, token.span.begin, token.span.length()));
  }
  EXPECT_EQ(seq.tokens[0].text, "1,200");
  EXPECT_EQ(seq.tokens[1].text, "055-46-6168");
  EXPECT_EQ(seq.Reconstruct(), prompt);
}

TEST(AnnotateTest, DeterministicAcrossRuns) {
  const std::string prompt =
      "Call 555-123-4567, card 4532 0151 1283 0366, $99.50 due 01/15/2024, zip 10001.";
  const RecognizerSet pack = DefaultPatternPack();
  const TypedSequence a = Annotate(prompt, pack);
  const TypedSequence b = Annotate(prompt, pack);
  ASSERT_EQ(a.tokens.size(), b.tokens.size());
  for (std::size_t i = 0; i < a.tokens.size(); ++i) {
    EXPECT_EQ(a.tokens[i].text, b.tokens[i].text);
    EXPECT_EQ(a.tokens[i].span, b.tokens[i].span);
    EXPECT_EQ(a.tokens[i].type, b.tokens[i].type);
  }
}

TEST(AnnotateTest, OverlapResolvedByPriorityThenLength) {
  RecognizerSet pack;
  pack.push_back({SensitiveType::Custom("Low"), R"(\d{4})", 1});
  pack.push_back({SensitiveType::Custom("High"), R"(\d{2})", 2});
  const TypedSequence seq = Annotate("code 1234", pack);
  // High priority claims "12" first; "34" is still free for High's second
  // match; Low's overlapping 4-digit match loses.
  ASSERT_EQ(seq.tokens.size(), 2u);
  EXPECT_EQ(seq.tokens[0].type.name(), "High");
  EXPECT_EQ(seq.tokens[0].text, "12");
  EXPECT_EQ(seq.tokens[1].text, "34");

  RecognizerSet tie;
  tie.push_back({SensitiveType::Custom("Short"), R"(ab)", 1});
  tie.push_back({SensitiveType::Custom("Long"), R"(abc)", 1});
  EXPECT_THROW(Annotate("abc", tie), ValidationError);  // duplicate priority
  tie[1].priority = 0;
  const TypedSequence seq2 = Annotate("abc", tie);
  ASSERT_EQ(seq2.tokens.size(), 1u);
  EXPECT_EQ(seq2.tokens[0].type.name(), "Short");  // higher priority wins
}

TEST(AnnotateTest, RequiresNonEmptyRecognizerSet) {
  EXPECT_THROW(Annotate("text", {}), ValidationError);
}

TEST(ParseNerResponseTest, PythonStyleDictOfLists) {
  const NerEntityMap map = ParseNerResponse("{'Money': ['121.445']}", "Money");
  ASSERT_EQ(map.count("Money"), 1u);
  ASSERT_EQ(map.at("Money").size(), 1u);
  EXPECT_EQ(map.at("Money")[0], "121.445");
}

TEST(ParseNerResponseTest, ToleratesSurroundingProseAndEmptyLists) {
  const NerEntityMap map = ParseNerResponse("Sure! {'Name': []}", "Name");
  ASSERT_EQ(map.count("Name"), 1u);
  EXPECT_TRUE(map.at("Name").empty());
}

TEST(ParseNerResponseTest, RejectsUnstructuredReply) {
  EXPECT_THROW(ParseNerResponse("I cannot help", "Name"), NerParseError);
  EXPECT_THROW(ParseNerResponse("{broken", "Name"), NerParseError);
}

TEST(ParseNerResponseTest, SkipsMalformedBlockAndFindsLaterOne) {
  const NerEntityMap map =
      ParseNerResponse("{oops} and then {'Name': ['Kaiser Soze']}", "Name");
  ASSERT_EQ(map.at("Name").size(), 1u);
  EXPECT_EQ(map.at("Name")[0], "Kaiser Soze");
}

TEST(MergeNerMatchesTest, MarksEveryOccurrenceOfReportedSurface) {
  const std::string prompt = "Kaiser Soze met Kaiser Soze at the dock.";
  std::vector<std::string> warnings;
  const TypedSequence seq =
      MergeNerMatches(prompt, SensitiveType(Kind::kName), {"Kaiser Soze"}, 10,
                      TypedSequence{prompt, {}}, &warnings);
  ASSERT_EQ(seq.tokens.size(), 2u);
  EXPECT_EQ(seq.tokens[0].span.begin, 0u);
  EXPECT_EQ(seq.tokens[1].span.begin, 16u);
  EXPECT_TRUE(warnings.empty());
}

TEST(MergeNerMatchesTest, DropsUnmatchedSurfacesWithWarning) {
  const std::string prompt = "No names here.";
  std::vector<std::string> warnings;
  const TypedSequence seq =
      MergeNerMatches(prompt, SensitiveType(Kind::kName), {"Ghost"}, 10,
                      TypedSequence{prompt, {}}, &warnings);
  EXPECT_TRUE(seq.tokens.empty());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("Ghost"), std::string::npos);
}

TEST(MergeNerMatchesTest, ExistingPatternTokensWinOverlaps) {
  const std::string prompt = "ID 055-46-6168 belongs to 055-46-6168 Smith";
  const TypedSequence existing = Annotate(prompt, DefaultPatternPack());
  ASSERT_EQ(existing.tokens.size(), 2u);
  std::vector<std::string> warnings;
  // NER claims an overlapping stretch; the pattern SSNs stay authoritative.
  const TypedSequence merged =
      MergeNerMatches(prompt, SensitiveType(Kind::kName), {"055-46-6168 Smith"}, 10, existing,
                      &warnings);
  ASSERT_EQ(merged.tokens.size(), 2u);
  EXPECT_EQ(merged.tokens[0].type.kind(), Kind::kSsn);
  EXPECT_EQ(merged.tokens[1].type.kind(), Kind::kSsn);
}

TEST(CategoryOfTest, RegistryLookups) {
  const SanitizerConfig config = DefaultConfig(SanitizerKey::FromHex(std::string(64, 'a')));
  EXPECT_EQ(CategoryOf(SensitiveType(Kind::kSsn), config), Category::kCategoryI);
  EXPECT_EQ(CategoryOf(SensitiveType(Kind::kAge), config), Category::kCategoryII);
  EXPECT_THROW(CategoryOf(SensitiveType::Custom("ProductCode"), config), UnknownTypeError);
}

// Sanitized text must re-annotate to the same type sequence; format
// preservation makes this work for pattern recognizers.
TEST(AnnotateTest, IdempotentOnFormatPreservedText) {
  const std::string original = "My SSN is 055-46-6168 and zip code is 10001.";
  const std::string sanitized = "My SSN is 569-83-4469 and zip code is 97381.";
  const TypedSequence a = Annotate(original, DefaultPatternPack());
  const TypedSequence b = Annotate(sanitized, DefaultPatternPack());
  ASSERT_EQ(a.tokens.size(), b.tokens.size());
  for (std::size_t i = 0; i < a.tokens.size(); ++i) {
    EXPECT_EQ(a.tokens[i].type, b.tokens[i].type);
    EXPECT_EQ(a.tokens[i].span, b.tokens[i].span);
  }
}

}  // namespace
}  // namespace promptsan::annotate
