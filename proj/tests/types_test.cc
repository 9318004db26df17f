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

#include "promptsan/types.hpp"

#include <gtest/gtest.h>

#include "promptsan/utf8.hpp"

namespace promptsan {
namespace {

TEST(SensitiveTypeTest, NamesRoundTrip) {
  EXPECT_EQ(SensitiveType(SensitiveType::Kind::kSsn).name(), "SSN");
  EXPECT_EQ(SensitiveType::FromName("Age").kind(), SensitiveType::Kind::kAge);
  EXPECT_EQ(SensitiveType::FromName("CreditCard").name(), "CreditCard");
  const SensitiveType custom = SensitiveType::FromName("ProductCode");
  EXPECT_EQ(custom.kind(), SensitiveType::Kind::kCustom);
  EXPECT_EQ(custom.name(), "ProductCode");
  EXPECT_EQ(custom, SensitiveType::Custom("ProductCode"));
  EXPECT_NE(custom, SensitiveType::Custom("OtherCode"));
}

TEST(Utf8Test, OffsetsOnMultibyteText) {
  const std::string text = "Müller zahlt 30€";  // ü and € are multibyte
  EXPECT_EQ(utf8::Length(text), 16u);
  EXPECT_EQ(utf8::Substr(text, 0, 6), "Müller");
  EXPECT_EQ(utf8::Substr(text, 13, 2), "30");
  EXPECT_EQ(utf8::CharOffset(text, utf8::ByteOffset(text, 13)), 13u);
}

TEST(TypedSequenceTest, ReconstructIsLossless) {
  TypedSequence seq;
  seq.source = "Müller ist 30 Jahre alt, SSN 055-46-6168.";
  TypedToken age;
  age.type = SensitiveType(SensitiveType::Kind::kAge);
  age.span = {11, 13};
  age.text = utf8::Substr(seq.source, 11, 2);
  TypedToken ssn;
  ssn.type = SensitiveType(SensitiveType::Kind::kSsn);
  ssn.span = {29, 40};
  ssn.text = utf8::Substr(seq.source, 29, 11);
  seq.tokens = {age, ssn};
  EXPECT_EQ(age.text, "30");
  EXPECT_EQ(ssn.text, "055-46-6168");
  EXPECT_EQ(seq.Reconstruct(), seq.source);
}

TEST(TypedSequenceTest, EmptySequenceReconstructsSource) {
  TypedSequence seq;
  seq.source = "no sensitive content";
  EXPECT_EQ(seq.Reconstruct(), seq.source);
}

TEST(SanitizerKeyTest, HexRoundTrip) {
  const std::string hex = "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f";
  const SanitizerKey key = SanitizerKey::FromHex(hex);
  EXPECT_EQ(key.bytes().size(), 32u);
  EXPECT_EQ(key.ToHex(), hex);
  EXPECT_EQ(key.size_bits(), 256u);
}

TEST(SanitizerKeyTest, RejectsBadLengthsAndNonHex) {
  EXPECT_THROW(SanitizerKey::FromHex("abcd"), ValidationError);
  EXPECT_THROW(SanitizerKey::FromBytes(std::vector<std::uint8_t>(31)), ValidationError);
  EXPECT_THROW(SanitizerKey::FromHex(std::string(64, 'g')), ValidationError);
}

TEST(SanitizerKeyTest, KeyIdIsStableAndNotKeyMaterial) {
  const SanitizerKey key = SanitizerKey::FromHex(std::string(64, '0'));
  EXPECT_EQ(key.key_id().size(), 8u);
  EXPECT_EQ(key.key_id(), key.key_id());
  EXPECT_EQ(key.ToHex().find(key.key_id()), std::string::npos);
}

TEST(KeygenTest, ProducesRequestedLength) {
  EXPECT_EQ(Keygen(256).bytes().size(), 32u);
  EXPECT_EQ(Keygen(128).bytes().size(), 16u);
}

TEST(KeygenTest, TwoCallsDiffer) {
  EXPECT_NE(Keygen(256), Keygen(256));
}

TEST(KeygenTest, RejectsBelowMinimum) {
  EXPECT_THROW(Keygen(64), ValidationError);
  EXPECT_THROW(Keygen(512), ValidationError);
}

}  // namespace
}  // namespace promptsan
