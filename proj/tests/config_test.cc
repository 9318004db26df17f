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

#include "promptsan/config.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace promptsan {
namespace {

namespace fs = std::filesystem;

class ConfigTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("promptsan_config_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
  }

  fs::path dir_;
};

const char kKeyHex[] = "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f";

TEST_F(ConfigTest, DefaultConfigValidates) {
  const SanitizerConfig config = DefaultConfig(SanitizerKey::FromHex(kKeyHex));
  EXPECT_NO_THROW(config.Validate());
  EXPECT_EQ(config.reference_year, 2025);
  EXPECT_EQ(config.CategoryFor(SensitiveType(SensitiveType::Kind::kSsn)), Category::kCategoryI);
  EXPECT_EQ(config.CategoryFor(SensitiveType(SensitiveType::Kind::kAge)), Category::kCategoryII);
  EXPECT_EQ(config.CategoryFor(SensitiveType(SensitiveType::Kind::kMoney)),
            Category::kCategoryII);
  const TypeEntry& age = config.EntryFor(SensitiveType(SensitiveType::Kind::kAge));
  EXPECT_EQ(age.domain.lo, 10);
  EXPECT_EQ(age.domain.hi, 99);
}

TEST_F(ConfigTest, SaveLoadRoundTripIsStructurallyEqual) {
  const SanitizerConfig original = DefaultConfig(SanitizerKey::FromHex(kKeyHex));
  const fs::path key_path = dir_ / "k.key";
  const fs::path config_path = dir_ / "c.json";
  SaveKeyFile(original.key, key_path);
  SaveConfig(original, config_path, "k.key");

  const SanitizerConfig loaded = LoadConfig(config_path);
  EXPECT_EQ(loaded.key, original.key);
  EXPECT_DOUBLE_EQ(loaded.epsilon_total, original.epsilon_total);
  EXPECT_EQ(loaded.reference_year, original.reference_year);
  ASSERT_EQ(loaded.type_registry.size(), original.type_registry.size());
  for (const auto& [type, entry] : original.type_registry) {
    const TypeEntry& other = loaded.EntryFor(type);
    EXPECT_EQ(other.category, entry.category) << type.name();
    EXPECT_EQ(other.strategy, entry.strategy) << type.name();
    EXPECT_EQ(other.skeleton, entry.skeleton) << type.name();
    EXPECT_EQ(other.enum_values, entry.enum_values) << type.name();
    EXPECT_EQ(other.domain, entry.domain) << type.name();
  }

  // Second round trip reproduces the same document.
  const fs::path config2 = dir_ / "c2.json";
  SaveConfig(loaded, config2, "k.key");
  std::ifstream a(config_path), b(config2);
  std::string doc_a((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string doc_b((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  EXPECT_EQ(doc_a, doc_b);
}

TEST_F(ConfigTest, KeyNeverSerializedIntoConfig) {
  const SanitizerConfig config = DefaultConfig(SanitizerKey::FromHex(kKeyHex));
  const fs::path config_path = dir_ / "c.json";
  SaveKeyFile(config.key, dir_ / "k.key");
  SaveConfig(config, config_path, "k.key");
  std::ifstream in(config_path);
  std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(doc.find(kKeyHex), std::string::npos);
}

TEST_F(ConfigTest, RejectsNonPositiveEpsilon) {
  SaveKeyFile(SanitizerKey::FromHex(kKeyHex), dir_ / "k.key");
  const fs::path path = Write("c.json", R"({
    "key_file": "k.key",
    "epsilon_total": 0,
    "types": {"Age": {"category": "II", "domain": {"lo": 10, "hi": 99}}}
  })");
  try {
    LoadConfig(path);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("epsilon_total"), std::string::npos);
  }
}

TEST_F(ConfigTest, RejectsCategoryIWithoutFormat) {
  SaveKeyFile(SanitizerKey::FromHex(kKeyHex), dir_ / "k.key");
  const fs::path path = Write("c.json", R"({
    "key_file": "k.key",
    "epsilon_total": 1.0,
    "types": {"SSN": {"category": "I"}}
  })");
  try {
    LoadConfig(path);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("SSN"), std::string::npos);
  }
}

TEST_F(ConfigTest, RejectsEmptyCategoryIIDomain) {
  SaveKeyFile(SanitizerKey::FromHex(kKeyHex), dir_ / "k.key");
  const fs::path path = Write("c.json", R"({
    "key_file": "k.key",
    "epsilon_total": 1.0,
    "types": {"Age": {"category": "II", "domain": {"lo": 99, "hi": 10}}}
  })");
  EXPECT_THROW(LoadConfig(path), ValidationError);
}

TEST_F(ConfigTest, MalformedJsonIsParseError) {
  const fs::path path = Write("c.json", "{not json");
  EXPECT_THROW(LoadConfig(path), ParseError);
  EXPECT_THROW(LoadConfig(dir_ / "missing.json"), ParseError);
}

TEST_F(ConfigTest, KeyFileRawAndHexForms) {
  const SanitizerKey key = SanitizerKey::FromHex(kKeyHex);
  const fs::path hex_path = Write("hex.key", key.ToHex() + "\n");
  EXPECT_EQ(LoadKeyFile(hex_path), key);

  std::string raw(key.bytes().begin(), key.bytes().end());
  const fs::path raw_path = Write("raw.key", raw);
  EXPECT_EQ(LoadKeyFile(raw_path), key);

  const fs::path bad = Write("bad.key", "tooshort");
  EXPECT_THROW(LoadKeyFile(bad), ValidationError);
}

TEST_F(ConfigTest, MoneyCanBeOverriddenToCategoryI) {
  SaveKeyFile(SanitizerKey::FromHex(kKeyHex), dir_ / "k.key");
  const fs::path path = Write("c.json", R"({
    "key_file": "k.key",
    "epsilon_total": 1.0,
    "types": {
      "Money": {"category": "I", "format": {"strategy": "money-skeleton"}},
      "Age": {"category": "II", "domain": {"lo": 10, "hi": 99}}
    }
  })");
  const SanitizerConfig config = LoadConfig(path);
  EXPECT_EQ(config.CategoryFor(SensitiveType(SensitiveType::Kind::kMoney)),
            Category::kCategoryI);
  EXPECT_EQ(config.EntryFor(SensitiveType(SensitiveType::Kind::kMoney)).strategy,
            FormatStrategy::kMoneySkeleton);
}

TEST_F(ConfigTest, UnknownTypeLookupThrows) {
  const SanitizerConfig config = DefaultConfig(SanitizerKey::FromHex(kKeyHex));
  EXPECT_THROW(config.EntryFor(SensitiveType::Custom("ProductCode")), UnknownTypeError);
}

}  // namespace
}  // namespace promptsan
