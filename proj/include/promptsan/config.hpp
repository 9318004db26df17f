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

#ifndef PROMPTSAN_CONFIG_HPP_
#define PROMPTSAN_CONFIG_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "promptsan/fpe.hpp"
#include "promptsan/mldp.hpp"
#include "promptsan/names.hpp"
#include "promptsan/types.hpp"

namespace promptsan {

// How a Category I type's format domain is constructed.
enum class FormatStrategy {
  kSkeleton,       // fixed digit skeleton, e.g. "###-##-####"
  kCreditCard,     // 16-digit skeleton with Luhn check digit recomputation
  kDate,           // MM/DD/YYYY
  kEnum,           // fixed value list
  kAlnumFamily,    // alphanumeric, one domain per token length
  kDigitFamily,    // plain digits, one domain per token length
  kNumericRange,   // integers lo..hi without leading zeros
  kNameIndex,      // curated first/last name lists, six-digit rank
  kMoneySkeleton,  // digits + separators, six-nines prefix
};

std::string FormatStrategyName(FormatStrategy s);
FormatStrategy FormatStrategyFromName(const std::string& name);

// Registry entry for one sensitive type.
struct TypeEntry {
  Category category = Category::kCategoryI;

  // Category I parameters.
  FormatStrategy strategy = FormatStrategy::kSkeleton;
  std::string skeleton;
  std::vector<std::string> enum_values;
  bool luhn = true;
  int min_digits = 1;
  int max_digits = fpe::kMaxDecimalDigits;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;

  // Category II parameter.
  mldp::IntegerDomain domain;
};

// Per-session sanitizer configuration: key, budget, type registry, name
// lists. Immutable in use; copyable.
struct SanitizerConfig {
  SanitizerKey key;
  double epsilon_total = 1.0;
  int reference_year = 2025;
  std::map<SensitiveType, TypeEntry> type_registry;
  std::shared_ptr<const fpe::NameIndex> names;

  const TypeEntry& EntryFor(const SensitiveType& type) const;  // throws UnknownTypeError
  Category CategoryFor(const SensitiveType& type) const;

  // Builds the format domain for a Category I token. Name-index and
  // money-skeleton strategies have dedicated codecs and are not built here.
  fpe::FormatSpec FormatForToken(const SensitiveType& type, std::string_view token) const;

  void Validate() const;  // throws ValidationError naming the offending field
};

// The default registry: Name/SSN/CreditCard/Zipcode/Phone/Date/Password/
// Sex/BankAccount as Category I, Age and Money as Category II
// (Age 10..99, Money 500..50000 step 450). Money can be overridden to
// Category I per session for format-only tasks.
SanitizerConfig DefaultConfig(SanitizerKey key);

// Reads the JSON config document at `path`; key material comes from the
// referenced key file (raw 16/32 bytes, or 32/64 hex characters), never
// inline. Relative paths resolve against the config's directory.
SanitizerConfig LoadConfig(const std::filesystem::path& path);

// Writes `config` as a JSON document referencing `key_file` (which is
// written separately by SaveKeyFile). The key itself is never serialized.
void SaveConfig(const SanitizerConfig& config, const std::filesystem::path& path,
                const std::filesystem::path& key_file);

SanitizerKey LoadKeyFile(const std::filesystem::path& path);
void SaveKeyFile(const SanitizerKey& key, const std::filesystem::path& path);

}  // namespace promptsan

#endif  // PROMPTSAN_CONFIG_HPP_
