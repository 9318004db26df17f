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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "promptsan/formats.hpp"

namespace promptsan {
namespace {

using nlohmann::json;

struct StrategyName {
  FormatStrategy strategy;
  const char* name;
};

constexpr StrategyName kStrategyNames[] = {
    {FormatStrategy::kSkeleton, "skeleton"},
    {FormatStrategy::kCreditCard, "credit-card"},
    {FormatStrategy::kDate, "date"},
    {FormatStrategy::kEnum, "enum"},
    {FormatStrategy::kAlnumFamily, "alnum"},
    {FormatStrategy::kDigitFamily, "digit-string"},
    {FormatStrategy::kNumericRange, "numeric-range"},
    {FormatStrategy::kNameIndex, "name-index"},
    {FormatStrategy::kMoneySkeleton, "money-skeleton"},
};

int CountDigits(std::string_view s) {
  return static_cast<int>(std::count_if(s.begin(), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }));
}

}  // namespace

std::string FormatStrategyName(FormatStrategy s) {
  for (const auto& [strategy, name] : kStrategyNames) {
    if (strategy == s) return name;
  }
  return "unknown";
}

FormatStrategy FormatStrategyFromName(const std::string& name) {
  for (const auto& [strategy, sname] : kStrategyNames) {
    if (name == sname) return strategy;
  }
  throw ValidationError("format.strategy: unknown strategy '" + name + "'");
}

const TypeEntry& SanitizerConfig::EntryFor(const SensitiveType& type) const {
  auto it = type_registry.find(type);
  if (it == type_registry.end()) {
    throw UnknownTypeError("type '" + type.name() + "' is not registered");
  }
  return it->second;
}

Category SanitizerConfig::CategoryFor(const SensitiveType& type) const {
  return EntryFor(type).category;
}

fpe::FormatSpec SanitizerConfig::FormatForToken(const SensitiveType& type,
                                                std::string_view token) const {
  const TypeEntry& entry = EntryFor(type);
  const std::string name = type.name();
  switch (entry.strategy) {
    case FormatStrategy::kSkeleton:
      return fpe::SkeletonFormat(name, entry.skeleton);
    case FormatStrategy::kCreditCard:
      return fpe::CreditCardFormat(name, entry.skeleton, entry.luhn);
    case FormatStrategy::kDate:
      return fpe::DateFormat(name);
    case FormatStrategy::kEnum:
      return fpe::EnumFormat(name, entry.enum_values);
    case FormatStrategy::kAlnumFamily: {
      const int len = static_cast<int>(token.size());
      if (len < entry.min_digits || len > std::min(entry.max_digits, 21)) {
        throw FormatMismatchError(name + ": token length " + std::to_string(len) +
                                  " outside configured bounds");
      }
      return fpe::AlnumFormat(name, len);
    }
    case FormatStrategy::kDigitFamily: {
      const int len = CountDigits(token);
      if (len != static_cast<int>(token.size())) {
        throw FormatMismatchError(name + ": expected plain digits");
      }
      if (len < entry.min_digits || len > entry.max_digits) {
        throw FormatMismatchError(name + ": digit count " + std::to_string(len) +
                                  " outside configured bounds");
      }
      return fpe::DigitStringFormat(name, len);
    }
    case FormatStrategy::kNumericRange:
      return fpe::NumericRangeFormat(name, entry.range_lo, entry.range_hi);
    case FormatStrategy::kNameIndex:
    case FormatStrategy::kMoneySkeleton:
      break;
  }
  throw Error("FormatForToken: strategy '" + FormatStrategyName(entry.strategy) +
              "' uses a dedicated codec");
}

void SanitizerConfig::Validate() const {
  if (key.empty()) throw ValidationError("key: missing key material");
  if (!(epsilon_total > 0.0)) throw ValidationError("epsilon_total: must be positive");
  if (reference_year < 1000 || reference_year > 9999) {
    throw ValidationError("reference_year: implausible value");
  }
  for (const auto& [type, entry] : type_registry) {
    const std::string field = "types." + type.name();
    if (entry.category == Category::kCategoryII) {
      try {
        entry.domain.Validate();
      } catch (const ValidationError& e) {
        throw ValidationError(field + "." + e.what());
      }
      if (entry.domain.size() < 1) throw ValidationError(field + ".domain: empty");
      continue;
    }
    switch (entry.strategy) {
      case FormatStrategy::kSkeleton:
      case FormatStrategy::kCreditCard:
        if (entry.skeleton.empty()) throw ValidationError(field + ".format.skeleton: missing");
        if (std::count(entry.skeleton.begin(), entry.skeleton.end(), '#') == 0) {
          throw ValidationError(field + ".format.skeleton: no digit slots");
        }
        break;
      case FormatStrategy::kEnum:
        if (entry.enum_values.size() < 2) {
          throw ValidationError(field + ".format.values: need at least 2 entries");
        }
        break;
      case FormatStrategy::kNumericRange:
        if (entry.range_lo >= entry.range_hi) {
          throw ValidationError(field + ".format: need lo < hi");
        }
        break;
      case FormatStrategy::kNameIndex:
        if (!names) throw ValidationError(field + ": name-index format but no name lists loaded");
        break;
      case FormatStrategy::kDate:
      case FormatStrategy::kAlnumFamily:
      case FormatStrategy::kDigitFamily:
      case FormatStrategy::kMoneySkeleton:
        break;
    }
  }
}

SanitizerConfig DefaultConfig(SanitizerKey key) {
  SanitizerConfig config;
  config.key = std::move(key);
  config.epsilon_total = 1.0;
  config.reference_year = 2025;
  config.names = std::make_shared<fpe::NameIndex>(fpe::NameIndex::BuiltIn());

  auto add = [&config](SensitiveType::Kind kind, TypeEntry entry) {
    config.type_registry.emplace(SensitiveType(kind), std::move(entry));
  };

  TypeEntry name;
  name.strategy = FormatStrategy::kNameIndex;
  add(SensitiveType::Kind::kName, name);

  TypeEntry ssn;
  ssn.strategy = FormatStrategy::kSkeleton;
  ssn.skeleton = "###-##-####";
  add(SensitiveType::Kind::kSsn, ssn);

  TypeEntry ccn;
  ccn.strategy = FormatStrategy::kCreditCard;
  ccn.skeleton = "#### #### #### ####";
  ccn.luhn = true;
  add(SensitiveType::Kind::kCreditCard, ccn);

  TypeEntry zip;
  zip.strategy = FormatStrategy::kSkeleton;
  zip.skeleton = "#####";
  add(SensitiveType::Kind::kZipcode, zip);

  TypeEntry phone;
  phone.strategy = FormatStrategy::kSkeleton;
  phone.skeleton = "###-###-####";
  add(SensitiveType::Kind::kPhone, phone);

  TypeEntry date;
  date.strategy = FormatStrategy::kDate;
  add(SensitiveType::Kind::kDate, date);

  TypeEntry password;
  password.strategy = FormatStrategy::kAlnumFamily;
  password.min_digits = 4;
  password.max_digits = 21;
  add(SensitiveType::Kind::kPassword, password);

  TypeEntry sex;
  sex.strategy = FormatStrategy::kEnum;
  sex.enum_values = {"male", "female", "Male", "Female", "M", "F"};
  add(SensitiveType::Kind::kSex, sex);

  TypeEntry account;
  account.strategy = FormatStrategy::kDigitFamily;
  account.min_digits = 6;
  account.max_digits = 17;
  add(SensitiveType::Kind::kBankAccount, account);

  TypeEntry age;
  age.category = Category::kCategoryII;
  age.domain = {10, 99, 1};
  add(SensitiveType::Kind::kAge, age);

  TypeEntry money;
  money.category = Category::kCategoryII;
  money.domain = {500, 50000, 450};
  add(SensitiveType::Kind::kMoney, money);

  return config;
}

namespace {

TypeEntry EntryFromJson(const std::string& field, const json& j) {
  TypeEntry entry;
  const std::string category = j.value("category", "");
  if (category == "I") {
    entry.category = Category::kCategoryI;
  } else if (category == "II") {
    entry.category = Category::kCategoryII;
  } else {
    throw ValidationError(field + ".category: expected \"I\" or \"II\"");
  }
  if (entry.category == Category::kCategoryII) {
    if (!j.contains("domain")) throw ValidationError(field + ".domain: missing");
    const json& d = j.at("domain");
    entry.domain.lo = d.value("lo", std::int64_t{0});
    entry.domain.hi = d.value("hi", std::int64_t{0});
    entry.domain.step = d.value("step", std::int64_t{1});
    return entry;
  }
  if (!j.contains("format")) throw ValidationError(field + ".format: missing");
  const json& f = j.at("format");
  entry.strategy = FormatStrategyFromName(f.value("strategy", ""));
  entry.skeleton = f.value("skeleton", "");
  entry.luhn = f.value("luhn", true);
  entry.min_digits = f.value("min_digits", 1);
  entry.max_digits = f.value("max_digits", fpe::kMaxDecimalDigits);
  entry.range_lo = f.value("lo", std::int64_t{0});
  entry.range_hi = f.value("hi", std::int64_t{0});
  if (f.contains("values")) {
    entry.enum_values = f.at("values").get<std::vector<std::string>>();
  }
  return entry;
}

json EntryToJson(const TypeEntry& entry) {
  json j;
  j["category"] = entry.category == Category::kCategoryI ? "I" : "II";
  if (entry.category == Category::kCategoryII) {
    j["domain"] = {{"lo", entry.domain.lo}, {"hi", entry.domain.hi}, {"step", entry.domain.step}};
    return j;
  }
  json f;
  f["strategy"] = FormatStrategyName(entry.strategy);
  switch (entry.strategy) {
    case FormatStrategy::kSkeleton:
      f["skeleton"] = entry.skeleton;
      break;
    case FormatStrategy::kCreditCard:
      f["skeleton"] = entry.skeleton;
      f["luhn"] = entry.luhn;
      break;
    case FormatStrategy::kEnum:
      f["values"] = entry.enum_values;
      break;
    case FormatStrategy::kAlnumFamily:
    case FormatStrategy::kDigitFamily:
      f["min_digits"] = entry.min_digits;
      f["max_digits"] = entry.max_digits;
      break;
    case FormatStrategy::kNumericRange:
      f["lo"] = entry.range_lo;
      f["hi"] = entry.range_hi;
      break;
    case FormatStrategy::kDate:
    case FormatStrategy::kNameIndex:
    case FormatStrategy::kMoneySkeleton:
      break;
  }
  j["format"] = f;
  return j;
}

}  // namespace

SanitizerConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("config " + path.string() + ": " + e.what());
  }

  SanitizerConfig config;
  const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");

  if (!doc.contains("key_file")) throw ValidationError("key_file: missing");
  std::filesystem::path key_path = doc.at("key_file").get<std::string>();
  if (key_path.is_relative()) key_path = base / key_path;
  config.key = LoadKeyFile(key_path);

  if (!doc.contains("epsilon_total") || !doc.at("epsilon_total").is_number()) {
    throw ValidationError("epsilon_total: missing or not a number");
  }
  config.epsilon_total = doc.at("epsilon_total").get<double>();
  config.reference_year = doc.value("reference_year", 2025);

  if (doc.contains("name_lists")) {
    std::filesystem::path first = doc.at("name_lists").value("first", "");
    std::filesystem::path last = doc.at("name_lists").value("last", "");
    if (first.is_relative()) first = base / first;
    if (last.is_relative()) last = base / last;
    config.names = std::make_shared<fpe::NameIndex>(fpe::NameIndex::FromFiles(first, last));
  } else {
    config.names = std::make_shared<fpe::NameIndex>(fpe::NameIndex::BuiltIn());
  }

  if (!doc.contains("types") || !doc.at("types").is_object()) {
    throw ValidationError("types: missing table");
  }
  for (const auto& [name, j] : doc.at("types").items()) {
    config.type_registry.emplace(SensitiveType::FromName(name),
                                 EntryFromJson("types." + name, j));
  }

  config.Validate();
  return config;
}

void SaveConfig(const SanitizerConfig& config, const std::filesystem::path& path,
                const std::filesystem::path& key_file) {
  json doc;
  doc["key_file"] = key_file.string();
  doc["key_id"] = config.key.key_id();
  doc["epsilon_total"] = config.epsilon_total;
  doc["reference_year"] = config.reference_year;
  json types = json::object();
  for (const auto& [type, entry] : config.type_registry) {
    types[type.name()] = EntryToJson(entry);
  }
  doc["types"] = types;

  std::ofstream out(path);
  if (!out) throw Error("cannot write config: " + path.string());
  out << doc.dump(2) << "\n";
}

SanitizerKey LoadKeyFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open key file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();

  std::string trimmed = data;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.pop_back();
  }
  const bool all_hex = !trimmed.empty() &&
                       std::all_of(trimmed.begin(), trimmed.end(), [](char c) {
                         return std::isxdigit(static_cast<unsigned char>(c));
                       });
  if (all_hex && (trimmed.size() == 32 || trimmed.size() == 64)) {
    return SanitizerKey::FromHex(trimmed);
  }
  if (data.size() == 16 || data.size() == 32) {
    return SanitizerKey::FromBytes({data.begin(), data.end()});
  }
  throw ValidationError("key file " + path.string() +
                        ": expected 16/32 raw bytes or 32/64 hex characters");
}

void SaveKeyFile(const SanitizerKey& key, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write key file: " + path.string());
  out << key.ToHex() << "\n";
}

}  // namespace promptsan
