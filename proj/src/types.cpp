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

#include <openssl/rand.h>
#include <openssl/sha.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "promptsan/utf8.hpp"

namespace promptsan {
namespace {

struct KindName {
  SensitiveType::Kind kind;
  const char* name;
};

constexpr std::array<KindName, 11> kKindNames = {{
    {SensitiveType::Kind::kName, "Name"},
    {SensitiveType::Kind::kAge, "Age"},
    {SensitiveType::Kind::kMoney, "Money"},
    {SensitiveType::Kind::kSsn, "SSN"},
    {SensitiveType::Kind::kCreditCard, "CreditCard"},
    {SensitiveType::Kind::kZipcode, "Zipcode"},
    {SensitiveType::Kind::kPhone, "Phone"},
    {SensitiveType::Kind::kDate, "Date"},
    {SensitiveType::Kind::kPassword, "Password"},
    {SensitiveType::Kind::kSex, "Sex"},
    {SensitiveType::Kind::kBankAccount, "BankAccount"},
}};

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

SensitiveType SensitiveType::Custom(std::string label) {
  SensitiveType t(Kind::kCustom);
  t.label_ = std::move(label);
  return t;
}

SensitiveType SensitiveType::FromName(std::string_view name) {
  for (const auto& [kind, kname] : kKindNames) {
    if (name == kname) return SensitiveType(kind);
  }
  return Custom(std::string(name));
}

std::string SensitiveType::name() const {
  for (const auto& [kind, kname] : kKindNames) {
    if (kind == kind_) return kname;
  }
  return label_;
}

std::string TypedSequence::Reconstruct() const {
  std::string out;
  std::size_t cursor = 0;  // character offset
  for (const TypedToken& token : tokens) {
    out += utf8::Substr(source, cursor, token.span.begin - cursor);
    out += token.text;
    cursor = token.span.end;
  }
  out += utf8::Substr(source, cursor, utf8::Length(source) - cursor);
  return out;
}

SanitizerKey SanitizerKey::FromBytes(std::vector<std::uint8_t> bytes) {
  if (bytes.size() != 16 && bytes.size() != 32) {
    throw ValidationError("key: expected 16 or 32 bytes, got " + std::to_string(bytes.size()));
  }
  return SanitizerKey(std::move(bytes));
}

SanitizerKey SanitizerKey::FromHex(std::string_view hex) {
  if (hex.size() != 32 && hex.size() != 64) {
    throw ValidationError("key: expected 32 or 64 hex characters, got " +
                          std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const int hi = HexValue(hex[2 * i]);
    const int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ValidationError("key: non-hex character in key file");
    bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return SanitizerKey(std::move(bytes));
}

std::string SanitizerKey::key_id() const {
  // SHA-256 of the key, truncated: a display handle, not key material.
  std::array<std::uint8_t, SHA256_DIGEST_LENGTH> digest{};
  SHA256(bytes_.data(), bytes_.size(), digest.data());
  static const char* kHex = "0123456789abcdef";
  std::string id;
  for (int i = 0; i < 4; ++i) {
    id += kHex[digest[i] >> 4];
    id += kHex[digest[i] & 0xF];
  }
  return id;
}

std::string SanitizerKey::ToHex() const {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out += kHex[b >> 4];
    out += kHex[b & 0xF];
  }
  return out;
}

SanitizerKey Keygen(int security_param_bits) {
  if (security_param_bits != 128 && security_param_bits != 256) {
    throw ValidationError("security_param: must be 128 or 256 bits, got " +
                          std::to_string(security_param_bits));
  }
  std::vector<std::uint8_t> bytes(security_param_bits / 8);
  if (RAND_bytes(bytes.data(), static_cast<int>(bytes.size())) != 1) {
    throw EntropyUnavailableError("OS entropy source unavailable");
  }
  return SanitizerKey::FromBytes(std::move(bytes));
}

}  // namespace promptsan
