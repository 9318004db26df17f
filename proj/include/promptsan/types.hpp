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

#ifndef PROMPTSAN_TYPES_HPP_
#define PROMPTSAN_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "promptsan/errors.hpp"

namespace promptsan {

// Which of the two sanitization mechanisms applies to a sensitive type:
// Category I tokens matter only through their format and are enciphered;
// Category II tokens matter through their numeric value and are perturbed.
enum class Category {
  kCategoryI,
  kCategoryII,
};

// A sensitive token type. The builtin kinds cover the default registry;
// kCustom carries a free-form label.
class SensitiveType {
 public:
  enum class Kind {
    kName,
    kAge,
    kMoney,
    kSsn,
    kCreditCard,
    kZipcode,
    kPhone,
    kDate,
    kPassword,
    kSex,
    kBankAccount,
    kCustom,
  };

  SensitiveType() : kind_(Kind::kCustom) {}
  explicit SensitiveType(Kind kind) : kind_(kind) {}
  static SensitiveType Custom(std::string label);

  // Parses the display name ("Name", "SSN", ...); unknown names become
  // Custom(label).
  static SensitiveType FromName(std::string_view name);

  Kind kind() const { return kind_; }
  // Display name; also the default tweak for this type.
  std::string name() const;

  friend bool operator==(const SensitiveType& a, const SensitiveType& b) {
    return a.kind_ == b.kind_ && a.label_ == b.label_;
  }
  friend auto operator<=>(const SensitiveType& a, const SensitiveType& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.label_ <=> b.label_;
  }

 private:
  Kind kind_;
  std::string label_;  // only set for kCustom
};

// Half-open character interval [begin, end) into a prompt.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

// A sensitive substring with its type and location. Nonsensitive text is
// not materialized as tokens; it lives in the gaps between spans.
struct TypedToken {
  std::string text;
  SensitiveType type;
  Span span;
};

// A prompt plus its sorted, pairwise-disjoint sensitive tokens. The gaps
// between token spans carry the nonsensitive text, so gaps + token texts
// reconstruct the source exactly.
struct TypedSequence {
  std::string source;
  std::vector<TypedToken> tokens;

  // Concatenation identity check; equals `source` for any well-formed
  // sequence.
  std::string Reconstruct() const;
};

// Fixed-size per-user secret. Key material must never reach logs or any
// serialized sanitized output; the only printable handle is key_id().
class SanitizerKey {
 public:
  SanitizerKey() = default;

  // Accepts 16 or 32 bytes (128/256-bit security parameter).
  static SanitizerKey FromBytes(std::vector<std::uint8_t> bytes);
  // Accepts 32 or 64 hex characters.
  static SanitizerKey FromHex(std::string_view hex);

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::size_t size_bits() const { return bytes_.size() * 8; }
  bool empty() const { return bytes_.empty(); }

  // Short non-reversible fingerprint for config display.
  std::string key_id() const;

  std::string ToHex() const;

  friend bool operator==(const SanitizerKey&, const SanitizerKey&) = default;

 private:
  explicit SanitizerKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}
  std::vector<std::uint8_t> bytes_;
};

// Draws a fresh uniformly random key from the OS entropy source.
// security_param_bits must be 128 or 256.
SanitizerKey Keygen(int security_param_bits);

}  // namespace promptsan

#endif  // PROMPTSAN_TYPES_HPP_
