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

#ifndef PROMPTSAN_FPE_HPP_
#define PROMPTSAN_FPE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "promptsan/errors.hpp"
#include "promptsan/types.hpp"

// Format-preserving encryption over any finite rankable format:
// rank-then-encipher with a 10-round keyed Feistel network over Z_a x Z_b
// (a, b ~ ceil(sqrt(N)), round function HMAC-SHA256) and cycle walking back
// into the format domain. Encrypt/Decrypt are pure functions of
// (key, tweak, input); ciphertexts always satisfy the same format predicate
// as plaintexts.

namespace promptsan::fpe {

using uint128 = unsigned __int128;

// Domain sizes must stay below 2^126 so the Feistel halves fit in uint128
// arithmetic (~38 decimal digits / 21 base-62 characters).
inline constexpr int kMaxDecimalDigits = 38;

uint128 Uint128FromDecimal(std::string_view digits);  // throws FormatMismatchError
std::string Uint128ToDecimal(uint128 value, int pad_width = 0);
uint128 Pow128(uint128 base, int exp);

// Public per-type context bytes mixed into the round function. Constant per
// (session, type) so equal plaintexts of equal type encrypt equally.
struct Tweak {
  std::vector<std::uint8_t> bytes;

  static Tweak FromString(std::string_view s);
  static Tweak ForType(const SensitiveType& type);  // the type's display name
};

// A finite rankable format: a set of strings of size() elements with
// mutually inverse rank/unrank maps and a membership predicate.
class FormatSpec {
 public:
  using Matcher = std::function<bool(std::string_view)>;
  using RankFn = std::function<uint128(std::string_view)>;
  using UnrankFn = std::function<std::string(uint128)>;

  FormatSpec(std::string name, uint128 size, Matcher matcher, RankFn rank, UnrankFn unrank);

  const std::string& name() const { return name_; }
  uint128 size() const { return size_; }

  bool Matches(std::string_view s) const { return matcher_(s); }
  uint128 Rank(std::string_view s) const;      // throws FormatMismatchError
  std::string Unrank(uint128 index) const;     // pre: index < size

 private:
  std::string name_;
  uint128 size_;
  Matcher matcher_;
  RankFn rank_;
  UnrankFn unrank_;
};

// Keyed permutation over [0, domain_size). Exposed separately from the
// string layer so bijectivity can be tested by enumeration.
uint128 EncryptIndex(const SanitizerKey& key, const Tweak& tweak, uint128 domain_size,
                     uint128 index);
uint128 DecryptIndex(const SanitizerKey& key, const Tweak& tweak, uint128 domain_size,
                     uint128 index);

std::string Encrypt(const SanitizerKey& key, const FormatSpec& format, const Tweak& tweak,
                    std::string_view plaintext);
std::string Decrypt(const SanitizerKey& key, const FormatSpec& format, const Tweak& tweak,
                    std::string_view ciphertext);

// Money-skeleton codec: digits are enciphered as one integer prefixed with
// six '9's, so the ciphertext carries six extra digits; separator positions
// (relative to the right end of the digit string) are preserved exactly and
// decryption strips the prefix back off.
std::string EncryptMoney(const SanitizerKey& key, const Tweak& tweak, std::string_view money_text);
std::string DecryptMoney(const SanitizerKey& key, const Tweak& tweak, std::string_view money_text);

// True if the text parses as a money token: digits with optional comma/space
// separators and at most one decimal point.
bool MoneyMatches(std::string_view money_text);

}  // namespace promptsan::fpe

#endif  // PROMPTSAN_FPE_HPP_
