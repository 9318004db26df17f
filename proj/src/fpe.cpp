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

#include "promptsan/fpe.hpp"

#include <openssl/hmac.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace promptsan::fpe {
namespace {

constexpr int kFeistelRounds = 10;
constexpr int kCycleWalkCap = 10000;

void AppendBigEndian128(std::vector<std::uint8_t>& out, uint128 v) {
  for (int i = 15; i >= 0; --i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

// Integer square root by Newton iteration seeded from the double estimate.
uint128 IntegerSqrt(uint128 n) {
  if (n == 0) return 0;
  uint128 x = static_cast<uint128>(std::sqrt(static_cast<double>(n)));
  if (x == 0) x = 1;
  for (int i = 0; i < 64; ++i) {
    const uint128 next = (x + n / x) / 2;
    if (next >= x) break;
    x = next;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

// Round function: HMAC-SHA256(key, round || ab || tweak_len || tweak || half)
// reduced mod the half-domain. 128 bits mod a 63-bit modulus leaves
// negligible bias.
uint128 RoundFunction(const SanitizerKey& key, const Tweak& tweak, uint128 ab, int round,
                      uint128 half_value, uint128 modulus) {
  std::vector<std::uint8_t> msg;
  msg.reserve(1 + 16 + 4 + tweak.bytes.size() + 16);
  msg.push_back(static_cast<std::uint8_t>(round));
  AppendBigEndian128(msg, ab);
  const std::uint32_t tlen = static_cast<std::uint32_t>(tweak.bytes.size());
  for (int i = 3; i >= 0; --i) msg.push_back(static_cast<std::uint8_t>(tlen >> (8 * i)));
  msg.insert(msg.end(), tweak.bytes.begin(), tweak.bytes.end());
  AppendBigEndian128(msg, half_value);

  std::array<std::uint8_t, 32> digest{};
  unsigned int digest_len = 0;
  HMAC(EVP_sha256(), key.bytes().data(), static_cast<int>(key.bytes().size()), msg.data(),
       msg.size(), digest.data(), &digest_len);

  uint128 v = 0;
  for (int i = 0; i < 16; ++i) v = (v << 8) | digest[i];
  return v % modulus;
}

struct FeistelParams {
  uint128 a = 0;  // left modulus
  uint128 b = 0;  // right modulus
};

FeistelParams ParamsFor(uint128 domain_size) {
  FeistelParams p;
  p.a = IntegerSqrt(domain_size);
  if (p.a * p.a < domain_size) ++p.a;
  p.b = domain_size / p.a;
  if (p.a * p.b < domain_size) ++p.b;
  return p;
}

// One pass over [0, a*b): x = L*b + R maps to R*a + (L + F(R)) mod a,
// which is a bijection round by round.
uint128 FeistelEncryptOnce(const SanitizerKey& key, const Tweak& tweak, const FeistelParams& p,
                           uint128 x) {
  const uint128 ab = p.a * p.b;
  for (int round = 0; round < kFeistelRounds; ++round) {
    const uint128 left = x / p.b;
    const uint128 right = x % p.b;
    const uint128 f = RoundFunction(key, tweak, ab, round, right, p.a);
    x = right * p.a + (left + f) % p.a;
  }
  return x;
}

uint128 FeistelDecryptOnce(const SanitizerKey& key, const Tweak& tweak, const FeistelParams& p,
                           uint128 y) {
  const uint128 ab = p.a * p.b;
  for (int round = kFeistelRounds - 1; round >= 0; --round) {
    const uint128 w = y % p.a;
    const uint128 right = y / p.a;
    const uint128 f = RoundFunction(key, tweak, ab, round, right, p.a);
    const uint128 left = (w + p.a - f % p.a) % p.a;
    y = left * p.b + right;
  }
  return y;
}

}  // namespace

uint128 Uint128FromDecimal(std::string_view digits) {
  if (digits.empty() || digits.size() > kMaxDecimalDigits) {
    throw FormatMismatchError("digit string length must be 1.." +
                              std::to_string(kMaxDecimalDigits));
  }
  uint128 v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw FormatMismatchError("non-digit in digit string");
    v = v * 10 + static_cast<uint128>(c - '0');
  }
  return v;
}

std::string Uint128ToDecimal(uint128 value, int pad_width) {
  std::string out;
  do {
    out += static_cast<char>('0' + static_cast<int>(value % 10));
    value /= 10;
  } while (value != 0);
  while (static_cast<int>(out.size()) < pad_width) out += '0';
  std::reverse(out.begin(), out.end());
  return out;
}

uint128 Pow128(uint128 base, int exp) {
  uint128 v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

Tweak Tweak::FromString(std::string_view s) {
  Tweak t;
  t.bytes.assign(s.begin(), s.end());
  return t;
}

Tweak Tweak::ForType(const SensitiveType& type) { return FromString(type.name()); }

FormatSpec::FormatSpec(std::string name, uint128 size, Matcher matcher, RankFn rank,
                       UnrankFn unrank)
    : name_(std::move(name)),
      size_(size),
      matcher_(std::move(matcher)),
      rank_(std::move(rank)),
      unrank_(std::move(unrank)) {
  if (size_ < 2) throw ValidationError("format " + name_ + ": domain size must be >= 2");
}

uint128 FormatSpec::Rank(std::string_view s) const {
  if (!matcher_(s)) {
    throw FormatMismatchError("'" + std::string(s) + "' does not match format " + name_);
  }
  return rank_(s);
}

std::string FormatSpec::Unrank(uint128 index) const { return unrank_(index); }

uint128 EncryptIndex(const SanitizerKey& key, const Tweak& tweak, uint128 domain_size,
                     uint128 index) {
  if (index >= domain_size) throw FormatMismatchError("index outside format domain");
  const FeistelParams p = ParamsFor(domain_size);
  uint128 x = index;
  for (int walk = 0; walk < kCycleWalkCap; ++walk) {
    x = FeistelEncryptOnce(key, tweak, p, x);
    if (x < domain_size) return x;
  }
  throw Error("cycle walk exceeded iteration cap; Feistel parameters are broken");
}

uint128 DecryptIndex(const SanitizerKey& key, const Tweak& tweak, uint128 domain_size,
                     uint128 index) {
  if (index >= domain_size) throw FormatMismatchError("index outside format domain");
  const FeistelParams p = ParamsFor(domain_size);
  uint128 x = index;
  for (int walk = 0; walk < kCycleWalkCap; ++walk) {
    x = FeistelDecryptOnce(key, tweak, p, x);
    if (x < domain_size) return x;
  }
  throw Error("cycle walk exceeded iteration cap; Feistel parameters are broken");
}

std::string Encrypt(const SanitizerKey& key, const FormatSpec& format, const Tweak& tweak,
                    std::string_view plaintext) {
  const uint128 index = format.Rank(plaintext);
  return format.Unrank(EncryptIndex(key, tweak, format.size(), index));
}

std::string Decrypt(const SanitizerKey& key, const FormatSpec& format, const Tweak& tweak,
                    std::string_view ciphertext) {
  const uint128 index = format.Rank(ciphertext);
  return format.Unrank(DecryptIndex(key, tweak, format.size(), index));
}

namespace {

struct MoneyParts {
  std::string digits;
  // (separator char, digit count to its right), innermost first.
  std::vector<std::pair<char, int>> separators;
};

MoneyParts SplitMoney(std::string_view text) {
  MoneyParts parts;
  int points = 0;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      parts.digits += c;
    } else if (c == ',' || c == ' ' || c == '.') {
      if (c == '.' && ++points > 1) throw FormatMismatchError("money: multiple decimal points");
    } else {
      throw FormatMismatchError("money: unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (parts.digits.empty() || text.empty()) throw FormatMismatchError("money: no digits");
  if (text.front() < '0' || text.front() > '9' || text.back() < '0' || text.back() > '9') {
    throw FormatMismatchError("money: must start and end with a digit");
  }
  // Right-aligned digit offsets for each separator.
  int digits_right = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    const char c = *it;
    if (c >= '0' && c <= '9') {
      ++digits_right;
    } else {
      parts.separators.emplace_back(c, digits_right);
    }
  }
  std::reverse(parts.separators.begin(), parts.separators.end());
  return parts;
}

std::string JoinMoney(std::string_view digits, const std::vector<std::pair<char, int>>& seps) {
  std::string out;
  const int n = static_cast<int>(digits.size());
  std::size_t next = 0;
  for (int pos = 0; pos < n; ++pos) {
    const int right_of_here = n - pos;
    while (next < seps.size() && seps[next].second == right_of_here) {
      out += seps[next].first;
      ++next;
    }
    out += digits[pos];
  }
  return out;
}

constexpr const char* kMoneyPrefix = "999999";

}  // namespace

bool MoneyMatches(std::string_view money_text) {
  try {
    const MoneyParts parts = SplitMoney(money_text);
    return static_cast<int>(parts.digits.size()) + 6 <= kMaxDecimalDigits;
  } catch (const FormatMismatchError&) {
    return false;
  }
}

std::string EncryptMoney(const SanitizerKey& key, const Tweak& tweak,
                         std::string_view money_text) {
  const MoneyParts parts = SplitMoney(money_text);
  const std::string padded = kMoneyPrefix + parts.digits;
  if (static_cast<int>(padded.size()) > kMaxDecimalDigits) {
    throw FormatMismatchError("money: too many digits");
  }
  const int width = static_cast<int>(padded.size());
  const uint128 domain = Pow128(10, width);
  const uint128 cipher = EncryptIndex(key, tweak, domain, Uint128FromDecimal(padded));
  return JoinMoney(Uint128ToDecimal(cipher, width), parts.separators);
}

std::string DecryptMoney(const SanitizerKey& key, const Tweak& tweak,
                         std::string_view money_text) {
  const MoneyParts parts = SplitMoney(money_text);
  const int width = static_cast<int>(parts.digits.size());
  if (width <= 6) throw FormatMismatchError("money ciphertext too short");
  const uint128 domain = Pow128(10, width);
  const uint128 plain = DecryptIndex(key, tweak, domain, Uint128FromDecimal(parts.digits));
  const std::string padded = Uint128ToDecimal(plain, width);
  if (padded.substr(0, 6) != kMoneyPrefix) {
    throw FormatMismatchError("money: not a ciphertext under this key/tweak");
  }
  return JoinMoney(padded.substr(6), parts.separators);
}

}  // namespace promptsan::fpe
