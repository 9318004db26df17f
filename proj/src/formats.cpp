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

#include "promptsan/formats.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <utility>

namespace promptsan::fpe {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string StripSkeleton(std::string_view skeleton, std::string_view text) {
  std::string digits;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    if (skeleton[i] == '#') digits += text[i];
  }
  return digits;
}

std::string FillSkeleton(std::string_view skeleton, std::string_view digits) {
  std::string out;
  std::size_t next = 0;
  for (char c : skeleton) {
    out += (c == '#') ? digits[next++] : c;
  }
  return out;
}

bool MatchesSkeleton(std::string_view skeleton, std::string_view text) {
  if (text.size() != skeleton.size()) return false;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    if (skeleton[i] == '#') {
      if (text[i] < '0' || text[i] > '9') return false;
    } else if (text[i] != skeleton[i]) {
      return false;
    }
  }
  return true;
}

int DigitSlots(std::string_view skeleton) {
  return static_cast<int>(std::count(skeleton.begin(), skeleton.end(), '#'));
}

bool IsLeapYear(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int DaysInMonth(int y, int m) {
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && IsLeapYear(y)) return 29;
  return kDays[m - 1];
}

// Days since 1900-01-01 for a valid date in [1900, 2099].
std::int64_t DayNumber(int y, int m, int d) {
  std::int64_t days = 0;
  for (int year = 1900; year < y; ++year) days += IsLeapYear(year) ? 366 : 365;
  for (int month = 1; month < m; ++month) days += DaysInMonth(y, month);
  return days + (d - 1);
}

void DateFromDayNumber(std::int64_t days, int* y, int* m, int* d) {
  int year = 1900;
  while (true) {
    const int len = IsLeapYear(year) ? 366 : 365;
    if (days < len) break;
    days -= len;
    ++year;
  }
  int month = 1;
  while (days >= DaysInMonth(year, month)) {
    days -= DaysInMonth(year, month);
    ++month;
  }
  *y = year;
  *m = month;
  *d = static_cast<int>(days) + 1;
}

constexpr std::int64_t kDateDomainSize = 73049;  // 1900-01-01 .. 2099-12-31

const char kAlnumAlphabet[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

int AlnumIndex(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  if (c >= 'a' && c <= 'z') return c - 'a' + 36;
  return -1;
}

}  // namespace

FormatSpec DigitStringFormat(std::string name, int digit_count) {
  if (digit_count < 1 || digit_count > kMaxDecimalDigits) {
    throw ValidationError("format " + name + ": digit count out of range");
  }
  const uint128 size = Pow128(10, digit_count);
  return FormatSpec(
      std::move(name), size,
      [digit_count](std::string_view s) {
        return static_cast<int>(s.size()) == digit_count && AllDigits(s);
      },
      [](std::string_view s) { return Uint128FromDecimal(s); },
      [digit_count](uint128 i) { return Uint128ToDecimal(i, digit_count); });
}

FormatSpec SkeletonFormat(std::string name, std::string skeleton) {
  const int slots = DigitSlots(skeleton);
  if (slots < 1 || slots > kMaxDecimalDigits) {
    throw ValidationError("format " + name + ": skeleton needs 1.." +
                          std::to_string(kMaxDecimalDigits) + " digit slots");
  }
  const uint128 size = Pow128(10, slots);
  auto skel = std::make_shared<std::string>(std::move(skeleton));
  return FormatSpec(
      std::move(name), size,
      [skel](std::string_view s) { return MatchesSkeleton(*skel, s); },
      [skel](std::string_view s) { return Uint128FromDecimal(StripSkeleton(*skel, s)); },
      [skel, slots](uint128 i) { return FillSkeleton(*skel, Uint128ToDecimal(i, slots)); });
}

FormatSpec NumericRangeFormat(std::string name, std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || lo >= hi) throw ValidationError("format " + name + ": need 0 <= lo < hi");
  const uint128 size = static_cast<uint128>(hi - lo + 1);
  return FormatSpec(
      std::move(name), size,
      [lo, hi](std::string_view s) {
        if (!AllDigits(s) || s.size() > 19) return false;
        if (s.size() > 1 && s.front() == '0') return false;
        const std::int64_t v = static_cast<std::int64_t>(Uint128FromDecimal(s));
        return v >= lo && v <= hi;
      },
      [lo](std::string_view s) { return Uint128FromDecimal(s) - static_cast<uint128>(lo); },
      [lo](uint128 i) {
        return Uint128ToDecimal(i + static_cast<uint128>(lo));
      });
}

FormatSpec DateFormat(std::string name) {
  auto parse = [](std::string_view s, int* y, int* m, int* d) {
    if (!MatchesSkeleton("##/##/####", s)) return false;
    *m = (s[0] - '0') * 10 + (s[1] - '0');
    *d = (s[3] - '0') * 10 + (s[4] - '0');
    *y = (s[6] - '0') * 1000 + (s[7] - '0') * 100 + (s[8] - '0') * 10 + (s[9] - '0');
    if (*y < 1900 || *y > 2099) return false;
    if (*m < 1 || *m > 12) return false;
    return *d >= 1 && *d <= DaysInMonth(*y, *m);
  };
  return FormatSpec(
      std::move(name), static_cast<uint128>(kDateDomainSize),
      [parse](std::string_view s) {
        int y, m, d;
        return parse(s, &y, &m, &d);
      },
      [parse](std::string_view s) {
        int y, m, d;
        parse(s, &y, &m, &d);
        return static_cast<uint128>(DayNumber(y, m, d));
      },
      [](uint128 i) {
        int y, m, d;
        DateFromDayNumber(static_cast<std::int64_t>(i), &y, &m, &d);
        char buf[11];
        std::snprintf(buf, sizeof(buf), "%02d/%02d/%04d", m, d, y);
        return std::string(buf);
      });
}

FormatSpec EnumFormat(std::string name, std::vector<std::string> values) {
  auto list = std::make_shared<std::vector<std::string>>(std::move(values));
  auto index = std::make_shared<std::map<std::string, uint128, std::less<>>>();
  for (std::size_t i = 0; i < list->size(); ++i) {
    if (!index->emplace((*list)[i], static_cast<uint128>(i)).second) {
      throw ValidationError("format " + name + ": duplicate enum value '" + (*list)[i] + "'");
    }
  }
  return FormatSpec(
      std::move(name), static_cast<uint128>(list->size()),
      [index](std::string_view s) { return index->find(s) != index->end(); },
      [index](std::string_view s) { return index->find(s)->second; },
      [list](uint128 i) { return (*list)[static_cast<std::size_t>(i)]; });
}

FormatSpec AlnumFormat(std::string name, int length) {
  if (length < 1 || length > 21) {
    throw ValidationError("format " + name + ": alnum length must be 1..21");
  }
  const uint128 size = Pow128(62, length);
  return FormatSpec(
      std::move(name), size,
      [length](std::string_view s) {
        return static_cast<int>(s.size()) == length &&
               std::all_of(s.begin(), s.end(), [](char c) { return AlnumIndex(c) >= 0; });
      },
      [](std::string_view s) {
        uint128 v = 0;
        for (char c : s) v = v * 62 + static_cast<uint128>(AlnumIndex(c));
        return v;
      },
      [length](uint128 i) {
        std::string out(static_cast<std::size_t>(length), '0');
        for (int pos = length - 1; pos >= 0; --pos) {
          out[static_cast<std::size_t>(pos)] = kAlnumAlphabet[static_cast<int>(i % 62)];
          i /= 62;
        }
        return out;
      });
}

int LuhnCheckDigit(std::string_view digits15) {
  // Doubling starts from the rightmost digit of the full number, which is
  // the check digit itself; the digit immediately left of it doubles.
  int sum = 0;
  bool twice = true;
  for (auto it = digits15.rbegin(); it != digits15.rend(); ++it) {
    int d = *it - '0';
    if (twice) {
      d *= 2;
      if (d > 9) d -= 9;
    }
    sum += d;
    twice = !twice;
  }
  return (10 - sum % 10) % 10;
}

bool LuhnValid(std::string_view digits16) {
  if (digits16.size() < 2) return false;
  return LuhnCheckDigit(digits16.substr(0, digits16.size() - 1)) == digits16.back() - '0';
}

FormatSpec CreditCardFormat(std::string name, std::string skeleton, bool luhn) {
  if (!luhn) return SkeletonFormat(std::move(name), std::move(skeleton));
  const int slots = DigitSlots(skeleton);
  if (slots != 16) throw ValidationError("format " + name + ": Luhn skeleton needs 16 digits");
  const uint128 size = Pow128(10, 15);
  auto skel = std::make_shared<std::string>(std::move(skeleton));
  return FormatSpec(
      std::move(name), size,
      [skel](std::string_view s) {
        return MatchesSkeleton(*skel, s) && LuhnValid(StripSkeleton(*skel, s));
      },
      [skel](std::string_view s) {
        const std::string digits = StripSkeleton(*skel, s);
        return Uint128FromDecimal(std::string_view(digits).substr(0, 15));
      },
      [skel](uint128 i) {
        std::string digits = Uint128ToDecimal(i, 15);
        digits += static_cast<char>('0' + LuhnCheckDigit(digits));
        return FillSkeleton(*skel, digits);
      });
}

}  // namespace promptsan::fpe
