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

#ifndef PROMPTSAN_FORMATS_HPP_
#define PROMPTSAN_FORMATS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "promptsan/fpe.hpp"

// Builders for the rankable formats used by the default type registry.
// Each returns a FormatSpec whose rank/unrank maps are mutual inverses over
// the whole domain.

namespace promptsan::fpe {

// All digit strings of exactly `digit_count` characters, leading zeros
// included. Size 10^digit_count.
FormatSpec DigitStringFormat(std::string name, int digit_count);

// Digits embedded in a fixed skeleton; '#' marks a digit position, any other
// character is a literal ("###-##-####" for SSNs).
FormatSpec SkeletonFormat(std::string name, std::string skeleton);

// Decimal integers lo..hi, rendered without leading zeros.
FormatSpec NumericRangeFormat(std::string name, std::int64_t lo, std::int64_t hi);

// Valid Gregorian MM/DD/YYYY dates from 01/01/1900 through 12/31/2099.
FormatSpec DateFormat(std::string name);

// A fixed finite set of strings (tiny domains; the CLI warns below 100).
FormatSpec EnumFormat(std::string name, std::vector<std::string> values);

// Alphanumeric strings [0-9A-Za-z] of exactly `length` characters,
// length <= 21 so ranks fit the integer cipher.
FormatSpec AlnumFormat(std::string name, int length);

// 16-digit card numbers in a skeleton; the first 15 digits are enciphered
// and the 16th is recomputed as the Luhn check digit. With luhn == false the
// full 16 digits are enciphered as-is.
FormatSpec CreditCardFormat(std::string name, std::string skeleton, bool luhn);

// Luhn check digit for a digit string (check digit excluded from input).
int LuhnCheckDigit(std::string_view digits15);
bool LuhnValid(std::string_view digits16);

}  // namespace promptsan::fpe

#endif  // PROMPTSAN_FORMATS_HPP_
