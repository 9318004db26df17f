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

#ifndef PROMPTSAN_RATIONAL_HPP_
#define PROMPTSAN_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "promptsan/errors.hpp"

// Exact rational arithmetic for derived-token transforms, so helper-string
// consistency is checkable with equality rather than tolerances.

namespace promptsan {

class Rational {
 public:
  using Int = __int128;

  constexpr Rational() = default;
  Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  // Parses "123", "-4.5", "0.25" exactly.
  static Rational FromDecimalString(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool IsInteger() const { return den_ == 1; }
  bool IsNegative() const { return num_ < 0; }
  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Exact decimal expansion when the denominator is 2^a * 5^b (up to
  // max_places digits); otherwise rounds to max_places and sets *exact to
  // false when provided.
  std::string ToDecimalString(int min_places, int max_places = 12, bool* exact = nullptr) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws TransformError on /0
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace promptsan

#endif  // PROMPTSAN_RATIONAL_HPP_
