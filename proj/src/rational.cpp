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

#include "promptsan/rational.hpp"

#include <algorithm>

namespace promptsan {
namespace {

using Int = Rational::Int;

Int Gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string IntToString(Int v) {
  const bool neg = v < 0;
  if (neg) v = -v;
  std::string out;
  do {
    out += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  } while (v != 0);
  if (neg) out += '-';
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Rational::Rational(Int num, Int den) : num_(num), den_(den) {
  if (den_ == 0) throw TransformError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const Int g = Gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::FromDecimalString(std::string_view text) {
  if (text.empty()) throw TransformError("empty numeric literal");
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  Int num = 0;
  Int den = 1;
  bool saw_digit = false;
  bool in_fraction = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (in_fraction) throw TransformError("numeric literal with two decimal points");
      in_fraction = true;
      continue;
    }
    if (c < '0' || c > '9') throw TransformError("bad numeric literal: " + std::string(text));
    saw_digit = true;
    num = num * 10 + (c - '0');
    if (in_fraction) den *= 10;
  }
  if (!saw_digit) throw TransformError("bad numeric literal: " + std::string(text));
  return Rational(neg ? -num : num, den);
}

std::string Rational::ToDecimalString(int min_places, int max_places, bool* exact) const {
  if (exact != nullptr) *exact = true;
  const bool neg = num_ < 0;
  const Int n = neg ? -num_ : num_;
  Int whole = n / den_;
  Int rem = n % den_;
  std::string digits;
  for (int place = 0; place < max_places && rem != 0; ++place) {
    rem *= 10;
    digits += static_cast<char>('0' + static_cast<int>(rem / den_));
    rem %= den_;
  }
  if (rem != 0) {
    // Round the last emitted place; flag inexact.
    if (exact != nullptr) *exact = false;
    if (rem * 2 >= den_) {
      int i = static_cast<int>(digits.size()) - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') {
        digits[static_cast<std::size_t>(i--)] = '0';
      }
      if (i >= 0) {
        ++digits[static_cast<std::size_t>(i)];
      } else {
        ++whole;
      }
    }
  }
  while (static_cast<int>(digits.size()) < min_places) digits += '0';
  while (static_cast<int>(digits.size()) > min_places && !digits.empty() && digits.back() == '0') {
    digits.pop_back();
  }
  std::string out = IntToString(whole);
  if (!digits.empty()) out += "." + digits;
  if (neg) out = "-" + out;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw TransformError("division by zero in transform");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace promptsan
