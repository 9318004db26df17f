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

#include "promptsan/utf8.hpp"

namespace promptsan::utf8 {
namespace {

inline bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

std::size_t Length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if (!IsContinuation(c)) ++n;
  }
  return n;
}

std::size_t ByteOffset(std::string_view s, std::size_t char_pos) {
  std::size_t chars = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!IsContinuation(static_cast<unsigned char>(s[i]))) {
      if (chars == char_pos) return i;
      ++chars;
    }
  }
  return s.size();
}

std::size_t CharOffset(std::string_view s, std::size_t byte_pos) {
  if (byte_pos > s.size()) byte_pos = s.size();
  std::size_t chars = 0;
  for (std::size_t i = 0; i < byte_pos; ++i) {
    if (!IsContinuation(static_cast<unsigned char>(s[i]))) ++chars;
  }
  return chars;
}

std::string Substr(std::string_view s, std::size_t char_pos, std::size_t char_count) {
  const std::size_t begin = ByteOffset(s, char_pos);
  const std::size_t end = ByteOffset(s, char_pos + char_count);
  return std::string(s.substr(begin, end - begin));
}

}  // namespace promptsan::utf8
