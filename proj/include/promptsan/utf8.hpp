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

#ifndef PROMPTSAN_UTF8_HPP_
#define PROMPTSAN_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

// Token spans are character (Unicode scalar) offsets, not byte offsets, so
// annotations survive multibyte text. These helpers translate between the
// two coordinate systems; invalid UTF-8 bytes are treated as one character
// each so no input can make the mapping throw.

namespace promptsan::utf8 {

// Number of characters in `s`.
std::size_t Length(std::string_view s);

// Byte offset of the character at position `char_pos` (clamped to s.size()).
std::size_t ByteOffset(std::string_view s, std::size_t char_pos);

// Character position containing the byte at `byte_pos`.
std::size_t CharOffset(std::string_view s, std::size_t byte_pos);

// Substring by character coordinates, like std::string::substr.
std::string Substr(std::string_view s, std::size_t char_pos, std::size_t char_count);

}  // namespace promptsan::utf8

#endif  // PROMPTSAN_UTF8_HPP_
