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

#ifndef PROMPTSAN_NAMES_HPP_
#define PROMPTSAN_NAMES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "promptsan/fpe.hpp"
#include "promptsan/types.hpp"

// Name-index encoding: full names rank to a six-digit number (first-name
// index 000-999 concatenated with last-name index 000-999) over two curated
// lists of exactly 1000 entries each. Names absent from a list replace its
// slot 999 for the duration of one mapping context; single first (or last)
// names pair with the configured default last (or first) name.

namespace promptsan::fpe {

std::vector<std::string> BuiltinFirstNames();
std::vector<std::string> BuiltinLastNames();

class NameIndex {
 public:
  static constexpr std::size_t kListSize = 1000;

  NameIndex(std::vector<std::string> first_names, std::vector<std::string> last_names);
  static NameIndex BuiltIn();
  // Plain-text files, one name per line, exactly 1000 lines each.
  static NameIndex FromFiles(const std::filesystem::path& first_path,
                             const std::filesystem::path& last_path);

  const std::vector<std::string>& first_names() const { return first_names_; }
  const std::vector<std::string>& last_names() const { return last_names_; }
  const std::string& default_first() const { return first_names_[0]; }
  const std::string& default_last() const { return last_names_[0]; }
  bool HasFirst(std::string_view name) const { return first_index_.count(name) != 0; }
  bool HasLast(std::string_view name) const { return last_index_.count(name) != 0; }

 private:
  std::vector<std::string> first_names_;
  std::vector<std::string> last_names_;
  friend class NameSession;
  std::map<std::string, int, std::less<>> first_index_;
  std::map<std::string, int, std::less<>> last_index_;
};

// One sanitize/desanitize call's mapping context over a NameIndex. Unknown
// names overwrite slot 999 here, never in the shared index, so nothing
// survives the call (the stateless contract).
class NameSession {
 public:
  explicit NameSession(const NameIndex* index) : index_(index) {}

  int RankFirst(std::string_view name);  // 0..999; unknown names claim 999
  int RankLast(std::string_view name);
  const std::string& FirstAt(int i) const;
  const std::string& LastAt(int i) const;

  const NameIndex& index() const { return *index_; }

 private:
  const NameIndex* index_;
  std::string first_override_;  // occupant of slot 999, when claimed
  std::string last_override_;
};

// Six-digit rank of a full name ("First Last"; single words pair with the
// defaults). Total by construction.
std::int64_t RankName(std::string_view full_name, NameSession& session);
std::string UnrankName(std::int64_t rank, const NameSession& session);

std::string EncryptName(const SanitizerKey& key, const Tweak& tweak, std::string_view full_name,
                        NameSession& session);
std::string DecryptName(const SanitizerKey& key, const Tweak& tweak, std::string_view full_name,
                        NameSession& session);

}  // namespace promptsan::fpe

#endif  // PROMPTSAN_NAMES_HPP_
