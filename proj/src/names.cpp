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

#include "promptsan/names.hpp"

#include <fstream>
#include <utility>

namespace promptsan::fpe {
namespace {

constexpr int kOverrideSlot = 999;
constexpr std::int64_t kNameDomain = 1000000;

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open name list: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

NameIndex::NameIndex(std::vector<std::string> first_names, std::vector<std::string> last_names)
    : first_names_(std::move(first_names)), last_names_(std::move(last_names)) {
  if (first_names_.size() != kListSize) {
    throw ValidationError("first name list: expected exactly 1000 entries, got " +
                          std::to_string(first_names_.size()));
  }
  if (last_names_.size() != kListSize) {
    throw ValidationError("last name list: expected exactly 1000 entries, got " +
                          std::to_string(last_names_.size()));
  }
  for (int i = 0; i < static_cast<int>(kListSize); ++i) {
    first_index_.emplace(first_names_[static_cast<std::size_t>(i)], i);
    last_index_.emplace(last_names_[static_cast<std::size_t>(i)], i);
  }
}

NameIndex NameIndex::BuiltIn() { return NameIndex(BuiltinFirstNames(), BuiltinLastNames()); }

NameIndex NameIndex::FromFiles(const std::filesystem::path& first_path,
                               const std::filesystem::path& last_path) {
  return NameIndex(ReadLines(first_path), ReadLines(last_path));
}

int NameSession::RankFirst(std::string_view name) {
  if (!first_override_.empty() && first_override_ == name) return kOverrideSlot;
  auto it = index_->first_index_.find(name);
  if (it != index_->first_index_.end()) return it->second;
  first_override_ = std::string(name);
  return kOverrideSlot;
}

int NameSession::RankLast(std::string_view name) {
  if (!last_override_.empty() && last_override_ == name) return kOverrideSlot;
  auto it = index_->last_index_.find(name);
  if (it != index_->last_index_.end()) return it->second;
  last_override_ = std::string(name);
  return kOverrideSlot;
}

const std::string& NameSession::FirstAt(int i) const {
  if (i == kOverrideSlot && !first_override_.empty()) return first_override_;
  return index_->first_names()[static_cast<std::size_t>(i)];
}

const std::string& NameSession::LastAt(int i) const {
  if (i == kOverrideSlot && !last_override_.empty()) return last_override_;
  return index_->last_names()[static_cast<std::size_t>(i)];
}

std::int64_t RankName(std::string_view full_name, NameSession& session) {
  std::string_view first = full_name;
  std::string_view last;
  const auto split = full_name.find_last_of(' ');
  if (split != std::string_view::npos) {
    first = full_name.substr(0, full_name.find(' '));
    last = full_name.substr(split + 1);
  }
  if (last.empty()) {
    // One-word name: decide which list it belongs to, default the other.
    const std::string one(first);
    if (session.index().HasLast(one) && !session.index().HasFirst(one)) {
      return RankName(session.index().default_first() + " " + one, session);
    }
    return RankName(one + " " + session.index().default_last(), session);
  }
  const std::int64_t fi = session.RankFirst(first);
  const std::int64_t li = session.RankLast(last);
  return fi * 1000 + li;
}

std::string UnrankName(std::int64_t rank, const NameSession& session) {
  const int fi = static_cast<int>(rank / 1000);
  const int li = static_cast<int>(rank % 1000);
  return session.FirstAt(fi) + " " + session.LastAt(li);
}

std::string EncryptName(const SanitizerKey& key, const Tweak& tweak, std::string_view full_name,
                        NameSession& session) {
  const std::int64_t rank = RankName(full_name, session);
  const uint128 cipher =
      EncryptIndex(key, tweak, static_cast<uint128>(kNameDomain), static_cast<uint128>(rank));
  return UnrankName(static_cast<std::int64_t>(cipher), session);
}

std::string DecryptName(const SanitizerKey& key, const Tweak& tweak, std::string_view full_name,
                        NameSession& session) {
  const std::int64_t rank = RankName(full_name, session);
  const uint128 plain =
      DecryptIndex(key, tweak, static_cast<uint128>(kNameDomain), static_cast<uint128>(rank));
  return UnrankName(static_cast<std::int64_t>(plain), session);
}

}  // namespace promptsan::fpe
