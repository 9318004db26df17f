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

// Drives the installed binary in fresh processes: every command is its own
// session, which is exactly the contract under test.

#include <gtest/gtest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace {

namespace fs = std::filesystem;

std::string CliPath() {
  const char* path = std::getenv("PROMPTSAN_CLI");
  if (path == nullptr || path[0] == '\0') {
    ADD_FAILURE() << "PROMPTSAN_CLI not set; run via ctest";
    return "";
  }
  return path;
}

int RunCli(const std::string& args) {
  const std::string cmd = CliPath() + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("promptsan_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    ASSERT_EQ(RunCli("register --key " + (dir_ / "k.key").string() + " --out " +
                  (dir_ / "c.json").string()),
              0);
    config_ = " --config " + (dir_ / "c.json").string() + " ";
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  std::string config_;
};

TEST_F(CliTest, RegisterWritesKeyAndConfigOnly) {
  std::set<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    names.insert(entry.path().filename().string());
  }
  EXPECT_EQ(names, (std::set<std::string>{"k.key", "c.json"}));
}

TEST_F(CliTest, SanitizeDesanitizeRoundTrip) {
  WriteFile(dir_ / "p.txt", "My SSN is 055-46-6168 and zip code is 10001.");
  ASSERT_EQ(RunCli("sanitize" + config_ + (dir_ / "p.txt").string() + " --out " +
                (dir_ / "s.txt").string()),
            0);
  const std::string sanitized = ReadFile(dir_ / "s.txt");
  EXPECT_EQ(sanitized.find("055-46-6168"), std::string::npos);
  ASSERT_EQ(RunCli("desanitize" + config_ + (dir_ / "s.txt").string() + " --out " +
                (dir_ / "d.txt").string()),
            0);
  EXPECT_EQ(ReadFile(dir_ / "d.txt"), "My SSN is 055-46-6168 and zip code is 10001.");
}

TEST_F(CliTest, SeededSanitizationIsDeterministic) {
  WriteFile(dir_ / "p.txt", "My age is 44 years and salary of $5,000.");
  ASSERT_EQ(RunCli("sanitize" + config_ + (dir_ / "p.txt").string() + " --seed 7 --out " +
                (dir_ / "s1.txt").string()),
            0);
  ASSERT_EQ(RunCli("sanitize" + config_ + (dir_ / "p.txt").string() + " --seed 7 --out " +
                (dir_ / "s2.txt").string()),
            0);
  ASSERT_EQ(RunCli("sanitize" + config_ + (dir_ / "p.txt").string() + " --seed 8 --out " +
                (dir_ / "s3.txt").string()),
            0);
  EXPECT_EQ(ReadFile(dir_ / "s1.txt"), ReadFile(dir_ / "s2.txt"));
  EXPECT_NE(ReadFile(dir_ / "s1.txt"), ReadFile(dir_ / "s3.txt"));
}

TEST_F(CliTest, ReportTravelsSeparatelyFromText) {
  WriteFile(dir_ / "p.txt", "My age is 87 years.");
  ASSERT_EQ(RunCli("sanitize" + config_ + (dir_ / "p.txt").string() + " --seed 1 --out " +
                (dir_ / "s.txt").string()),
            0);
  const std::string report = ReadFile(dir_ / "s.txt.report.jsonl");
  EXPECT_NE(report.find("\"mechanism\":\"mldp\""), std::string::npos);
  EXPECT_EQ(report.find("87"), std::string::npos);  // no plaintext values
  const std::string sanitized = ReadFile(dir_ / "s.txt");
  EXPECT_EQ(sanitized.find("mechanism"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(RunCli("no-such-command"), 1);
  EXPECT_EQ(RunCli("sanitize"), 1);  // missing required --config
}

TEST_F(CliTest, ValidationErrorsExitTwo) {
  WriteFile(dir_ / "bad.json", "{\"epsilon_total\": 1.0}");
  WriteFile(dir_ / "p.txt", "hello");
  EXPECT_EQ(RunCli("sanitize --config " + (dir_ / "bad.json").string() + " " +
                (dir_ / "p.txt").string()),
            2);
  EXPECT_EQ(RunCli("sanitize" + config_ + (dir_ / "p.txt").string() + " --epsilon 0"), 2);
}

TEST_F(CliTest, GameRunsOnPairFile) {
  WriteFile(dir_ / "pair.txt", "My age is 40 years.\n---\nMy age is 45 years.\n");
  ASSERT_EQ(RunCli("game" + config_ + "--pair " + (dir_ / "pair.txt").string() +
                " --trials 200 --seed 5 --out " + (dir_ / "g.csv").string()),
            0);
  const std::string csv = ReadFile(dir_ / "g.csv");
  EXPECT_NE(csv.find("empirical_advantage"), std::string::npos);
}

TEST_F(CliTest, EvalRunsOnCorpus) {
  std::ostringstream corpus;
  corpus << R"({"prompt": "Record SSN 055-46-6168. What is the SSN?", "answer": "055-46-6168"})"
         << "\n"
         << R"({"prompt": "Record SSN 123-45-6789. What is the SSN?", "answer": "123-45-6789"})"
         << "\n";
  WriteFile(dir_ / "corpus.jsonl", corpus.str());
  ASSERT_EQ(RunCli("eval" + config_ + "--corpus " + (dir_ / "corpus.jsonl").string() +
                " --oracle retrieve-field:SSN --scoring exact --out " +
                (dir_ / "e.csv").string()),
            0);
  const std::string csv = ReadFile(dir_ / "e.csv");
  EXPECT_NE(csv.find("sanitized,2,1,1,1"), std::string::npos);
}

TEST_F(CliTest, FormatsListsRegistry) {
  const std::string cmd = CliPath() + " formats --config " + (dir_ / "c.json").string() +
                          " > " + (dir_ / "formats.txt").string() + " 2>/dev/null";
  ASSERT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  const std::string listing = ReadFile(dir_ / "formats.txt");
  EXPECT_NE(listing.find("SSN"), std::string::npos);
  EXPECT_NE(listing.find("tiny domain"), std::string::npos);  // Sex enum warns
}

// No files appear beyond those explicitly requested.
TEST_F(CliTest, NoStrayFilesAfterCommands) {
  WriteFile(dir_ / "p.txt", "My SSN is 055-46-6168.");
  ASSERT_EQ(RunCli("sanitize" + config_ + (dir_ / "p.txt").string() + " --out " +
                (dir_ / "s.txt").string()),
            0);
  ASSERT_EQ(RunCli("desanitize" + config_ + (dir_ / "s.txt").string() + " --out " +
                (dir_ / "d.txt").string()),
            0);
  std::set<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    names.insert(entry.path().filename().string());
  }
  EXPECT_EQ(names, (std::set<std::string>{"k.key", "c.json", "p.txt", "s.txt",
                                          "s.txt.report.jsonl", "d.txt"}));
}

}  // namespace
