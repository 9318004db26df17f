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

#include "promptsan/llm_client.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <functional>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "promptsan/pipeline.hpp"

namespace promptsan::llm {
namespace {

using nlohmann::json;

// In-process chat-completions stub. Each test installs a handler that maps
// the request body to (status, body).
class StubServer {
 public:
  using Handler = std::function<std::pair<int, std::string>(const std::string& body)>;

  explicit StubServer(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      last_body_ = req.body;
      last_auth_ = req.get_header_value("Authorization");
      const auto [status, body] = handler_(req.body);
      res.status = status;
      res.set_content(body, "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~StubServer() {
    server_.stop();
    thread_.join();
  }

  std::string endpoint() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
  }

  const std::string& last_body() const { return last_body_; }
  const std::string& last_auth() const { return last_auth_; }

 private:
  Handler handler_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::string last_body_;
  std::string last_auth_;
};

std::string ChatBody(const std::string& content) {
  json reply;
  reply["choices"] = json::array({json{{"message", json{{"content", content}}}}});
  return reply.dump();
}

ChatRequest BaseRequest(const StubServer& server) {
  ChatRequest request;
  request.endpoint = server.endpoint();
  request.model = "stub-model";
  request.timeout = std::chrono::seconds(5);
  return request;
}

TEST(ChatTest, EchoRoundTrip) {
  StubServer server([](const std::string& body) {
    const json doc = json::parse(body);
    return std::make_pair(200, ChatBody(doc.at("messages").at(0).at("content")));
  });
  ChatRequest request = BaseRequest(server);
  request.messages = {{"user", "hello sanitized world"}};
  const ChatResult result = Chat(request);
  EXPECT_EQ(result.content, "hello sanitized world");
  EXPECT_EQ(result.retries, 0);
}

TEST(ChatTest, UnauthorizedRaisesAuthError) {
  StubServer server([](const std::string&) { return std::make_pair(401, "{}"); });
  ChatRequest request = BaseRequest(server);
  request.messages = {{"user", "hi"}};
  EXPECT_THROW(Chat(request), AuthError);
}

TEST(ChatTest, RetriesTransientFailuresThenSucceeds) {
  std::atomic<int> calls{0};
  StubServer server([&calls](const std::string&) {
    const int n = ++calls;
    if (n <= 2) return std::make_pair(500, std::string("{}"));
    return std::make_pair(200, ChatBody("recovered"));
  });
  ChatRequest request = BaseRequest(server);
  request.messages = {{"user", "hi"}};
  const ChatResult result = Chat(request);
  EXPECT_EQ(result.content, "recovered");
  EXPECT_EQ(result.retries, 2);
  EXPECT_EQ(calls.load(), 3);
}

TEST(ChatTest, ExhaustedRetriesRaiseTimeout) {
  StubServer server([](const std::string&) { return std::make_pair(500, std::string("{}")); });
  ChatRequest request = BaseRequest(server);
  request.messages = {{"user", "hi"}};
  request.max_retries = 1;
  EXPECT_THROW(Chat(request), TimeoutError);
}

TEST(ChatTest, MalformedBodyRaisesProtocolError) {
  StubServer server([](const std::string&) {
    return std::make_pair(200, std::string("{\"unexpected\": true}"));
  });
  ChatRequest request = BaseRequest(server);
  request.messages = {{"user", "hi"}};
  EXPECT_THROW(Chat(request), ProtocolError);
}

TEST(NerTemplateTest, MoneyTemplateKeepsSeparatorInstruction) {
  const std::string prompt = NerPromptFor(SensitiveType(SensitiveType::Kind::kMoney));
  EXPECT_NE(prompt.find("WITHOUT changing commas or decimal points"), std::string::npos);
  EXPECT_NE(prompt.find("{'Money': ['Money_1', 'Money_2']}"), std::string::npos);
}

TEST(NerTemplateTest, NameAndGenericTemplates) {
  const std::string name = NerPromptFor(SensitiveType(SensitiveType::Kind::kName));
  EXPECT_NE(name.find("names of people"), std::string::npos);
  EXPECT_NE(name.find("{'Name': ['Name_1', 'Name_2']}"), std::string::npos);
  const std::string other = NerPromptFor(SensitiveType(SensitiveType::Kind::kZipcode));
  EXPECT_NE(other.find("'Zipcode'"), std::string::npos);
}

TEST(NerViaLlmTest, ParsesDictionaryReply) {
  StubServer server([](const std::string&) {
    return std::make_pair(200, ChatBody("{'Name': ['Kaiser Soze']}"));
  });
  const annotate::NerEntityMap map =
      NerViaLlm("Kaiser Soze is 50 years old", SensitiveType(SensitiveType::Kind::kName),
                BaseRequest(server));
  ASSERT_EQ(map.count("Name"), 1u);
  ASSERT_EQ(map.at("Name").size(), 1u);
  EXPECT_EQ(map.at("Name")[0], "Kaiser Soze");
}

TEST(NerViaLlmTest, ProseReplyIsBackendError) {
  StubServer server(
      [](const std::string&) { return std::make_pair(200, ChatBody("I cannot help with that")); });
  EXPECT_THROW(NerViaLlm("text", SensitiveType(SensitiveType::Kind::kName), BaseRequest(server)),
               NerBackendError);
}

// The outbound body must never contain the original sensitive surface: only
// sanitized text goes over the wire.
TEST(ChatTest, OutboundBodyCarriesNoPlaintextTokens) {
  StubServer server([](const std::string&) { return std::make_pair(200, ChatBody("ok")); });

  const SanitizerConfig config = DefaultConfig(SanitizerKey::FromHex(std::string(64, 'c')));
  const annotate::RecognizerSet pack = annotate::DefaultPatternPack();
  const std::vector<std::string> secrets = {"055-46-6168", "555-123-4567", "4532 0151 1283 0366"};
  const std::string prompt = "SSN " + secrets[0] + ", phone " + secrets[1] + ", card " +
                             secrets[2] + ".";
  const TypedSequence typed = annotate::Annotate(prompt, pack);
  std::mt19937_64 rng(3);
  const pipeline::SanitizedPrompt sanitized = pipeline::Sanitize(config, typed, {}, rng);

  ChatRequest request = BaseRequest(server);
  request.messages = {{"user", sanitized.text}};
  (void)Chat(request);

  for (const std::string& secret : secrets) {
    EXPECT_EQ(server.last_body().find(secret), std::string::npos) << secret;
  }
  EXPECT_NE(server.last_body().find("SSN"), std::string::npos);  // skeleton still travels
}

TEST(ChatTest, TokenFromEnvironmentTravelsAsBearer) {
  StubServer server([](const std::string&) { return std::make_pair(200, ChatBody("ok")); });
  ::setenv(kTokenEnvVar, "sekrit-token", 1);
  ChatRequest request = BaseRequest(server);
  request.messages = {{"user", "hi"}};
  (void)Chat(request);
  ::unsetenv(kTokenEnvVar);
  EXPECT_EQ(server.last_auth(), "Bearer sekrit-token");
}

}  // namespace
}  // namespace promptsan::llm
