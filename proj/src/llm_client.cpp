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

#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace promptsan::llm {
namespace {

using nlohmann::json;

struct ParsedUrl {
  std::string host_port;  // scheme://host:port
  std::string path;
};

ParsedUrl SplitUrl(const std::string& endpoint) {
  const auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw ValidationError("endpoint: expected scheme://host[:port]/path");
  }
  const auto path_start = endpoint.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

std::string RequestBody(const ChatRequest& request) {
  json body;
  body["model"] = request.model;
  body["temperature"] = request.temperature;
  json messages = json::array();
  for (const ChatMessage& m : request.messages) {
    messages.push_back({{"role", m.role}, {"content", m.content}});
  }
  body["messages"] = messages;
  return body.dump();
}

std::string ExtractContent(const std::string& body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw ProtocolError("chat: response body is not JSON");
  try {
    return doc.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception&) {
    throw ProtocolError("chat: response body has no choices[0].message.content");
  }
}

}  // namespace

ChatResult Chat(const ChatRequest& request) {
  const char* token = std::getenv(kTokenEnvVar);
  const ParsedUrl url = SplitUrl(request.endpoint);

  const std::string body = RequestBody(request);
  httplib::Headers headers;
  if (token != nullptr && token[0] != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }

  ChatResult result;
  std::chrono::milliseconds backoff(100);
  for (int attempt = 0; attempt <= request.max_retries; ++attempt) {
    httplib::Client client(url.host_port);
    const auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(request.timeout);
    client.set_connection_timeout(std::max<long>(1, secs.count()), 0);
    client.set_read_timeout(std::max<long>(1, secs.count()), 0);

    httplib::Result response = client.Post(url.path, headers, body, "application/json");
    if (response) {
      if (response->status == 401 || response->status == 403) {
        throw AuthError("chat: endpoint rejected credentials (status " +
                        std::to_string(response->status) + ")");
      }
      if (response->status >= 200 && response->status < 300) {
        result.content = ExtractContent(response->body);
        result.retries = attempt;
        return result;
      }
      if (response->status < 500) {
        throw ProtocolError("chat: unexpected status " + std::to_string(response->status));
      }
      // 5xx falls through to retry.
    }
    if (attempt == request.max_retries) break;
    std::this_thread::sleep_for(backoff);
    backoff *= 2;
  }
  throw TimeoutError("chat: no successful response after " +
                     std::to_string(request.max_retries + 1) + " attempts");
}

std::string NerPromptFor(const SensitiveType& entity) {
  switch (entity.kind()) {
    case SensitiveType::Kind::kName:
      return "Please find words that can be identified as names of people from the given "
             "text. Format the output as a dictionary of lists: {'Name': ['Name_1', "
             "'Name_2']}. Do NOT provide any additional text.";
    case SensitiveType::Kind::kMoney:
      return "Please find currency values from the given text. Do not provide the currency, "
             "only provide the value, WITHOUT changing commas or decimal points. Format the "
             "output as a dictionary of lists: {'Money': ['Money_1', 'Money_2']}. Do NOT "
             "provide any additional text.";
    default: {
      const std::string label = entity.name();
      return "Please find words that can be identified as '" + label +
             "' from the given text. Format the output as a dictionary of lists: {'" + label +
             "': ['" + label + "_1', '" + label +
             "_2']}. Do NOT provide any additional text.";
    }
  }
}

annotate::NerEntityMap NerViaLlm(const std::string& text, const SensitiveType& entity,
                                 const ChatRequest& base_request) {
  ChatRequest request = base_request;
  request.messages.push_back({"system", NerPromptFor(entity)});
  request.messages.push_back({"user", text});
  try {
    const ChatResult reply = Chat(request);
    return annotate::ParseNerResponse(reply.content, entity.name());
  } catch (const NerParseError& e) {
    throw NerBackendError(std::string("NER reply unparseable: ") + e.what());
  } catch (const AuthError&) {
    throw;
  } catch (const Error& e) {
    throw NerBackendError(std::string("NER transport failed: ") + e.what());
  }
}

}  // namespace promptsan::llm
