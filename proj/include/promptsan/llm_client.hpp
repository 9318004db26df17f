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

#ifndef PROMPTSAN_LLM_CLIENT_HPP_
#define PROMPTSAN_LLM_CLIENT_HPP_

#include <chrono>
#include <string>
#include <vector>

#include "promptsan/annotate.hpp"
#include "promptsan/types.hpp"

// Minimal chat-completion client for the sanitized-prompt -> LLM -> response
// loop and for LLM-backed NER. The wire shape is the de-facto
// chat-completions body (messages array in, choices array out) so any
// compatible endpoint works. The auth token comes from the environment only
// and is never serialized or logged. Everything else in this project runs
// without this module.

namespace promptsan::llm {

inline constexpr const char* kTokenEnvVar = "LLM_API_TOKEN";

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct ChatRequest {
  std::string endpoint;  // e.g. "http://localhost:8080/v1/chat/completions"
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  std::chrono::milliseconds timeout = std::chrono::seconds(30);
  int max_retries = 3;  // on transient failures, exponential backoff
};

struct ChatResult {
  std::string content;  // first choice's message content
  int retries = 0;
};

// POSTs the request; retries timeouts and 5xx up to max_retries with
// exponential backoff. Throws AuthError (401/403), TimeoutError (deadline
// exhausted), ProtocolError (unparseable body or unexpected status).
ChatResult Chat(const ChatRequest& request);

// The per-entity NER request prompt (Name and Money have dedicated
// wordings; everything else uses the generic template).
std::string NerPromptFor(const SensitiveType& entity);

// One NER round trip: builds the template, sends `text` as the user turn,
// parses the dictionary-of-lists reply. Throws NerBackendError wrapping any
// chat or parse failure.
annotate::NerEntityMap NerViaLlm(const std::string& text, const SensitiveType& entity,
                                 const ChatRequest& base_request);

}  // namespace promptsan::llm

#endif  // PROMPTSAN_LLM_CLIENT_HPP_
