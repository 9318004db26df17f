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

#ifndef PROMPTSAN_ERRORS_HPP_
#define PROMPTSAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace promptsan {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document (config, corpus, pair file, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input that violates an invariant; the message names
// the offending field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class EntropyUnavailableError : public Error {
 public:
  using Error::Error;
};

// Token text does not belong to the format domain it is being
// enciphered/deciphered over.
class FormatMismatchError : public Error {
 public:
  using Error::Error;
};

// Value outside an integer perturbation domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Non-positive or otherwise unusable privacy budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Sensitive type not present in the configured registry.
class UnknownTypeError : public Error {
 public:
  using Error::Error;
};

// NER reply with no parseable dictionary-of-lists structure.
class NerParseError : public Error {
 public:
  using Error::Error;
};

// External NER adapter failed (transport or parse).
class NerBackendError : public Error {
 public:
  using Error::Error;
};

// Helper string rejected: cycle, dangling index, or transform/type mismatch.
class PsiValidationError : public Error {
 public:
  using Error::Error;
};

// Derived-token transform produced an unusable value.
class TransformError : public Error {
 public:
  using Error::Error;
};

// Game prompt pair with unequal leakage.
class LeakageMismatchError : public Error {
 public:
  using Error::Error;
};

// Chat endpoint rejected the credentials.
class AuthError : public Error {
 public:
  using Error::Error;
};

// Chat endpoint did not answer within the deadline (after retries).
class TimeoutError : public Error {
 public:
  using Error::Error;
};

// Chat endpoint answered with an unparseable body.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace promptsan

#endif  // PROMPTSAN_ERRORS_HPP_
