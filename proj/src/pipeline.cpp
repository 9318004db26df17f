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

#include "promptsan/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "promptsan/formats.hpp"
#include "promptsan/utf8.hpp"

namespace promptsan::pipeline {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Expression mini-grammar over $k token references:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | NUMBER | '$'INDEX | '(' expr ')'
// ---------------------------------------------------------------------------

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::optional<Rational>>* values,
             std::vector<std::size_t>* inputs)
      : text_(text), values_(values), inputs_(inputs) {}

  Rational Parse() {
    const Rational v = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw TransformError("expression '" + std::string(text_) + "': " + what);
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Eat(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Rational ParseExpr() {
    Rational v = ParseTerm();
    while (true) {
      if (Eat('+')) {
        v = v + ParseTerm();
      } else if (Eat('-')) {
        v = v - ParseTerm();
      } else {
        return v;
      }
    }
  }

  Rational ParseTerm() {
    Rational v = ParseUnary();
    while (true) {
      if (Eat('*')) {
        v = v * ParseUnary();
      } else if (Eat('/')) {
        v = v / ParseUnary();
      } else {
        return v;
      }
    }
  }

  Rational ParseUnary() {
    if (Eat('-')) return -ParseUnary();
    if (Eat('(')) {
      const Rational v = ParseExpr();
      if (!Eat(')')) Fail("missing ')'");
      return v;
    }
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == '$') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) Fail("'$' without token index");
      const std::size_t index =
          static_cast<std::size_t>(std::stoull(std::string(text_.substr(start, pos_ - start))));
      if (inputs_ != nullptr) inputs_->push_back(index);
      if (values_ == nullptr) return Rational(0);  // inputs-only scan
      if (index >= values_->size() || !(*values_)[index].has_value()) {
        Fail("token $" + std::to_string(index) + " has no value");
      }
      return *(*values_)[index];
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start) Fail("expected number, '$' reference, or '('");
    return Rational::FromDecimalString(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const std::vector<std::optional<Rational>>* values_;
  std::vector<std::size_t>* inputs_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> ExpressionInputs(const std::string& expression) {
  std::vector<std::size_t> inputs;
  ExprParser(expression, nullptr, &inputs).Parse();
  return inputs;
}

// ---------------------------------------------------------------------------
// Token plan: what happens to each token of the sequence.
// ---------------------------------------------------------------------------

struct TokenPlan {
  enum class Role { kEncrypt, kRoot, kCopy, kDerived };
  Role role = Role::kRoot;
  std::size_t representative = 0;      // kCopy
  const Dependency* dependency = nullptr;  // kDerived
};

struct Plan {
  std::vector<TokenPlan> tokens;
  std::vector<std::size_t> derived_order;  // topological
  std::int64_t budget_token_count = 0;
};

std::vector<std::size_t> TransformInputIndices(const Transform& t) {
  switch (t.kind) {
    case Transform::Kind::kIdentity:
    case Transform::Kind::kYearFromAge:
    case Transform::Kind::kScale:
      return {t.determinant};
    case Transform::Kind::kDifference:
      return {t.minuend, t.subtrahend};
    case Transform::Kind::kExpression:
      try {
        return ExpressionInputs(t.expression);
      } catch (const TransformError& e) {
        throw PsiValidationError(e.what());
      }
  }
  return {};
}

// Union-find over token indices for merged repetition groups.
class Groups {
 public:
  explicit Groups(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t Find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    // Smaller index becomes the representative: the first occurrence is the
    // one that consumes budget.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

Plan BuildPlan(const TypedSequence& typed_seq, const SanitizerConfig& config,
               const HelperString& psi) {
  const std::size_t n = typed_seq.tokens.size();
  auto check_index = [n](std::size_t i, const char* where) {
    if (i >= n) {
      throw PsiValidationError(std::string(where) + ": token index " + std::to_string(i) +
                               " out of range (have " + std::to_string(n) + " tokens)");
    }
  };

  std::vector<Category> category(n);
  for (std::size_t i = 0; i < n; ++i) {
    category[i] = config.CategoryFor(typed_seq.tokens[i].type);
  }

  // Repetition groups: validated, then collapsed via union-find.
  Groups groups(n);
  for (const auto& group : psi.repetition_groups) {
    if (group.size() < 2) continue;
    for (std::size_t i : group) check_index(i, "repetition group");
    for (std::size_t j = 1; j < group.size(); ++j) {
      const TypedToken& a = typed_seq.tokens[group[0]];
      const TypedToken& b = typed_seq.tokens[group[j]];
      if (!(a.type == b.type)) {
        throw PsiValidationError("repetition group mixes types " + a.type.name() + " and " +
                                 b.type.name());
      }
      if (category[group[0]] == Category::kCategoryII) {
        if (!(ParseNumeric(a.text) == ParseNumeric(b.text))) {
          throw PsiValidationError("repetition group members '" + a.text + "' and '" + b.text +
                                   "' differ in value");
        }
      } else if (a.text != b.text) {
        throw PsiValidationError("repetition group members '" + a.text + "' and '" + b.text +
                                 "' differ");
      }
      groups.Union(group[0], group[j]);
    }
  }

  Plan plan;
  plan.tokens.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (category[i] == Category::kCategoryI) {
      plan.tokens[i].role = TokenPlan::Role::kEncrypt;
      continue;
    }
    const std::size_t rep = groups.Find(i);
    if (rep != i) {
      plan.tokens[i].role = TokenPlan::Role::kCopy;
      plan.tokens[i].representative = rep;
    } else {
      plan.tokens[i].role = TokenPlan::Role::kRoot;
    }
  }

  // Dependencies: one rule per dependent, Category II only, acyclic.
  std::vector<std::vector<std::size_t>> edges(n);  // input-rep -> dependent
  for (const Dependency& dep : psi.dependencies) {
    check_index(dep.dependent, "dependency");
    if (category[dep.dependent] != Category::kCategoryII) {
      throw PsiValidationError("dependent token " + std::to_string(dep.dependent) +
                               " must be Category II");
    }
    TokenPlan& tp = plan.tokens[dep.dependent];
    if (tp.role == TokenPlan::Role::kDerived) {
      throw PsiValidationError("token " + std::to_string(dep.dependent) +
                               " has two derivation rules");
    }
    if (tp.role == TokenPlan::Role::kCopy) {
      throw PsiValidationError("token " + std::to_string(dep.dependent) +
                               " is both a repeated occurrence and a dependent");
    }
    for (std::size_t input : TransformInputIndices(dep.transform)) {
      check_index(input, "dependency input");
      if (category[input] != Category::kCategoryII) {
        throw PsiValidationError("dependency input token " + std::to_string(input) +
                                 " must be Category II");
      }
      edges[groups.Find(input)].push_back(dep.dependent);
    }
    tp.role = TokenPlan::Role::kDerived;
    tp.dependency = &dep;
  }

  // Kahn's algorithm over the derived tokens, smallest-index-first so the
  // evaluation order is deterministic.
  std::vector<int> indegree(n, 0);
  for (std::size_t from = 0; from < n; ++from) {
    if (plan.tokens[from].role != TokenPlan::Role::kDerived) continue;
    for (std::size_t to : edges[from]) ++indegree[to];
  }
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    if (plan.tokens[i].role == TokenPlan::Role::kDerived && indegree[i] == 0) frontier.push_back(i);
  }
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), std::greater<>());
    const std::size_t i = frontier.back();
    frontier.pop_back();
    plan.derived_order.push_back(i);
    for (std::size_t to : edges[i]) {
      if (plan.tokens[to].role == TokenPlan::Role::kDerived && --indegree[to] == 0) {
        frontier.push_back(to);
      }
    }
  }
  std::size_t derived_total = 0;
  for (const TokenPlan& tp : plan.tokens) {
    if (tp.role == TokenPlan::Role::kDerived) ++derived_total;
  }
  if (plan.derived_order.size() != derived_total) {
    throw PsiValidationError("dependency graph has a cycle");
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (plan.tokens[i].role == TokenPlan::Role::kRoot) ++plan.budget_token_count;
  }
  return plan;
}

std::string PositionTag(const TypedToken& token) {
  return "token '" + token.type.name() + "' at chars " + std::to_string(token.span.begin) + ".." +
         std::to_string(token.span.end);
}

std::string EncryptCategoryI(const SanitizerConfig& config, const TypedToken& token,
                             fpe::NameSession& session) {
  const TypeEntry& entry = config.EntryFor(token.type);
  const fpe::Tweak tweak = fpe::Tweak::ForType(token.type);
  switch (entry.strategy) {
    case FormatStrategy::kNameIndex:
      return fpe::EncryptName(config.key, tweak, token.text, session);
    case FormatStrategy::kMoneySkeleton:
      return fpe::EncryptMoney(config.key, tweak, token.text);
    default:
      return fpe::Encrypt(config.key, config.FormatForToken(token.type, token.text), tweak,
                          token.text);
  }
}

std::string DecryptCategoryI(const SanitizerConfig& config, const TypedToken& token,
                             fpe::NameSession& session) {
  const TypeEntry& entry = config.EntryFor(token.type);
  const fpe::Tweak tweak = fpe::Tweak::ForType(token.type);
  switch (entry.strategy) {
    case FormatStrategy::kNameIndex:
      return fpe::DecryptName(config.key, tweak, token.text, session);
    case FormatStrategy::kMoneySkeleton:
      return fpe::DecryptMoney(config.key, tweak, token.text);
    default:
      return fpe::Decrypt(config.key, config.FormatForToken(token.type, token.text), tweak,
                          token.text);
  }
}

// Replaces token spans with new texts, right to left so earlier spans stay
// valid, and reports each replacement's span in the result.
std::string ReplaceSpans(const std::string& source, const std::vector<TypedToken>& tokens,
                         const std::vector<std::string>& new_texts,
                         std::vector<Span>* out_spans) {
  std::string text = source;
  std::vector<std::size_t> byte_begin(tokens.size()), byte_end(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    byte_begin[i] = utf8::ByteOffset(source, tokens[i].span.begin);
    byte_end[i] = utf8::ByteOffset(source, tokens[i].span.end);
  }
  for (std::size_t r = tokens.size(); r-- > 0;) {
    text.replace(byte_begin[r], byte_end[r] - byte_begin[r], new_texts[r]);
  }
  if (out_spans != nullptr) {
    out_spans->resize(tokens.size());
    std::ptrdiff_t shift = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const std::ptrdiff_t begin = static_cast<std::ptrdiff_t>(tokens[i].span.begin) + shift;
      const std::size_t len = utf8::Length(new_texts[i]);
      (*out_spans)[i] = Span{static_cast<std::size_t>(begin),
                             static_cast<std::size_t>(begin) + len};
      shift += static_cast<std::ptrdiff_t>(len) -
               static_cast<std::ptrdiff_t>(tokens[i].span.length());
    }
  }
  return text;
}

}  // namespace

std::vector<std::size_t> Transform::Inputs() const { return TransformInputIndices(*this); }

// ---------------------------------------------------------------------------
// Numeric text handling.
// ---------------------------------------------------------------------------

Rational ParseNumeric(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    cleaned += c;
  }
  try {
    return Rational::FromDecimalString(cleaned);
  } catch (const TransformError& e) {
    throw DomainError(std::string("not a numeric token: '") + std::string(text) + "'");
  }
}

NumberSkeleton SkeletonOf(std::string_view numeric_text) {
  NumberSkeleton skeleton;
  const auto point = numeric_text.find('.');
  if (point != std::string_view::npos) {
    skeleton.decimal_places = static_cast<int>(numeric_text.size() - point - 1);
  }
  for (char c : numeric_text) {
    if (c == ',' || c == ' ') {
      skeleton.grouped = true;
      skeleton.group_separator = c;
      break;
    }
  }
  return skeleton;
}

std::string RenderNumber(const Rational& value, const NumberSkeleton& skeleton,
                         std::vector<std::string>* warnings) {
  bool exact = true;
  std::string plain = value.ToDecimalString(skeleton.decimal_places, 12, &exact);
  if (!exact && warnings != nullptr) {
    warnings->push_back("derived value rounded to 12 decimal places");
  }
  if (!skeleton.grouped) return plain;

  const bool negative = !plain.empty() && plain[0] == '-';
  const std::size_t start = negative ? 1 : 0;
  const auto point = plain.find('.');
  const std::size_t int_end = point == std::string::npos ? plain.size() : point;
  std::string grouped;
  const std::size_t int_len = int_end - start;
  for (std::size_t i = 0; i < int_len; ++i) {
    if (i > 0 && (int_len - i) % 3 == 0) grouped += skeleton.group_separator;
    grouped += plain[start + i];
  }
  std::string out = negative ? "-" : "";
  out += grouped;
  out += plain.substr(int_end);
  return out;
}

// ---------------------------------------------------------------------------
// Helper-string parsing.
// ---------------------------------------------------------------------------

HelperString HelperStringFromJson(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("helper string: ") + e.what());
  }
  HelperString psi;
  if (doc.contains("groups")) {
    for (const auto& group : doc.at("groups")) {
      psi.repetition_groups.push_back(group.get<std::vector<std::size_t>>());
    }
  }
  if (doc.contains("deps")) {
    for (const auto& d : doc.at("deps")) {
      Dependency dep;
      dep.dependent = d.at("dependent").get<std::size_t>();
      const std::string kind = d.value("transform", "");
      if (kind == "identity") {
        dep.transform.kind = Transform::Kind::kIdentity;
        dep.transform.determinant = d.at("determinant").get<std::size_t>();
      } else if (kind == "year-from-age") {
        dep.transform.kind = Transform::Kind::kYearFromAge;
        dep.transform.determinant = d.at("determinant").get<std::size_t>();
      } else if (kind == "scale") {
        dep.transform.kind = Transform::Kind::kScale;
        dep.transform.determinant = d.at("determinant").get<std::size_t>();
        dep.transform.factor = Rational::FromDecimalString(d.at("factor").get<std::string>());
      } else if (kind == "difference") {
        dep.transform.kind = Transform::Kind::kDifference;
        dep.transform.minuend = d.at("minuend").get<std::size_t>();
        dep.transform.subtrahend = d.at("subtrahend").get<std::size_t>();
      } else if (kind == "expr") {
        dep.transform.kind = Transform::Kind::kExpression;
        dep.transform.expression = d.at("expr").get<std::string>();
      } else {
        throw ParseError("helper string: unknown transform '" + kind + "'");
      }
      psi.dependencies.push_back(std::move(dep));
    }
  }
  return psi;
}

HelperString LoadHelperString(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open helper string: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return HelperStringFromJson(buf.str());
}

// ---------------------------------------------------------------------------
// Preprocess.
// ---------------------------------------------------------------------------

PreprocessResult Preprocess(const TypedSequence& typed_seq, const SanitizerConfig& config,
                            const HelperString* user_psi) {
  PreprocessResult result;
  if (user_psi != nullptr) result.psi = *user_psi;

  // Automatic repetition detection: exact duplicates of (type, value) among
  // Category II tokens join one group.
  std::map<std::pair<std::string, std::pair<long long, long long>>, std::vector<std::size_t>>
      duplicates;
  for (std::size_t i = 0; i < typed_seq.tokens.size(); ++i) {
    const TypedToken& token = typed_seq.tokens[i];
    if (config.CategoryFor(token.type) != Category::kCategoryII) continue;
    const Rational v = ParseNumeric(token.text);
    duplicates[{token.type.name(),
                {static_cast<long long>(v.num()), static_cast<long long>(v.den())}}]
        .push_back(i);
  }
  for (const auto& [key, indices] : duplicates) {
    if (indices.size() >= 2) result.psi.repetition_groups.push_back(indices);
  }

  // Validation happens inside BuildPlan; the plan also yields t.
  const Plan plan = BuildPlan(typed_seq, config, result.psi);
  result.budget_token_count = plan.budget_token_count;
  return result;
}

// ---------------------------------------------------------------------------
// Transforms.
// ---------------------------------------------------------------------------

Rational EvaluateTransform(const Transform& transform,
                           const std::vector<std::optional<Rational>>& token_values,
                           const SanitizerConfig& config) {
  auto value_of = [&token_values](std::size_t i) -> const Rational& {
    if (i >= token_values.size() || !token_values[i].has_value()) {
      throw TransformError("transform input $" + std::to_string(i) + " has no value");
    }
    return *token_values[i];
  };
  switch (transform.kind) {
    case Transform::Kind::kIdentity:
      return value_of(transform.determinant);
    case Transform::Kind::kYearFromAge:
      return Rational(config.reference_year) - value_of(transform.determinant);
    case Transform::Kind::kScale:
      return transform.factor * value_of(transform.determinant);
    case Transform::Kind::kDifference:
      return value_of(transform.minuend) - value_of(transform.subtrahend);
    case Transform::Kind::kExpression:
      return ExprParser(transform.expression, &token_values, nullptr).Parse();
  }
  throw TransformError("unknown transform kind");
}

// ---------------------------------------------------------------------------
// Sanitize.
// ---------------------------------------------------------------------------

SanitizedPrompt Sanitize(const SanitizerConfig& config, const TypedSequence& typed_seq,
                         const HelperString& psi, std::mt19937_64& rng,
                         const SanitizeOptions& options) {
  config.Validate();
  const std::size_t n = typed_seq.tokens.size();
  const Plan plan = BuildPlan(typed_seq, config, psi);
  const std::int64_t t = plan.budget_token_count;
  const double eps_token = t > 0 ? mldp::SplitBudget(config.epsilon_total, t) : 0.0;

  SanitizedPrompt out;
  fpe::NameSession session(config.names.get());
  std::vector<std::optional<Rational>> values(n);
  std::vector<std::string> new_texts(n);

  // Pass 1: encrypt Category I, sample Category II roots.
  for (std::size_t i = 0; i < n; ++i) {
    const TypedToken& token = typed_seq.tokens[i];
    const TokenPlan& tp = plan.tokens[i];
    if (tp.role == TokenPlan::Role::kEncrypt) {
      try {
        new_texts[i] = EncryptCategoryI(config, token, session);
      } catch (const FormatMismatchError& e) {
        throw FormatMismatchError(PositionTag(token) + ": " + e.what());
      }
      continue;
    }
    if (tp.role != TokenPlan::Role::kRoot) continue;
    const TypeEntry& entry = config.EntryFor(token.type);
    Rational true_value = ParseNumeric(token.text);
    std::int64_t x = entry.domain.Clamp(true_value.ToDouble());
    if (!(Rational(x) == true_value)) {
      out.warnings.push_back(PositionTag(token) + ": value " + token.text +
                             " mapped to nearest domain member " + std::to_string(x));
    }
    std::int64_t sampled;
    try {
      sampled = options.sampler ? options.sampler(x, eps_token, entry.domain, rng)
                                : mldp::Sample(x, eps_token, entry.domain, rng);
    } catch (const DomainError& e) {
      throw DomainError(PositionTag(token) + ": " + e.what());
    }
    values[i] = Rational(sampled);
  }

  // Pass 2: derived tokens in topological order, inputs resolved through
  // group representatives.
  auto resolved = [&plan, &values](std::size_t i) -> std::optional<Rational> {
    const TokenPlan& tp = plan.tokens[i];
    if (tp.role == TokenPlan::Role::kCopy) return values[tp.representative];
    return values[i];
  };
  for (std::size_t d : plan.derived_order) {
    std::vector<std::optional<Rational>> view(n);
    for (std::size_t i = 0; i < n; ++i) view[i] = resolved(i);
    Rational v = EvaluateTransform(plan.tokens[d].dependency->transform, view, config);
    const TypeEntry& entry = config.EntryFor(typed_seq.tokens[d].type);
    if (v.IsNegative() && entry.domain.lo >= 0) {
      out.warnings.push_back(PositionTag(typed_seq.tokens[d]) +
                             ": derived value negative; clamped to 0");
      v = Rational(0);
    }
    values[d] = v;
  }

  // Pass 3: copies take their representative's value; render all Category II
  // tokens with their own original skeleton.
  for (std::size_t i = 0; i < n; ++i) {
    const TokenPlan& tp = plan.tokens[i];
    if (tp.role == TokenPlan::Role::kEncrypt) continue;
    if (tp.role == TokenPlan::Role::kCopy) values[i] = values[tp.representative];
    if (!values[i].has_value()) {
      throw TransformError(PositionTag(typed_seq.tokens[i]) + ": no value produced");
    }
    new_texts[i] = RenderNumber(*values[i], SkeletonOf(typed_seq.tokens[i].text), &out.warnings);
  }

  std::vector<Span> out_spans;
  out.text = ReplaceSpans(typed_seq.source, typed_seq.tokens, new_texts, &out_spans);

  for (std::size_t i = 0; i < n; ++i) {
    TokenRecord record;
    record.span_in = typed_seq.tokens[i].span;
    record.span_out = out_spans[i];
    record.type_name = typed_seq.tokens[i].type.name();
    switch (plan.tokens[i].role) {
      case TokenPlan::Role::kEncrypt:
        record.category = Category::kCategoryI;
        record.mechanism = "fpe";
        break;
      case TokenPlan::Role::kRoot:
        record.category = Category::kCategoryII;
        record.mechanism = "mldp";
        record.epsilon = eps_token;
        record.epsilon_denominator = t;
        break;
      case TokenPlan::Role::kCopy:
        record.category = Category::kCategoryII;
        record.mechanism = "copy";
        break;
      case TokenPlan::Role::kDerived:
        record.category = Category::kCategoryII;
        record.mechanism = "derived";
        break;
    }
    out.token_report.push_back(std::move(record));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Desanitize.
// ---------------------------------------------------------------------------

DesanitizeResult Desanitize(const SanitizerConfig& config, const std::string& response,
                            const std::optional<std::string>& original_prompt,
                            const annotate::RecognizerSet& recognizers) {
  DesanitizeResult result;
  const TypedSequence typed = annotate::Annotate(response, recognizers);

  // With the original prompt available, recompute its ciphertexts on the
  // fly; only those are eligible for decryption, and they invert to the
  // exact original surface text.
  std::map<std::pair<std::string, std::string>, std::string> emitted;
  if (original_prompt.has_value()) {
    const TypedSequence original = annotate::Annotate(*original_prompt, recognizers);
    fpe::NameSession original_session(config.names.get());
    for (const TypedToken& token : original.tokens) {
      if (config.CategoryFor(token.type) != Category::kCategoryI) continue;
      try {
        const std::string cipher = EncryptCategoryI(config, token, original_session);
        emitted.emplace(std::make_pair(token.type.name(), cipher), token.text);
      } catch (const Error& e) {
        result.warnings.push_back("original " + PositionTag(token) + ": " + e.what());
      }
    }
  }

  std::vector<std::string> new_texts(typed.tokens.size());
  std::vector<DesanitizedItem> items(typed.tokens.size());
  fpe::NameSession session(config.names.get());
  for (std::size_t i = 0; i < typed.tokens.size(); ++i) {
    const TypedToken& token = typed.tokens[i];
    new_texts[i] = token.text;
    items[i].type_name = token.type.name();
    Category category;
    try {
      category = config.CategoryFor(token.type);
    } catch (const UnknownTypeError&) {
      continue;  // unregistered custom type: pass through
    }
    if (category != Category::kCategoryI) continue;  // mLDP output stays as is
    if (original_prompt.has_value()) {
      auto it = emitted.find({token.type.name(), token.text});
      if (it == emitted.end()) {
        items[i].provenance = "foreign";
        continue;
      }
      new_texts[i] = it->second;
      items[i].decrypted = true;
      items[i].provenance = "prompt";
      continue;
    }
    try {
      new_texts[i] = DecryptCategoryI(config, token, session);
      items[i].decrypted = true;
      items[i].provenance = "unknown";
    } catch (const FormatMismatchError& e) {
      result.warnings.push_back(PositionTag(token) + ": left untouched: " + e.what());
    }
  }

  std::vector<Span> out_spans;
  result.text = ReplaceSpans(typed.source, typed.tokens, new_texts, &out_spans);
  for (std::size_t i = 0; i < items.size(); ++i) items[i].span = out_spans[i];
  result.items = std::move(items);
  return result;
}

}  // namespace promptsan::pipeline
