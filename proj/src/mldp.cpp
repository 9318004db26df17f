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

#include "promptsan/mldp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace promptsan::mldp {
namespace {

constexpr std::int64_t kMaxExhaustiveDomain = 10000;

// Uniform double in [0, 1) from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined; this is not.
double NextUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::int64_t IntegerDomain::size() const { return (hi - lo) / step + 1; }

bool IntegerDomain::Contains(std::int64_t value) const {
  return value >= lo && value <= hi && (value - lo) % step == 0;
}

std::int64_t IntegerDomain::IndexOf(std::int64_t value) const {
  if (!Contains(value)) {
    throw DomainError("value " + std::to_string(value) + " outside domain [" +
                      std::to_string(lo) + ".." + std::to_string(hi) + " step " +
                      std::to_string(step) + "]");
  }
  return (value - lo) / step;
}

std::int64_t IntegerDomain::ValueAt(std::int64_t index) const { return lo + index * step; }

std::int64_t IntegerDomain::Clamp(double value) const {
  if (value <= static_cast<double>(lo)) return lo;
  if (value >= static_cast<double>(hi)) return hi;
  const double idx = (value - static_cast<double>(lo)) / static_cast<double>(step);
  const std::int64_t nearest = static_cast<std::int64_t>(std::llround(idx));
  return ValueAt(std::clamp<std::int64_t>(nearest, 0, size() - 1));
}

void IntegerDomain::Validate() const {
  if (step <= 0) throw ValidationError("domain.step: must be positive");
  if (lo > hi) throw ValidationError("domain: lo must be <= hi");
  if ((hi - lo) % step != 0) throw ValidationError("domain: hi must be reachable from lo by step");
}

Distribution ComputeDistribution(std::int64_t x, double epsilon, const IntegerDomain& domain) {
  domain.Validate();
  if (!(epsilon > 0.0)) {
    throw BudgetError("epsilon: must be positive, got " + std::to_string(epsilon));
  }
  const std::int64_t k = domain.size();
  const std::int64_t xi = domain.IndexOf(x);

  Distribution dist;
  dist.x_index = xi;
  dist.epsilon = epsilon;
  dist.probs.resize(static_cast<std::size_t>(k));

  // Exponents are -|xi - i| * eps/2; the max is 0 at i == xi. Subtract it
  // anyway so the normalization stays stable if the formula ever changes.
  double max_exp = 0.0;
  double z = 0.0;
  for (std::int64_t i = 0; i < k; ++i) {
    const double e = -std::abs(static_cast<double>(xi - i)) * epsilon / 2.0;
    dist.probs[static_cast<std::size_t>(i)] = std::exp(e - max_exp);
    z += dist.probs[static_cast<std::size_t>(i)];
  }
  for (double& p : dist.probs) p /= z;
  return dist;
}

std::int64_t Sample(std::int64_t x, double epsilon, const IntegerDomain& domain,
                    std::mt19937_64& rng) {
  const Distribution dist = ComputeDistribution(x, epsilon, domain);
  const double u = NextUnit(rng);
  double cdf = 0.0;
  for (std::size_t i = 0; i < dist.probs.size(); ++i) {
    cdf += dist.probs[i];
    if (u < cdf) return domain.ValueAt(static_cast<std::int64_t>(i));
  }
  return domain.hi;  // u landed in the float gap above the last cdf value
}

double SplitBudget(double epsilon_total, std::int64_t t) {
  if (!(epsilon_total > 0.0)) {
    throw BudgetError("epsilon_total: must be positive, got " + std::to_string(epsilon_total));
  }
  if (t < 0) throw BudgetError("t: token count cannot be negative");
  if (t == 0) return epsilon_total;  // unused
  return epsilon_total / static_cast<double>(t);
}

double RatioBoundMargin(double epsilon, const IntegerDomain& domain) {
  domain.Validate();
  const std::int64_t k = domain.size();
  if (k > kMaxExhaustiveDomain) {
    throw ValidationError("domain: ratio bound check is exhaustive; size capped at " +
                          std::to_string(kMaxExhaustiveDomain));
  }
  std::vector<Distribution> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (std::int64_t x = 0; x < k; ++x) {
    rows.push_back(ComputeDistribution(domain.ValueAt(x), epsilon, domain));
  }
  double worst = 0.0;
  for (std::int64_t x = 0; x < k; ++x) {
    for (std::int64_t y = 0; y < k; ++y) {
      const double scale = std::exp(epsilon * std::abs(static_cast<double>(x - y)));
      for (std::int64_t i = 0; i < k; ++i) {
        const double ratio = rows[static_cast<std::size_t>(x)].probs[static_cast<std::size_t>(i)] /
                             (rows[static_cast<std::size_t>(y)].probs[static_cast<std::size_t>(i)] * scale);
        worst = std::max(worst, ratio);
      }
    }
  }
  return worst;
}

double TotalVariation(const Distribution& a, const Distribution& b) {
  if (a.probs.size() != b.probs.size()) {
    throw DomainError("total variation requires distributions over one domain");
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < a.probs.size(); ++i) {
    tv += std::abs(a.probs[i] - b.probs[i]);
  }
  return tv / 2.0;
}

}  // namespace promptsan::mldp
