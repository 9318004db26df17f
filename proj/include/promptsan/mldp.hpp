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

#ifndef PROMPTSAN_MLDP_HPP_
#define PROMPTSAN_MLDP_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "promptsan/errors.hpp"

// Metric-LDP perturbation of integer-valued tokens. The mechanism samples
// output i with probability proportional to e^{-|x-i| * eps/2} over a finite
// integer domain, which satisfies eps-mLDP under the L1 distance on domain
// indices. Probability vectors are computed exactly (O(k)) rather than
// streamed: the domains in scope are small and the exact vectors power the
// verification harnesses.

namespace promptsan::mldp {

// The finite output domain {lo, lo+step, ..., hi}, indexed 0..k-1.
// With step > 1 the mLDP distance is measured in index steps, so eps is
// interpreted per step.
struct IntegerDomain {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t step = 1;

  std::int64_t size() const;
  bool Contains(std::int64_t value) const;

  // 0-based index of `value`; throws DomainError if absent.
  std::int64_t IndexOf(std::int64_t value) const;
  std::int64_t ValueAt(std::int64_t index) const;

  // Nearest domain member to an arbitrary real value (used to admit
  // out-of-domain true values; callers warn).
  std::int64_t Clamp(double value) const;

  void Validate() const;  // throws ValidationError

  friend bool operator==(const IntegerDomain&, const IntegerDomain&) = default;
};

// Exact probability vector of the mechanism at input x.
struct Distribution {
  std::int64_t x_index = 0;
  double epsilon = 0.0;
  std::vector<double> probs;  // length k, sums to 1, all positive
};

// probs[i] = e^{-|idx(x)-i| * eps/2} / Z, computed with max-exponent
// subtraction. Throws DomainError if x is not in the domain, BudgetError if
// eps <= 0.
Distribution ComputeDistribution(std::int64_t x, double epsilon, const IntegerDomain& domain);

// Inverse-CDF draw from ComputeDistribution(x, epsilon, domain).
// Deterministic for a fixed rng state, independent of platform.
std::int64_t Sample(std::int64_t x, double epsilon, const IntegerDomain& domain,
                    std::mt19937_64& rng);

// Per-token budget for t Category II root tokens. t == 0 means the budget
// is unused; the total is returned unchanged.
double SplitBudget(double epsilon_total, std::int64_t t);

// Worst-case mLDP ratio margin: max over all (x, x', i) of
//   p_{x,i} / (p_{x',i} * e^{eps * |idx(x)-idx(x')|}).
// A correct mechanism keeps this at or below 1 (+ float slack). Exhaustive;
// domain size is capped at 10^4.
double RatioBoundMargin(double epsilon, const IntegerDomain& domain);

// Total variation distance between two distributions over the same domain.
double TotalVariation(const Distribution& a, const Distribution& b);

}  // namespace promptsan::mldp

#endif  // PROMPTSAN_MLDP_HPP_
