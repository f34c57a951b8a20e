// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cutmit/distribution.hpp"
#include "cutmit/errors.hpp"

namespace cutmit {

/// Probability that key position k reads outcome j under d.
inline double bitwise_marginal(const Distribution& d, int k, int j) {
  if (k < 0 || k >= d.num_bits) throw ValidationError("marginal bit position out of range");
  if (j != 0 && j != 1) throw ValidationError("marginal outcome must be 0 or 1");
  const char want = j == 0 ? '0' : '1';
  double m = 0.0;
  for (const auto& [key, w] : d.table)
    if (key[static_cast<size_t>(k)] == want) m += w;
  return m;
}

/// Per-qubit outcome weights w_0, w_1 for each tracked key position.
using MarginalTable = std::map<int, std::array<double, 2>>;

inline MarginalTable marginal_table(const Distribution& d, const std::vector<int>& positions) {
  MarginalTable t;
  for (int k : positions)
    t[k] = {bitwise_marginal(d, k, 0), bitwise_marginal(d, k, 1)};
  return t;
}

/// One multiplicative update: every outcome s gains, per tracked position k,
/// its current weight scaled by the target-to-current marginal ratio at
/// s[k]; the sum is added to the current distribution and renormalized.
/// Current marginals are floored at 1e-12 before dividing. At a fixed point
/// (all ratios 1) the pre-normalization mass is scaled by (positions + 1)
/// and normalization restores the input exactly.
inline Distribution update_step(const Distribution& current, const MarginalTable& target) {
  current.validate();
  constexpr double kMarginalFloor = 1e-12;
  MarginalTable own;
  for (const auto& [k, tw] : target) {
    (void)tw;
    if (k < 0 || k >= current.num_bits)
      throw ValidationError("marginal table position out of range");
    own[k] = {bitwise_marginal(current, k, 0), bitwise_marginal(current, k, 1)};
  }
  Distribution next(current.num_bits, current.kind);
  next.shots = current.shots;
  double total = 0.0;
  for (const auto& [key, w] : current.table) {
    double updated = w;
    for (const auto& [k, tw] : target) {
      int j = key[static_cast<size_t>(k)] == '0' ? 0 : 1;
      double denom = std::max(own[k][static_cast<size_t>(j)], kMarginalFloor);
      updated += w * tw[static_cast<size_t>(j)] / denom;
    }
    next.table[key] = updated;
    total += updated;
  }
  if (total <= 0.0)
    throw DegenerateDistributionError("recombination update produced no positive mass");
  for (auto& [key, w] : next.table) w /= total;
  return next;
}

/// Hellinger distance sqrt(1 - sum_s sqrt(p(s) q(s))); 0 for identical
/// distributions, 1 for disjoint supports.
inline double hellinger(const Distribution& p, const Distribution& q) {
  if (p.num_bits != q.num_bits)
    throw ValidationError("hellinger distance needs equal key widths");
  double bc = 0.0;
  for (const auto& [key, w] : p.table) {
    auto it = q.table.find(key);
    if (it == q.table.end()) continue;
    if (w > 0.0 && it->second > 0.0) bc += std::sqrt(w * it->second);
  }
  return std::sqrt(std::max(0.0, 1.0 - bc));
}

struct RecombinationConfig {
  double threshold = 1e-4;        // stop when the Hellinger step falls below this
  std::int64_t max_iterations = 10000;
};

struct RecombinationTracePoint {
  std::int64_t iteration = 0;
  double step = 0.0;   // Hellinger distance moved this iteration
  double delta = 0.0;  // max marginal mismatch against the mitigated targets
};

struct RecombinationResult {
  Distribution result;
  bool converged = false;
  std::int64_t iterations = 0;
  double final_step = 0.0;
  double achieved_delta = 0.0;
  std::vector<RecombinationTracePoint> trace;
};

namespace detail {

inline double marginal_mismatch(const Distribution& d,
                                const std::map<int, MarginalTable::mapped_type>& target) {
  double delta = 0.0;
  for (const auto& [k, tw] : target)
    for (int j : {0, 1})
      delta = std::max(delta, std::abs(bitwise_marginal(d, k, j) - tw[static_cast<size_t>(j)]));
  return delta;
}

}  // namespace detail

/// Iteratively reshapes the unmitigated distribution until its per-qubit
/// marginals match the mitigated single-qubit distributions. Support never
/// grows beyond the unmitigated input's.
inline RecombinationResult recombine(const Distribution& unmitigated,
                                     const std::map<int, Distribution>& mitigated,
                                     const RecombinationConfig& cfg = {}) {
  unmitigated.validate();
  if (!unmitigated.is_probability(1e-6))
    throw ValidationError("recombination needs a normalized unmitigated distribution");
  if (mitigated.empty()) throw ValidationError("recombination needs at least one mitigated input");
  if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0))
    throw ValidationError("recombination threshold must lie in (0, 1)");
  if (cfg.max_iterations <= 0) throw ValidationError("max iterations must be positive");

  MarginalTable target;
  for (const auto& [k, d] : mitigated) {
    d.validate();
    if (d.num_bits != unmitigated.num_bits)
      throw ValidationError("mitigated distribution for q" + std::to_string(k) +
                            " has a different key width");
    if (!d.is_probability(1e-6))
      throw ValidationError("mitigated distribution for q" + std::to_string(k) +
                            " is not normalized");
    if (k < 0 || k >= unmitigated.num_bits)
      throw ValidationError("mitigated qubit position out of range");
    target[k] = {bitwise_marginal(d, k, 0), bitwise_marginal(d, k, 1)};
  }

  RecombinationResult r;
  r.result = unmitigated;
  r.result.kind = DistributionKind::Recombined;
  for (std::int64_t it = 1; it <= cfg.max_iterations; ++it) {
    Distribution next = update_step(r.result, target);
    next.kind = DistributionKind::Recombined;
    double step = hellinger(next, r.result);
    r.result = std::move(next);
    r.iterations = it;
    r.final_step = step;
    r.achieved_delta = detail::marginal_mismatch(r.result, target);
    r.trace.push_back({it, step, r.achieved_delta});
    if (step < cfg.threshold) {
      r.converged = true;
      break;
    }
  }
  return r;
}

}  // namespace cutmit
