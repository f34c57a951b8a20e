// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cutmit/distribution.hpp"
#include "cutmit/errors.hpp"

namespace cutmit {

/// Post-selected distribution over the remaining key positions plus the
/// bookkeeping needed to judge the selection: retained_fraction is the
/// signed mass that passed the ancilla-zero filter relative to the total,
/// clipped_mass is the negative weight discarded before renormalization.
struct PostSelectionResult {
  Distribution distribution;
  double retained_fraction = 0.0;
  double clipped_mass = 0.0;
};

/// Keeps only outcomes whose bits at `ancilla_bits` are all zero, drops those
/// key positions, clips any negative weights (quasi-distributions from cut
/// reconstruction may carry them), and renormalizes.
inline PostSelectionResult post_select(const Distribution& d,
                                       const std::vector<int>& ancilla_bits) {
  d.validate();
  if (ancilla_bits.empty()) throw ValidationError("post-selection needs at least one ancilla bit");
  std::vector<bool> is_ancilla(static_cast<size_t>(d.num_bits), false);
  for (int b : ancilla_bits) {
    if (b < 0 || b >= d.num_bits)
      throw ValidationError("ancilla bit position " + std::to_string(b) + " out of range");
    if (is_ancilla[static_cast<size_t>(b)])
      throw ValidationError("duplicate ancilla bit position " + std::to_string(b));
    is_ancilla[static_cast<size_t>(b)] = true;
  }

  double total = 0.0;
  double kept = 0.0;
  Distribution out(d.num_bits - static_cast<int>(ancilla_bits.size()), DistributionKind::Mitigated);
  out.shots = d.shots;
  for (const auto& [key, w] : d.table) {
    total += w;
    bool pass = true;
    for (int b : ancilla_bits)
      if (key[static_cast<size_t>(b)] != '0') { pass = false; break; }
    if (!pass) continue;
    kept += w;
    std::string reduced;
    reduced.reserve(static_cast<size_t>(out.num_bits));
    for (int i = 0; i < d.num_bits; ++i)
      if (!is_ancilla[static_cast<size_t>(i)]) reduced.push_back(key[static_cast<size_t>(i)]);
    out.add(reduced, w);
  }
  if (total <= 0.0) throw DegenerateDistributionError("post-selection input has no positive mass");
  double positive_kept = 0.0;
  for (const auto& [key, w] : out.table) positive_kept += std::max(0.0, w);
  if (positive_kept <= 0.0)
    throw EmptyPostSelectionError("no outcome satisfied the ancilla-zero condition");

  PostSelectionResult r;
  r.retained_fraction = std::clamp(kept / total, 0.0, 1.0);
  double clipped = 0.0;
  r.distribution = normalize_clipped(out, &clipped);
  r.clipped_mass = clipped;
  return r;
}

}  // namespace cutmit
