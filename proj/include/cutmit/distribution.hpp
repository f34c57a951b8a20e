// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutmit/errors.hpp"

namespace cutmit {

using json = nlohmann::ordered_json;

/// Provenance of a measurement distribution.
enum class DistributionKind { Exact, Sampled, Reconstructed, Mitigated, Recombined };

inline std::string distribution_kind_label(DistributionKind k) {
  switch (k) {
    case DistributionKind::Exact:         return "exact";
    case DistributionKind::Sampled:       return "sampled";
    case DistributionKind::Reconstructed: return "reconstructed";
    case DistributionKind::Mitigated:     return "mitigated";
    case DistributionKind::Recombined:    return "recombined";
  }
  return "?";
}

inline std::optional<DistributionKind> distribution_kind_from_label(const std::string& s) {
  if (s == "exact") return DistributionKind::Exact;
  if (s == "sampled") return DistributionKind::Sampled;
  if (s == "reconstructed") return DistributionKind::Reconstructed;
  if (s == "mitigated") return DistributionKind::Mitigated;
  if (s == "recombined") return DistributionKind::Recombined;
  return std::nullopt;
}

/// Bitstring key for a basis state; position k holds measured slot k, so the
/// leftmost character is slot 0. Slot k of index means bit k (LSB first).
inline std::string bitstring_from_index(std::uint64_t idx, int num_bits) {
  std::string s(static_cast<size_t>(num_bits), '0');
  for (int k = 0; k < num_bits; ++k)
    if ((idx >> k) & 1u) s[static_cast<size_t>(k)] = '1';
  return s;
}

inline std::uint64_t index_from_bitstring(const std::string& s) {
  std::uint64_t idx = 0;
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] != '0' && s[k] != '1')
      throw ValidationError("bitstring key must contain only 0 and 1");
    if (s[k] == '1') idx |= (1ull << k);
  }
  return idx;
}

/// Sparse weighted table over fixed-length bitstrings. Weights are real and
/// may be negative for raw cut reconstructions; every consumer that needs a
/// probability distribution normalizes first.
struct Distribution {
  int num_bits = 0;
  DistributionKind kind = DistributionKind::Exact;
  std::uint64_t shots = 0;      // 0 when not produced by sampling
  double clipped_mass = 0.0;    // negative weight removed by normalization
  std::map<std::string, double> table;

  Distribution() = default;
  explicit Distribution(int bits, DistributionKind k = DistributionKind::Exact)
      : num_bits(bits), kind(k) {
    if (bits < 0) throw ValidationError("negative bit count");
  }

  double weight(const std::string& key) const {
    auto it = table.find(key);
    return it == table.end() ? 0.0 : it->second;
  }

  void add(const std::string& key, double w) {
    if (static_cast<int>(key.size()) != num_bits)
      throw ValidationError("key length " + std::to_string(key.size()) +
                            " does not match bit count " + std::to_string(num_bits));
    table[key] += w;
  }

  double total() const {
    double s = 0.0;
    for (const auto& [k, w] : table) s += w;
    return s;
  }

  void validate() const {
    if (num_bits < 0) throw ValidationError("negative bit count");
    for (const auto& [k, w] : table) {
      if (static_cast<int>(k.size()) != num_bits)
        throw ValidationError("key '" + k + "' has wrong length");
      (void)index_from_bitstring(k);
      if (!std::isfinite(w)) throw ValidationError("non-finite weight for key '" + k + "'");
    }
  }

  bool is_probability(double tol = 1e-9) const {
    double s = 0.0;
    for (const auto& [k, w] : table) {
      if (w < -tol) return false;
      s += w;
    }
    return std::abs(s - 1.0) <= tol;
  }

  /// Drops exact zeros; keeps negatives.
  void prune(double tol = 0.0) {
    for (auto it = table.begin(); it != table.end();)
      it = (std::abs(it->second) <= tol) ? table.erase(it) : std::next(it);
  }
};

/// Clips negative weights to zero, renormalizes to unit mass, and reports the
/// clipped negative mass. Throws when nothing positive remains.
inline Distribution normalize_clipped(const Distribution& d, double* clipped_mass = nullptr) {
  Distribution out(d.num_bits, d.kind);
  out.shots = d.shots;
  double clipped = 0.0, total = 0.0;
  for (const auto& [k, w] : d.table) {
    if (w <= 0.0) {
      clipped += -w;
      continue;
    }
    out.table[k] = w;
    total += w;
  }
  if (total <= 0.0)
    throw DegenerateDistributionError("no positive weight remains after clipping");
  for (auto& [k, w] : out.table) w /= total;
  out.clipped_mass = clipped;
  if (clipped_mass) *clipped_mass = clipped;
  return out;
}

/// Total variation distance (half L1) between two tables on the same bits.
inline double tv_distance(const Distribution& a, const Distribution& b) {
  if (a.num_bits != b.num_bits) throw ValidationError("bit count mismatch");
  double s = 0.0;
  auto ia = a.table.begin(), ib = b.table.begin();
  while (ia != a.table.end() || ib != b.table.end()) {
    if (ib == b.table.end() || (ia != a.table.end() && ia->first < ib->first)) {
      s += std::abs(ia->second);
      ++ia;
    } else if (ia == a.table.end() || ib->first < ia->first) {
      s += std::abs(ib->second);
      ++ib;
    } else {
      s += std::abs(ia->second - ib->second);
      ++ia; ++ib;
    }
  }
  return 0.5 * s;
}

/// Keeps the listed key positions (in the given order) and sums out the rest.
inline Distribution marginalize(const Distribution& d, const std::vector<int>& keep) {
  for (int p : keep)
    if (p < 0 || p >= d.num_bits) throw ValidationError("marginal position out of range");
  Distribution out(static_cast<int>(keep.size()), d.kind);
  out.shots = d.shots;
  for (const auto& [k, w] : d.table) {
    std::string key(keep.size(), '0');
    for (size_t i = 0; i < keep.size(); ++i) key[i] = k[static_cast<size_t>(keep[i])];
    out.table[key] += w;
  }
  return out;
}

/// Keeps entries whose bit at `position` equals `bit`, removing that position
/// from the key. Reports the retained mass fraction before renormalizing.
inline Distribution condition_on_bit(const Distribution& d, int position, char bit,
                                     double* retained_fraction = nullptr) {
  if (position < 0 || position >= d.num_bits)
    throw ValidationError("condition position out of range");
  if (bit != '0' && bit != '1') throw ValidationError("condition bit must be '0' or '1'");
  Distribution out(d.num_bits - 1, d.kind);
  out.shots = d.shots;
  double kept = 0.0, total = 0.0;
  for (const auto& [k, w] : d.table) {
    total += w;
    if (k[static_cast<size_t>(position)] != bit) continue;
    kept += w;
    std::string key = k;
    key.erase(static_cast<size_t>(position), 1);
    out.table[key] += w;
  }
  if (retained_fraction) *retained_fraction = (total == 0.0) ? 0.0 : kept / total;
  return out;
}

/// Outer product: keys concatenate as a-key then b-key.
inline Distribution tensor(const Distribution& a, const Distribution& b) {
  Distribution out(a.num_bits + b.num_bits, a.kind);
  for (const auto& [ka, wa] : a.table)
    for (const auto& [kb, wb] : b.table)
      out.table[ka + kb] += wa * wb;
  return out;
}

/// Sum over keys of weight times (-1)^(ones among `positions`).
inline double parity_expectation(const Distribution& d, const std::vector<int>& positions) {
  for (int p : positions)
    if (p < 0 || p >= d.num_bits) throw ValidationError("parity position out of range");
  double s = 0.0;
  for (const auto& [k, w] : d.table) {
    int ones = 0;
    for (int p : positions) ones += (k[static_cast<size_t>(p)] == '1');
    s += (ones & 1) ? -w : w;
  }
  return s;
}

inline json distribution_to_json(const Distribution& d) {
  d.validate();
  json j;
  j["format"] = "cutmit.distribution/v1";
  j["num_bits"] = d.num_bits;
  j["kind"] = distribution_kind_label(d.kind);
  if (d.shots > 0) j["shots"] = d.shots;
  if (d.clipped_mass > 0.0) j["clipped_mass"] = d.clipped_mass;
  json table = json::object();
  for (const auto& [k, w] : d.table) table[k] = w;
  j["table"] = std::move(table);
  return j;
}

inline Distribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num_bits") || !j.contains("table"))
    throw ValidationError("distribution JSON needs num_bits and table");
  Distribution d(j.at("num_bits").get<int>());
  if (j.contains("kind")) {
    auto k = distribution_kind_from_label(j.at("kind").get<std::string>());
    if (!k) throw ValidationError("unknown distribution kind '" +
                                  j.at("kind").get<std::string>() + "'");
    d.kind = *k;
  }
  if (j.contains("shots")) d.shots = j.at("shots").get<std::uint64_t>();
  if (j.contains("clipped_mass")) d.clipped_mass = j.at("clipped_mass").get<double>();
  const json& table = j.at("table");
  if (!table.is_object()) throw ValidationError("distribution table must be an object");
  for (auto it = table.begin(); it != table.end(); ++it) {
    if (!it.value().is_number())
      throw ValidationError("distribution weight for '" + it.key() + "' must be a number");
    d.add(it.key(), it.value().get<double>());
  }
  d.validate();
  return d;
}

}  // namespace cutmit
