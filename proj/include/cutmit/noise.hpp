// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutmit/distribution.hpp"
#include "cutmit/errors.hpp"

namespace cutmit {

struct PauliRates {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
};

/// Gate-attached stochastic noise. Depolarizing terms fire after every gate
/// of matching arity; per-qubit Pauli rates fire after every gate touching
/// that qubit; readout flips act on measured bits; the preparation flip acts
/// once per qubit before the first gate.
struct NoiseModel {
  double depolarizing_1q = 0.0;
  double depolarizing_2q = 0.0;
  std::map<int, PauliRates> per_qubit_pauli;
  std::map<int, double> readout_flip;
  double spam_flip = 0.0;

  bool is_trivial() const {
    if (depolarizing_1q != 0.0 || depolarizing_2q != 0.0 || spam_flip != 0.0) return false;
    for (const auto& [q, r] : per_qubit_pauli)
      if (r.px != 0.0 || r.py != 0.0 || r.pz != 0.0) return false;
    for (const auto& [q, p] : readout_flip)
      if (p != 0.0) return false;
    return true;
  }

  void validate() const {
    auto check_prob = [](double p, const std::string& name) {
      if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError(name + " must lie in [0, 1]");
    };
    check_prob(depolarizing_1q, "depolarizing_1q");
    check_prob(depolarizing_2q, "depolarizing_2q");
    check_prob(spam_flip, "spam_flip");
    for (const auto& [q, r] : per_qubit_pauli) {
      if (q < 0) throw ValidationError("per_qubit_pauli qubit index must be non-negative");
      check_prob(r.px, "per_qubit_pauli px");
      check_prob(r.py, "per_qubit_pauli py");
      check_prob(r.pz, "per_qubit_pauli pz");
      if (r.px + r.py + r.pz > 1.0)
        throw ValidationError("per_qubit_pauli rates must sum to at most 1");
    }
    for (const auto& [q, p] : readout_flip) {
      if (q < 0) throw ValidationError("readout_flip qubit index must be non-negative");
      check_prob(p, "readout_flip probability");
    }
  }

  /// Per-qubit terms rekeyed for a subcircuit whose local qubit l came from
  /// original qubit local_to_original[l]. Global rates carry over unchanged.
  NoiseModel remapped(const std::vector<int>& local_to_original) const {
    NoiseModel out;
    out.depolarizing_1q = depolarizing_1q;
    out.depolarizing_2q = depolarizing_2q;
    out.spam_flip = spam_flip;
    for (int l = 0; l < static_cast<int>(local_to_original.size()); ++l) {
      int orig = local_to_original[static_cast<size_t>(l)];
      if (auto it = per_qubit_pauli.find(orig); it != per_qubit_pauli.end())
        out.per_qubit_pauli[l] = it->second;
      if (auto it = readout_flip.find(orig); it != readout_flip.end())
        out.readout_flip[l] = it->second;
    }
    return out;
  }
};

inline json noise_model_to_json(const NoiseModel& m) {
  m.validate();
  json j;
  j["format"] = "cutmit.noise/v1";
  j["one_qubit_depolarizing"] = m.depolarizing_1q;
  j["two_qubit_depolarizing"] = m.depolarizing_2q;
  if (!m.per_qubit_pauli.empty()) {
    json pq = json::object();
    for (const auto& [q, r] : m.per_qubit_pauli)
      pq[std::to_string(q)] = {{"px", r.px}, {"py", r.py}, {"pz", r.pz}};
    j["per_qubit_pauli"] = std::move(pq);
  }
  if (!m.readout_flip.empty()) {
    json ro = json::object();
    for (const auto& [q, p] : m.readout_flip) ro[std::to_string(q)] = p;
    j["readout_flip"] = std::move(ro);
  }
  j["spam_flip"] = m.spam_flip;
  return j;
}

inline NoiseModel noise_model_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("noise model JSON must be an object");
  NoiseModel m;
  auto parse_index = [](const std::string& key) {
    try {
      size_t pos = 0;
      int q = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument("trailing");
      return q;
    } catch (const std::exception&) {
      throw ValidationError("qubit key '" + key + "' is not an integer");
    }
  };
  if (j.contains("one_qubit_depolarizing"))
    m.depolarizing_1q = j.at("one_qubit_depolarizing").get<double>();
  if (j.contains("two_qubit_depolarizing"))
    m.depolarizing_2q = j.at("two_qubit_depolarizing").get<double>();
  if (j.contains("spam_flip")) m.spam_flip = j.at("spam_flip").get<double>();
  if (j.contains("per_qubit_pauli")) {
    for (auto it = j.at("per_qubit_pauli").begin(); it != j.at("per_qubit_pauli").end(); ++it) {
      PauliRates r;
      const json& v = it.value();
      if (v.contains("px")) r.px = v.at("px").get<double>();
      if (v.contains("py")) r.py = v.at("py").get<double>();
      if (v.contains("pz")) r.pz = v.at("pz").get<double>();
      m.per_qubit_pauli[parse_index(it.key())] = r;
    }
  }
  if (j.contains("readout_flip"))
    for (auto it = j.at("readout_flip").begin(); it != j.at("readout_flip").end(); ++it)
      m.readout_flip[parse_index(it.key())] = it.value().get<double>();
  m.validate();
  return m;
}

}  // namespace cutmit
