// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cutmit/errors.hpp"
#include "cutmit/gate.hpp"

namespace cutmit {

/// Pure single-qubit preparation labels: computational basis plus X and Y
/// eigenstates.
enum class PrepState { Zero, One, Plus, Minus, PlusI, MinusI };

inline std::string prep_label(PrepState s) {
  switch (s) {
    case PrepState::Zero:   return "0";
    case PrepState::One:    return "1";
    case PrepState::Plus:   return "+";
    case PrepState::Minus:  return "-";
    case PrepState::PlusI:  return "+i";
    case PrepState::MinusI: return "-i";
  }
  return "?";
}

inline std::optional<PrepState> prep_from_label(const std::string& s) {
  if (s == "0") return PrepState::Zero;
  if (s == "1") return PrepState::One;
  if (s == "+") return PrepState::Plus;
  if (s == "-") return PrepState::Minus;
  if (s == "+i") return PrepState::PlusI;
  if (s == "-i") return PrepState::MinusI;
  return std::nullopt;
}

inline Eigen::Vector2cd prep_vector(PrepState s) {
  const double r = 1.0 / std::sqrt(2.0);
  const complexd i(0.0, 1.0);
  switch (s) {
    case PrepState::Zero:   return Eigen::Vector2cd(1, 0);
    case PrepState::One:    return Eigen::Vector2cd(0, 1);
    case PrepState::Plus:   return Eigen::Vector2cd(r, r);
    case PrepState::Minus:  return Eigen::Vector2cd(r, -r);
    case PrepState::PlusI:  return Eigen::Vector2cd(r, r * i);
    case PrepState::MinusI: return Eigen::Vector2cd(r, -r * i);
  }
  return Eigen::Vector2cd(1, 0);
}

/// Ordered gate list over indexed qubits with a terminal measurement spec.
/// This is the intermediate representation every other component consumes.
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
  std::vector<int> measured_qubits;
  // Per-qubit initial states; empty means all |0>.
  std::vector<PrepState> initial_preparations;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {
    if (n <= 0) throw ValidationError("circuit must have a positive qubit count");
  }

  Circuit& add(Gate g) {
    for (int q : g.qubits)
      if (q < 0 || q >= num_qubits)
        throw ValidationError("gate " + gate_name(g.kind) + " references qubit q" +
                              std::to_string(q) + " outside range [0, " +
                              std::to_string(num_qubits) + ")");
    gates.push_back(std::move(g));
    return *this;
  }

  Circuit& measure_all() {
    measured_qubits.resize(num_qubits);
    for (int q = 0; q < num_qubits; ++q) measured_qubits[q] = q;
    return *this;
  }

  Circuit& measure(std::vector<int> qubits) {
    std::set<int> seen;
    for (int q : qubits) {
      if (q < 0 || q >= num_qubits)
        throw ValidationError("measured qubit q" + std::to_string(q) + " out of range");
      if (!seen.insert(q).second)
        throw ValidationError("measured qubit q" + std::to_string(q) + " listed twice");
    }
    measured_qubits = std::move(qubits);
    return *this;
  }

  Circuit& prepare(int q, PrepState s) {
    if (q < 0 || q >= num_qubits)
      throw ValidationError("prepared qubit q" + std::to_string(q) + " out of range");
    if (initial_preparations.empty())
      initial_preparations.assign(num_qubits, PrepState::Zero);
    initial_preparations[q] = s;
    return *this;
  }

  PrepState preparation(int q) const {
    if (initial_preparations.empty()) return PrepState::Zero;
    return initial_preparations[static_cast<size_t>(q)];
  }

  bool all_zero_preps() const {
    for (PrepState p : initial_preparations)
      if (p != PrepState::Zero) return false;
    return true;
  }

  void validate() const {
    if (num_qubits <= 0) throw ValidationError("circuit must have a positive qubit count");
    for (const Gate& g : gates) {
      g.validate();
      for (int q : g.qubits)
        if (q < 0 || q >= num_qubits)
          throw ValidationError("gate qubit index out of range");
    }
    std::set<int> seen;
    for (int q : measured_qubits) {
      if (q < 0 || q >= num_qubits)
        throw ValidationError("measured qubit index out of range");
      if (!seen.insert(q).second)
        throw ValidationError("duplicate measured qubit");
    }
    if (!initial_preparations.empty() &&
        static_cast<int>(initial_preparations.size()) != num_qubits)
      throw ValidationError("initial preparation list length mismatch");
  }

  bool operator==(const Circuit& o) const {
    auto norm_preps = [](const Circuit& c) {
      std::vector<PrepState> p = c.initial_preparations;
      if (p.empty()) p.assign(c.num_qubits, PrepState::Zero);
      return p;
    };
    return num_qubits == o.num_qubits && gates == o.gates &&
           measured_qubits == o.measured_qubits && norm_preps(*this) == norm_preps(o);
  }
};

}  // namespace cutmit
