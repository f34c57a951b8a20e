// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <vector>

#include "cutmit/circuit.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/gate.hpp"
#include "cutmit/pauli.hpp"

namespace cutmit {

/// Qubit-wise commuting measurement group: every member term's letters agree
/// with `basis` wherever both are non-identity.
struct MeasurementGroup {
  PauliString basis;
  std::vector<size_t> term_indices;  // indices into the Hamiltonian's terms
};

/// Greedy first-fit grouping of the non-identity terms, in term order.
inline std::vector<MeasurementGroup> measurement_groups(const Hamiltonian& h) {
  h.validate();
  std::vector<MeasurementGroup> groups;
  for (size_t ti = 0; ti < h.terms.size(); ++ti) {
    const PauliString& word = h.terms[ti].word;
    if (word.is_identity()) continue;
    bool placed = false;
    for (MeasurementGroup& g : groups) {
      if (!g.basis.qubit_wise_compatible(word)) continue;
      for (int q = 0; q < word.num_qubits(); ++q)
        if (word.at(q) != 'I') g.basis.letters[static_cast<size_t>(q)] = word.at(q);
      g.term_indices.push_back(ti);
      placed = true;
      break;
    }
    if (!placed) groups.push_back({word, {ti}});
  }
  return groups;
}

/// Basis-change gates that rotate the group basis onto Z before measurement:
/// H for X; RZ(-pi/2) followed by H for Y.
inline std::vector<Gate> basis_change_gates(const PauliString& basis) {
  std::vector<Gate> gates;
  for (int q = 0; q < basis.num_qubits(); ++q) {
    switch (basis.at(q)) {
      case 'X':
        gates.push_back(g_h(q));
        break;
      case 'Y':
        gates.push_back(g_rz(q, -std::numbers::pi / 2));
        gates.push_back(g_h(q));
        break;
      default:
        break;
    }
  }
  return gates;
}

/// Base circuit with the group's basis change appended; measured qubits are
/// unchanged (the base must already measure everything the terms touch).
inline Circuit grouped_circuit(const Circuit& base, const MeasurementGroup& g) {
  if (g.basis.num_qubits() != base.num_qubits)
    throw ValidationError("measurement group width does not match the circuit");
  Circuit c = base;
  for (const Gate& gate : basis_change_gates(g.basis)) c.add(gate);
  return c;
}

}  // namespace cutmit
