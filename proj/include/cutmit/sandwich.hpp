// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <vector>

#include "cutmit/checks.hpp"
#include "cutmit/circuit.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/unitary.hpp"

namespace cutmit {

/// Base circuit wrapped with ancilla-controlled check pairs. Noiseless
/// execution leaves every ancilla in |0> with probability 1.
struct SandwichCircuit {
  Circuit circuit;               // ancillas appended after the compute qubits
  int num_compute_qubits = 0;
  std::vector<CheckPair> pairs;  // with ancillas assigned
  std::vector<int> compute_bits; // key positions of the base measured qubits
  std::vector<int> ancilla_bits; // key positions of the ancilla outcomes
  // Gate indices of the controlled check gates in `circuit`, one entry per
  // pair: the left check's gate and the right check's gate.
  std::vector<int> left_gate_index;
  std::vector<int> right_gate_index;

  const CheckPair& pair_for(int qubit) const {
    for (const CheckPair& p : pairs)
      if (p.target_qubit == qubit) return p;
    throw ValidationError("no check pair wraps qubit q" + std::to_string(qubit));
  }

  int pair_index_for(int qubit) const {
    for (size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].target_qubit == qubit) return static_cast<int>(i);
    throw ValidationError("no check pair wraps qubit q" + std::to_string(qubit));
  }
};

/// Wraps `base` with the given check pairs. Each ancilla is prepared in |+>
/// by an H, controls its pair's left check before the base gates and its
/// right check after them (pair order: later pairs open earlier and close
/// later, so pair 0 sits innermost), and is closed by another H. A check
/// whose operator is exactly Z becomes a native CZ; anything else becomes a
/// controlled single-qubit unitary. Ancilla outcomes are appended to the
/// measured bits after the base circuit's measured qubits.
inline SandwichCircuit wrap(const Circuit& base, std::vector<CheckPair> pairs,
                            bool verify_pairs = true) {
  base.validate();
  const int n = base.num_qubits;
  const int np = static_cast<int>(pairs.size());
  if (np == 0) throw ValidationError("wrap needs at least one check pair");
  std::set<int> used_ancillas;
  std::set<int> used_targets;
  for (int i = 0; i < np; ++i) {
    CheckPair& p = pairs[i];
    p.validate();
    if (p.target_qubit >= n) throw ValidationError("check target qubit out of range");
    if (!used_targets.insert(p.target_qubit).second)
      throw ValidationError("duplicate check pair for qubit q" + std::to_string(p.target_qubit));
    if (p.ancilla < 0) p.ancilla = n + i;
    if (p.ancilla < n)
      throw ValidationError("ancilla index collides with a compute qubit");
    if (!used_ancillas.insert(p.ancilla).second)
      throw ValidationError("duplicate ancilla assignment a" + std::to_string(p.ancilla));
    if (verify_pairs && !verify_check_condition(base, p))
      throw CheckInfeasibleError("check pair on q" + std::to_string(p.target_qubit) +
                                 " does not satisfy the wrap condition");
  }
  int num_total = n;
  for (const CheckPair& p : pairs) num_total = std::max(num_total, p.ancilla + 1);

  SandwichCircuit s;
  s.num_compute_qubits = n;
  s.pairs = pairs;
  s.left_gate_index.assign(np, -1);
  s.right_gate_index.assign(np, -1);
  s.circuit = Circuit(num_total);
  for (int q = 0; q < n; ++q) s.circuit.prepare(q, base.preparation(q));

  // Opening: outermost pair first, so pair 0's left check lands right
  // before the base gates.
  for (int i = np - 1; i >= 0; --i) {
    const CheckPair& p = pairs[i];
    s.circuit.add(g_h(p.ancilla));
    s.left_gate_index[i] = static_cast<int>(s.circuit.gates.size());
    s.circuit.add(controlled_gate_from_matrix(check_matrix(p.left), p.ancilla, p.target_qubit));
  }
  for (const Gate& g : base.gates) s.circuit.add(g);
  for (int i = 0; i < np; ++i) {
    const CheckPair& p = pairs[i];
    s.right_gate_index[i] = static_cast<int>(s.circuit.gates.size());
    s.circuit.add(controlled_gate_from_matrix(check_matrix(p.right), p.ancilla, p.target_qubit));
    s.circuit.add(g_h(p.ancilla));
  }

  std::vector<int> measured = base.measured_qubits;
  for (int k = 0; k < static_cast<int>(measured.size()); ++k) s.compute_bits.push_back(k);
  for (const CheckPair& p : pairs) {
    s.ancilla_bits.push_back(static_cast<int>(measured.size()));
    measured.push_back(p.ancilla);
  }
  s.circuit.measure(measured);
  s.circuit.validate();
  return s;
}

}  // namespace cutmit
