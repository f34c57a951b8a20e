// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "cutmit/circuit.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/pauli.hpp"
#include "cutmit/unitary.hpp"

namespace cutmit {

/// Check-unitary pair for one protected qubit: the wrapped circuit must
/// satisfy right * U * left == U (up to phase). Both sides are single-qubit
/// gate lists on target_qubit, applied in list order.
struct CheckPair {
  int target_qubit = -1;
  std::vector<Gate> left;
  std::vector<Gate> right;
  int ancilla = -1;  // assigned at wrap time

  void validate() const {
    if (target_qubit < 0) throw ValidationError("check pair needs a target qubit");
    for (const std::vector<Gate>* side : {&left, &right})
      for (const Gate& g : *side) {
        g.validate();
        if (g.qubits.size() != 1 || g.qubits[0] != target_qubit)
          throw ValidationError("check gates must act on the target qubit only");
      }
  }
};

/// 2x2 operator of a single-qubit gate list in application order.
inline Eigen::Matrix2cd check_matrix(const std::vector<Gate>& gates) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (const Gate& g : gates) m = gate_matrix_1q(g) * m;
  return m;
}

/// True iff right * U * left == U up to a global phase within 1e-10, where U
/// is the circuit's unitary. Dense check; the density-size cap applies.
inline bool verify_check_condition(const Circuit& c, const CheckPair& pair) {
  pair.validate();
  check_size_limit(c.num_qubits, kMaxDensityQubits, "dense check verification");
  if (pair.target_qubit >= c.num_qubits)
    throw ValidationError("check target qubit out of range");
  Eigen::MatrixXcd u = circuit_unitary(c);
  Eigen::MatrixXcd lhs = gates_unitary(pair.left, c.num_qubits);
  lhs = u * lhs;
  lhs = gates_unitary(pair.right, c.num_qubits) * lhs;
  return equal_up_to_phase(u, lhs, 1e-10);
}

/// Plain Z/Z pair, valid when Z on qubit k commutes with the whole circuit.
/// Names the first gate that breaks commutation otherwise.
inline CheckPair build_z_check(const Circuit& c, int k) {
  c.validate();
  if (k < 0 || k >= c.num_qubits) throw ValidationError("checked qubit out of range");
  PauliString zk = PauliString::single(c.num_qubits, k, 'Z');
  if (!pauli_commutes_with_circuit(zk, c)) {
    for (size_t gi = 0; gi < c.gates.size(); ++gi) {
      const Gate& g = c.gates[gi];
      if (!g.touches(k)) continue;
      Circuit one(c.num_qubits);
      one.add(g);
      if (!pauli_commutes_with_circuit(zk, one))
        throw CheckInfeasibleError("Z on q" + std::to_string(k) +
                                   " does not commute with gate " + std::to_string(gi) +
                                   " (" + gate_name(g.kind) + ")");
    }
    throw CheckInfeasibleError("Z on q" + std::to_string(k) +
                               " does not commute with the circuit");
  }
  CheckPair pair;
  pair.target_qubit = k;
  pair.left = {g_z(k)};
  pair.right = {g_z(k)};
  return pair;
}

/// Caller-supplied frame pair; verified against the circuit it is meant to
/// wrap before returning.
inline CheckPair make_check_pair(const Circuit& c, int k, std::vector<Gate> left,
                                 std::vector<Gate> right) {
  CheckPair pair;
  pair.target_qubit = k;
  pair.left = std::move(left);
  pair.right = std::move(right);
  pair.validate();
  if (!verify_check_condition(c, pair))
    throw CheckInfeasibleError("supplied check pair does not satisfy the wrap condition on q" +
                               std::to_string(k));
  return pair;
}

}  // namespace cutmit
