// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cutmit/circuit.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/gate.hpp"

namespace cutmit {

/// Caps on dense representations. A 12-qubit density matrix (or full unitary)
/// is 4096x4096 complex doubles, about 256 MiB; a 16-qubit statevector is
/// 1 MiB. Larger requests are configuration errors, not allocation attempts.
constexpr int kMaxDensityQubits = 12;
constexpr int kMaxStatevectorQubits = 16;

inline void check_size_limit(int n, int limit, const char* what) {
  if (n <= 0) throw ValidationError("qubit count must be positive");
  if (n > limit)
    throw UnsupportedSizeError(std::string(what) + " supports at most " +
                               std::to_string(limit) + " qubits, got " + std::to_string(n));
}

/// Pure state over n qubits. Basis index bit k is qubit k, so amplitude
/// index 0b01 on two qubits means qubit 0 in |1> and qubit 1 in |0>.
class Statevector {
 public:
  explicit Statevector(int n) : n_(n) {
    check_size_limit(n, kMaxStatevectorQubits, "statevector simulation");
    amps_ = Eigen::VectorXcd::Zero(1ll << n);
    amps_(0) = 1.0;
  }

  static Statevector from_preparations(const std::vector<PrepState>& preps) {
    Statevector sv(static_cast<int>(preps.size()));
    for (int q = 0; q < sv.n_; ++q) {
      Eigen::Vector2cd v = prep_vector(preps[static_cast<size_t>(q)]);
      if (v(0) != 1.0 || v(1) != 0.0) {
        Eigen::Matrix2cd m;
        // Any unitary with first column v maps |0> to the prepared state.
        m << v(0), -std::conj(v(1)), v(1), std::conj(v(0));
        sv.apply_matrix_1q(m, q);
      }
    }
    return sv;
  }

  int num_qubits() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  void apply_matrix_1q(const Eigen::Matrix2cd& m, int q) {
    const std::int64_t dim = amps_.size();
    const std::int64_t bit = 1ll << q;
    for (std::int64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const complexd a0 = amps_(i), a1 = amps_(i | bit);
      amps_(i) = m(0, 0) * a0 + m(0, 1) * a1;
      amps_(i | bit) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }

  /// Local basis index is 2*x(q_high) + x(q_low): the first operand supplies
  /// the high bit, matching gate_matrix_2q.
  void apply_matrix_2q(const Eigen::Matrix4cd& m, int q_high, int q_low) {
    const std::int64_t dim = amps_.size();
    const std::int64_t bh = 1ll << q_high, bl = 1ll << q_low;
    for (std::int64_t i = 0; i < dim; ++i) {
      if ((i & bh) || (i & bl)) continue;
      const std::int64_t i00 = i, i01 = i | bl, i10 = i | bh, i11 = i | bh | bl;
      Eigen::Vector4cd v(amps_(i00), amps_(i01), amps_(i10), amps_(i11));
      Eigen::Vector4cd w = m * v;
      amps_(i00) = w(0);
      amps_(i01) = w(1);
      amps_(i10) = w(2);
      amps_(i11) = w(3);
    }
  }

  void apply(const Gate& g) {
    for (int q : g.qubits)
      if (q < 0 || q >= n_) throw ValidationError("gate qubit out of range");
    if (g.qubits.size() == 1) {
      apply_matrix_1q(gate_matrix_1q(g), g.qubits[0]);
    } else {
      apply_matrix_2q(gate_matrix_2q(g), g.qubits[0], g.qubits[1]);
    }
  }

  void apply_all(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) apply(g);
  }

  double norm() const { return amps_.norm(); }

  std::vector<double> probabilities() const {
    std::vector<double> p(static_cast<size_t>(amps_.size()));
    for (std::int64_t i = 0; i < amps_.size(); ++i) p[static_cast<size_t>(i)] = std::norm(amps_(i));
    return p;
  }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

}  // namespace cutmit
