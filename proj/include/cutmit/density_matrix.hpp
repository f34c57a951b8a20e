// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cutmit/circuit.hpp"
#include "cutmit/gate.hpp"
#include "cutmit/statevector.hpp"
#include "cutmit/unitary.hpp"

namespace cutmit {

/// Mixed state over n qubits as a dense matrix. Basis index bit k is qubit k,
/// matching Statevector.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n) : n_(n) {
    check_size_limit(n, kMaxDensityQubits, "density-matrix simulation");
    rho_ = Eigen::MatrixXcd::Zero(1ll << n, 1ll << n);
    rho_(0, 0) = 1.0;
  }

  static DensityMatrix from_statevector(const Statevector& sv) {
    DensityMatrix dm(sv.num_qubits());
    dm.rho_ = sv.amplitudes() * sv.amplitudes().adjoint();
    return dm;
  }

  static DensityMatrix from_preparations(const std::vector<PrepState>& preps) {
    return from_statevector(Statevector::from_preparations(preps));
  }

  int num_qubits() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Eigen::MatrixXcd& matrix() { return rho_; }

  /// rho := (m on qubit q) rho
  void apply_left_1q(const Eigen::Matrix2cd& m, int q) {
    const std::int64_t dim = rho_.rows();
    const std::int64_t bit = 1ll << q;
    for (std::int64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      Eigen::RowVectorXcd r0 = rho_.row(i), r1 = rho_.row(i | bit);
      rho_.row(i) = m(0, 0) * r0 + m(0, 1) * r1;
      rho_.row(i | bit) = m(1, 0) * r0 + m(1, 1) * r1;
    }
  }

  /// rho := rho (m on qubit q)^dagger
  void apply_right_adjoint_1q(const Eigen::Matrix2cd& m, int q) {
    const std::int64_t dim = rho_.cols();
    const std::int64_t bit = 1ll << q;
    for (std::int64_t j = 0; j < dim; ++j) {
      if (j & bit) continue;
      Eigen::VectorXcd c0 = rho_.col(j), c1 = rho_.col(j | bit);
      rho_.col(j) = std::conj(m(0, 0)) * c0 + std::conj(m(0, 1)) * c1;
      rho_.col(j | bit) = std::conj(m(1, 0)) * c0 + std::conj(m(1, 1)) * c1;
    }
  }

  void conjugate_1q(const Eigen::Matrix2cd& m, int q) {
    apply_left_1q(m, q);
    apply_right_adjoint_1q(m, q);
  }

  /// rho := (m on q_high, q_low) rho (m ...)^dagger with the local basis
  /// convention of gate_matrix_2q.
  void conjugate_2q(const Eigen::Matrix4cd& m, int q_high, int q_low) {
    const std::int64_t dim = rho_.rows();
    const std::int64_t bh = 1ll << q_high, bl = 1ll << q_low;
    for (std::int64_t i = 0; i < dim; ++i) {
      if ((i & bh) || (i & bl)) continue;
      const std::int64_t idx[4] = {i, i | bl, i | bh, i | bh | bl};
      Eigen::Matrix<complexd, 4, Eigen::Dynamic> rows(4, dim);
      for (int r = 0; r < 4; ++r) rows.row(r) = rho_.row(idx[r]);
      rows = m * rows;
      for (int r = 0; r < 4; ++r) rho_.row(idx[r]) = rows.row(r);
    }
    for (std::int64_t j = 0; j < dim; ++j) {
      if ((j & bh) || (j & bl)) continue;
      const std::int64_t idx[4] = {j, j | bl, j | bh, j | bh | bl};
      Eigen::Matrix<complexd, Eigen::Dynamic, 4> cols(dim, 4);
      for (int c = 0; c < 4; ++c) cols.col(c) = rho_.col(idx[c]);
      cols = cols * m.adjoint();
      for (int c = 0; c < 4; ++c) rho_.col(idx[c]) = cols.col(c);
    }
  }

  void apply(const Gate& g) {
    for (int q : g.qubits)
      if (q < 0 || q >= n_) throw ValidationError("gate qubit out of range");
    if (g.qubits.size() == 1) {
      conjugate_1q(gate_matrix_1q(g), g.qubits[0]);
    } else {
      conjugate_2q(gate_matrix_2q(g), g.qubits[0], g.qubits[1]);
    }
  }

  /// rho := (1-px-py-pz) rho + px X rho X + py Y rho Y + pz Z rho Z
  void pauli_channel(int q, double px, double py, double pz) {
    if (px == 0.0 && py == 0.0 && pz == 0.0) return;
    Eigen::MatrixXcd acc = (1.0 - px - py - pz) * rho_;
    const char letters[3] = {'X', 'Y', 'Z'};
    const double rates[3] = {px, py, pz};
    for (int t = 0; t < 3; ++t) {
      if (rates[t] == 0.0) continue;
      DensityMatrix tmp(*this);
      tmp.conjugate_1q(pauli_matrix(letters[t]), q);
      acc += rates[t] * tmp.rho_;
    }
    rho_ = std::move(acc);
  }

  void bit_flip(int q, double p) { pauli_channel(q, p, 0.0, 0.0); }

  /// Uniform single-qubit depolarizing: each of X, Y, Z fires with p/3.
  void depolarize_1q(double p, int q) { pauli_channel(q, p / 3.0, p / 3.0, p / 3.0); }

  /// Uniform two-qubit depolarizing: the 15 non-identity Pauli pairs each
  /// fire with p/15.
  void depolarize_2q(double p, int q_high, int q_low) {
    if (p == 0.0) return;
    Eigen::MatrixXcd acc = (1.0 - p) * rho_;
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (a == 0 && b == 0) continue;
        DensityMatrix tmp(*this);
        if (a != 0) tmp.conjugate_1q(pauli_matrix(letters[a]), q_high);
        if (b != 0) tmp.conjugate_1q(pauli_matrix(letters[b]), q_low);
        acc += (p / 15.0) * tmp.rho_;
      }
    rho_ = std::move(acc);
  }

  double trace() const { return rho_.trace().real(); }

  /// tr(rho^2); equals the squared Frobenius norm for Hermitian rho.
  double purity() const { return rho_.squaredNorm(); }

  std::vector<double> diagonal_probabilities() const {
    std::vector<double> p(static_cast<size_t>(rho_.rows()));
    for (std::int64_t i = 0; i < rho_.rows(); ++i) p[static_cast<size_t>(i)] = rho_(i, i).real();
    return p;
  }

  void validate(double tol = 1e-9) const {
    if (std::abs(trace() - 1.0) > tol) throw ValidationError("density matrix trace is not 1");
    if (max_abs_diff(rho_, rho_.adjoint()) > tol)
      throw ValidationError("density matrix is not Hermitian");
  }

 private:
  int n_;
  Eigen::MatrixXcd rho_;
};

}  // namespace cutmit
