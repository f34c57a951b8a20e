// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "cutmit/circuit.hpp"
#include "cutmit/gate.hpp"
#include "cutmit/pauli.hpp"
#include "cutmit/statevector.hpp"

namespace cutmit {

inline Eigen::Matrix2cd pauli_matrix(char letter) {
  const complexd i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw ValidationError(std::string("invalid Pauli letter '") + letter + "'");
  }
  return m;
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Dense unitary of a gate list on n qubits, built by evolving each basis
/// column. Cost is 2^n statevector evolutions; callers keep n small.
inline Eigen::MatrixXcd gates_unitary(const std::vector<Gate>& gates, int n) {
  check_size_limit(n, kMaxDensityQubits, "dense unitary construction");
  const std::int64_t dim = 1ll << n;
  Eigen::MatrixXcd u(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    Statevector sv(n);
    sv.amplitudes().setZero();
    sv.amplitudes()(col) = 1.0;
    sv.apply_all(gates);
    u.col(col) = sv.amplitudes();
  }
  return u;
}

inline Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  return gates_unitary(c.gates, c.num_qubits);
}

/// Full-space matrix of a Pauli word: a signed permutation with one entry
/// per column.
inline Eigen::MatrixXcd pauli_word_unitary(const PauliString& word) {
  const int n = word.num_qubits();
  check_size_limit(n, kMaxDensityQubits, "dense Pauli construction");
  const std::int64_t dim = 1ll << n;
  std::uint64_t flip_mask = 0;
  for (int q = 0; q < n; ++q)
    if (word.at(q) == 'X' || word.at(q) == 'Y') flip_mask |= (1ull << q);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    complexd phase = 1.0;
    for (int q = 0; q < n; ++q) {
      const bool bit = (static_cast<std::uint64_t>(col) >> q) & 1u;
      switch (word.at(q)) {
        case 'Y': phase *= bit ? complexd(0, -1) : complexd(0, 1); break;
        case 'Z': if (bit) phase = -phase; break;
        default: break;
      }
    }
    m(static_cast<std::int64_t>(static_cast<std::uint64_t>(col) ^ flip_mask), col) = phase;
  }
  return m;
}

/// True iff the word's matrix commutes with the circuit's unitary within
/// 1e-10 in max norm. Dense check, so the size cap applies.
inline bool pauli_commutes_with_circuit(const PauliString& p, const Circuit& c) {
  if (p.num_qubits() != c.num_qubits)
    throw ValidationError("Pauli word length does not match circuit qubit count");
  check_size_limit(c.num_qubits, kMaxDensityQubits, "dense commutation check");
  Eigen::MatrixXcd u = circuit_unitary(c);
  Eigen::MatrixXcd pm = pauli_word_unitary(p);
  return max_abs_diff(pm * u, u * pm) < 1e-10;
}

/// True when b == e^{i phase} a for some real phase, within tol in max norm.
inline bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                              double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) < tol) return max_abs_diff(a, b) <= tol;
  complexd phase = b(r, c) / a(r, c);
  double mag = std::abs(phase);
  if (std::abs(mag - 1.0) > tol) return false;
  phase /= mag;
  return max_abs_diff(phase * a, b) <= tol;
}

/// Angles for a single-qubit unitary written as e^{i gamma} times
///
///   [[cos(t/2),            -e^{i lambda} sin(t/2)],
///    [e^{i phi} sin(t/2),   e^{i(phi+lambda)} cos(t/2)]]
struct ZyzAngles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  double gamma = 0.0;
};

namespace detail {
inline double wrap_angle(double a) {
  const double tau = 2.0 * std::numbers::pi;
  a = std::fmod(a, tau);
  if (a <= -std::numbers::pi) a += tau;
  if (a > std::numbers::pi) a -= tau;
  // Avoid the signed zero so serialized angles are stable.
  return a == 0.0 ? 0.0 : a;
}
}  // namespace detail

inline ZyzAngles decompose_zyz(const Eigen::Matrix2cd& u, double tol = 1e-9) {
  if (max_abs_diff(u * u.adjoint(), Eigen::Matrix2cd::Identity()) > 1e-8)
    throw ValidationError("matrix is not unitary");
  ZyzAngles a;
  const double c = std::min(1.0, std::abs(u(0, 0)));
  const double s = std::min(1.0, std::abs(u(1, 0)));
  a.theta = 2.0 * std::atan2(s, c);
  if (s <= tol) {
    a.gamma = std::arg(u(0, 0));
    a.lambda = detail::wrap_angle(std::arg(u(1, 1)) - a.gamma);
    a.phi = 0.0;
  } else if (c <= tol) {
    a.gamma = std::arg(u(1, 0));
    a.phi = 0.0;
    a.lambda = detail::wrap_angle(std::arg(-u(0, 1)) - a.gamma);
  } else {
    a.gamma = std::arg(u(0, 0));
    a.phi = detail::wrap_angle(std::arg(u(1, 0)) - a.gamma);
    a.lambda = detail::wrap_angle(std::arg(-u(0, 1)) - a.gamma);
  }
  a.gamma = detail::wrap_angle(a.gamma);
  if (max_abs_diff(std::exp(complexd(0, a.gamma)) * u3_matrix(a.theta, a.phi, a.lambda), u) >
      1e-7)
    throw ValidationError("angle decomposition failed to reproduce the matrix");
  return a;
}

/// Controlled version of a 2x2 unitary as a native gate: CZ when the matrix
/// is Z up to tol, otherwise a CU carrying the exact phase.
inline Gate controlled_gate_from_matrix(const Eigen::Matrix2cd& m, int control, int target,
                                        double tol = 1e-12) {
  if (max_abs_diff(m, pauli_matrix('Z')) <= tol) return g_cz(control, target);
  ZyzAngles a = decompose_zyz(m);
  return g_cu(control, target, a.theta, a.phi, a.lambda, a.gamma);
}

}  // namespace cutmit
