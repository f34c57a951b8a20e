// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent dense reference implementation for tests. Builds full 2^n
// matrices by explicit index arithmetic and multiplies them out; shares no
// evolution code with the simulators under test. Cost is O(4^n) per gate,
// so callers keep n small.

#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cutmit/circuit.hpp"
#include "cutmit/gate.hpp"
#include "cutmit/pauli.hpp"

namespace oracle {

using complexd = std::complex<double>;

inline Eigen::Matrix2cd one_qubit_matrix(const cutmit::Gate& g) {
  using cutmit::GateKind;
  const complexd i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::H:  m << r, r, r, -r; return m;
    case GateKind::X:  m << 0, 1, 1, 0; return m;
    case GateKind::Y:  m << 0, -i, i, 0; return m;
    case GateKind::Z:  m << 1, 0, 0, -1; return m;
    case GateKind::S:  m << 1, 0, 0, i; return m;
    case GateKind::RX: {
      const double h = g.params[0] / 2.0;
      m << std::cos(h), -i * std::sin(h), -i * std::sin(h), std::cos(h);
      return m;
    }
    case GateKind::RY: {
      const double h = g.params[0] / 2.0;
      m << std::cos(h), -std::sin(h), std::sin(h), std::cos(h);
      return m;
    }
    case GateKind::RZ: {
      const double h = g.params[0] / 2.0;
      m << std::exp(-i * h), 0, 0, std::exp(i * h);
      return m;
    }
    default:
      throw std::runtime_error("oracle: not a one-qubit gate");
  }
}

inline Eigen::Matrix4cd two_qubit_matrix(const cutmit::Gate& g) {
  using cutmit::GateKind;
  const complexd i(0.0, 1.0);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  switch (g.kind) {
    case GateKind::CZ:
      m(3, 3) = -1.0;
      return m;
    case GateKind::CX:
      m(2, 2) = 0;
      m(3, 3) = 0;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    case GateKind::CU: {
      const double th = g.params[0], ph = g.params[1], la = g.params[2], al = g.params[3];
      const double c = std::cos(th / 2.0), s = std::sin(th / 2.0);
      Eigen::Matrix2cd u;
      u << c, -std::exp(i * la) * s, std::exp(i * ph) * s, std::exp(i * (ph + la)) * c;
      m.block<2, 2>(2, 2) = std::exp(i * al) * u;
      return m;
    }
    default:
      throw std::runtime_error("oracle: not a two-qubit gate");
  }
}

/// Full-space matrix of one gate: entry (r, c) copies the local matrix entry
/// when every uninvolved bit of r and c agrees, and is zero otherwise. Gate
/// operand order maps the first operand to the high local bit.
inline Eigen::MatrixXcd embed(const cutmit::Gate& g, int n) {
  const std::int64_t dim = 1ll << n;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  if (g.qubits.size() == 1) {
    const Eigen::Matrix2cd m = one_qubit_matrix(g);
    const std::int64_t bit = 1ll << g.qubits[0];
    for (std::int64_t r = 0; r < dim; ++r)
      for (std::int64_t c = 0; c < dim; ++c)
        if ((r & ~bit) == (c & ~bit))
          full(r, c) = m((r & bit) ? 1 : 0, (c & bit) ? 1 : 0);
    return full;
  }
  const Eigen::Matrix4cd m = two_qubit_matrix(g);
  const std::int64_t bh = 1ll << g.qubits[0], bl = 1ll << g.qubits[1];
  const std::int64_t rest = ~(bh | bl);
  for (std::int64_t r = 0; r < dim; ++r)
    for (std::int64_t c = 0; c < dim; ++c)
      if ((r & rest) == (c & rest))
        full(r, c) = m(2 * ((r & bh) ? 1 : 0) + ((r & bl) ? 1 : 0),
                       2 * ((c & bh) ? 1 : 0) + ((c & bl) ? 1 : 0));
  return full;
}

inline Eigen::MatrixXcd gates_unitary(const std::vector<cutmit::Gate>& gates, int n) {
  const std::int64_t dim = 1ll << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const cutmit::Gate& g : gates) u = embed(g, n) * u;
  return u;
}

inline Eigen::Vector2cd prep_vector(cutmit::PrepState s) {
  using cutmit::PrepState;
  const double r = 1.0 / std::sqrt(2.0);
  const complexd i(0.0, 1.0);
  switch (s) {
    case PrepState::Zero:   return {1.0, 0.0};
    case PrepState::One:    return {0.0, 1.0};
    case PrepState::Plus:   return {r, r};
    case PrepState::Minus:  return {r, -r};
    case PrepState::PlusI:  return {r, r * i};
    default:                return {r, -r * i};
  }
}

/// Initial state as an explicit tensor product, index bit q = qubit q.
inline Eigen::VectorXcd initial_state(const cutmit::Circuit& c) {
  const std::int64_t dim = 1ll << c.num_qubits;
  Eigen::VectorXcd psi(dim);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    complexd a = 1.0;
    for (int q = 0; q < c.num_qubits; ++q)
      a *= oracle::prep_vector(c.preparation(q))((idx >> q) & 1);
    psi(idx) = a;
  }
  return psi;
}

/// Noiseless output distribution over the circuit's measured qubits, keyed
/// by bit strings in measurement order (leftmost character = first measured
/// qubit).
inline std::map<std::string, double> distribution(const cutmit::Circuit& c) {
  const Eigen::VectorXcd psi = oracle::gates_unitary(c.gates, c.num_qubits) * initial_state(c);
  std::map<std::string, double> out;
  const std::int64_t dim = 1ll << c.num_qubits;
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    const double p = std::norm(psi(idx));
    if (p == 0.0) continue;
    std::string key(c.measured_qubits.size(), '0');
    for (size_t s = 0; s < c.measured_qubits.size(); ++s)
      if ((idx >> c.measured_qubits[s]) & 1) key[s] = '1';
    out[key] += p;
  }
  return out;
}

inline Eigen::MatrixXcd pauli_word_matrix(const cutmit::PauliString& word) {
  const int n = word.num_qubits();
  const complexd i(0.0, 1.0);
  const std::int64_t dim = 1ll << n;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(dim, dim);
  for (int q = 0; q < n; ++q) {
    const char letter = word.letters[static_cast<size_t>(q)];
    if (letter == 'I') continue;
    Eigen::Matrix2cd m;
    if (letter == 'X') m << 0, 1, 1, 0;
    if (letter == 'Y') m << 0, -i, i, 0;
    if (letter == 'Z') m << 1, 0, 0, -1;
    const std::int64_t bit = 1ll << q;
    Eigen::MatrixXcd layer = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t r = 0; r < dim; ++r)
      for (std::int64_t c = 0; c < dim; ++c)
        if ((r & ~bit) == (c & ~bit))
          layer(r, c) = m((r & bit) ? 1 : 0, (c & bit) ? 1 : 0);
    full = layer * full;
  }
  return full;
}

/// Dense commutation test of a Pauli word against a whole gate list.
inline bool commutes(const cutmit::PauliString& word, const std::vector<cutmit::Gate>& gates,
                     int n, double tol = 1e-12) {
  const Eigen::MatrixXcd p = pauli_word_matrix(word);
  const Eigen::MatrixXcd u = oracle::gates_unitary(gates, n);
  return ((p * u - u * p).cwiseAbs().maxCoeff()) <= tol;
}

/// Total variation distance between string-keyed distributions.
inline double tv_distance(const std::map<std::string, double>& a,
                          const std::map<std::string, double>& b) {
  double d = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      d += std::abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      d += std::abs(ib->second);
      ++ib;
    } else {
      d += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return d / 2.0;
}

}  // namespace oracle
