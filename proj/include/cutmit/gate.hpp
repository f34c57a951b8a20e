// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cutmit/errors.hpp"

namespace cutmit {

using complexd = std::complex<double>;

enum class GateKind {
  RX,
  RY,
  RZ,
  H,
  X,
  Y,
  Z,
  S,
  CZ,
  CX,
  CU,  // controlled single-qubit unitary, params (theta, phi, lambda, gamma)
};

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CZ:
    case GateKind::CX:
    case GateKind::CU:
      return 2;
    default:
      return 1;
  }
}

inline int gate_param_count(GateKind k) {
  switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return 1;
    case GateKind::CU:
      return 4;
    default:
      return 0;
  }
}

inline std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H:  return "H";
    case GateKind::X:  return "X";
    case GateKind::Y:  return "Y";
    case GateKind::Z:  return "Z";
    case GateKind::S:  return "S";
    case GateKind::CZ: return "CZ";
    case GateKind::CX: return "CX";
    case GateKind::CU: return "CU";
  }
  return "?";
}

inline std::optional<GateKind> gate_kind_from_name(const std::string& name) {
  static const std::pair<const char*, GateKind> table[] = {
      {"RX", GateKind::RX}, {"RY", GateKind::RY}, {"RZ", GateKind::RZ},
      {"H", GateKind::H},   {"X", GateKind::X},   {"Y", GateKind::Y},
      {"Z", GateKind::Z},   {"S", GateKind::S},   {"CZ", GateKind::CZ},
      {"CX", GateKind::CX}, {"CU", GateKind::CU}};
  std::string up;
  for (char ch : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  for (const auto& [n, k] : table)
    if (up == n) return k;
  return std::nullopt;
}

/// One gate application: kind, ordered qubit operands, real angle parameters.
struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  std::vector<double> params;

  Gate(GateKind k, std::vector<int> q, std::vector<double> p = {})
      : kind(k), qubits(std::move(q)), params(std::move(p)) {
    validate();
  }

  void validate() const {
    if (static_cast<int>(qubits.size()) != gate_arity(kind))
      throw ValidationError(gate_name(kind) + ": expected " +
                            std::to_string(gate_arity(kind)) + " qubits, got " +
                            std::to_string(qubits.size()));
    if (qubits.size() == 2 && qubits[0] == qubits[1])
      throw ValidationError(gate_name(kind) + ": qubit operands must be distinct");
    if (static_cast<int>(params.size()) != gate_param_count(kind))
      throw ValidationError(gate_name(kind) + ": expected " +
                            std::to_string(gate_param_count(kind)) +
                            " parameters, got " + std::to_string(params.size()));
    for (double p : params)
      if (!std::isfinite(p))
        throw ValidationError(gate_name(kind) + ": non-finite parameter");
  }

  bool operator==(const Gate& o) const {
    return kind == o.kind && qubits == o.qubits && params == o.params;
  }

  bool touches(int q) const {
    for (int x : qubits)
      if (x == q) return true;
    return false;
  }
};

// Convenience constructors.
inline Gate g_rx(int q, double a) { return Gate(GateKind::RX, {q}, {a}); }
inline Gate g_ry(int q, double a) { return Gate(GateKind::RY, {q}, {a}); }
inline Gate g_rz(int q, double a) { return Gate(GateKind::RZ, {q}, {a}); }
inline Gate g_h(int q) { return Gate(GateKind::H, {q}); }
inline Gate g_x(int q) { return Gate(GateKind::X, {q}); }
inline Gate g_y(int q) { return Gate(GateKind::Y, {q}); }
inline Gate g_z(int q) { return Gate(GateKind::Z, {q}); }
inline Gate g_s(int q) { return Gate(GateKind::S, {q}); }
inline Gate g_cz(int a, int b) { return Gate(GateKind::CZ, {a, b}); }
inline Gate g_cx(int c, int t) { return Gate(GateKind::CX, {c, t}); }
inline Gate g_cu(int c, int t, double theta, double phi, double lam, double gamma) {
  return Gate(GateKind::CU, {c, t}, {theta, phi, lam, gamma});
}

/// U(theta, phi, lambda) in the standard Euler-angle form.
inline Eigen::Matrix2cd u3_matrix(double theta, double phi, double lam) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const complexd i(0.0, 1.0);
  Eigen::Matrix2cd m;
  m << c, -std::exp(i * lam) * s,
       std::exp(i * phi) * s, std::exp(i * (phi + lam)) * c;
  return m;
}

/// 2x2 matrix of a single-qubit gate.
inline Eigen::Matrix2cd gate_matrix_1q(const Gate& g) {
  const complexd i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::RX: {
      double c = std::cos(g.params[0] / 2), s = std::sin(g.params[0] / 2);
      m << c, -i * s, -i * s, c;
      return m;
    }
    case GateKind::RY: {
      double c = std::cos(g.params[0] / 2), s = std::sin(g.params[0] / 2);
      m << c, -s, s, c;
      return m;
    }
    case GateKind::RZ: {
      m << std::exp(-i * g.params[0] / 2.0), 0, 0, std::exp(i * g.params[0] / 2.0);
      return m;
    }
    case GateKind::H: {
      double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::X: m << 0, 1, 1, 0; return m;
    case GateKind::Y: m << 0, -i, i, 0; return m;
    case GateKind::Z: m << 1, 0, 0, -1; return m;
    case GateKind::S: m << 1, 0, 0, i; return m;
    default:
      throw ValidationError(gate_name(g.kind) + " is not a single-qubit gate");
  }
}

/// 4x4 matrix of a two-qubit gate in the local basis |q0 q1> where q0 is the
/// gate's first operand and contributes the high local bit: local index
/// l = 2*x(q0) + x(q1).
inline Eigen::Matrix4cd gate_matrix_2q(const Gate& g) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  switch (g.kind) {
    case GateKind::CZ:
      m(3, 3) = -1.0;
      return m;
    case GateKind::CX:
      m(2, 2) = 0; m(3, 3) = 0; m(2, 3) = 1; m(3, 2) = 1;
      return m;
    case GateKind::CU: {
      const complexd i(0.0, 1.0);
      Eigen::Matrix2cd u =
          std::exp(i * g.params[3]) * u3_matrix(g.params[0], g.params[1], g.params[2]);
      m.block<2, 2>(2, 2) = u;
      return m;
    }
    default:
      throw ValidationError(gate_name(g.kind) + " is not a two-qubit gate");
  }
}

/// Inverse gate (for serializing conjugating frames and basis changes).
inline Gate gate_inverse(const Gate& g) {
  switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return Gate(g.kind, g.qubits, {-g.params[0]});
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::CX:
      return g;
    case GateKind::S:
      // S^-1 up to global phase; exact as an uncontrolled gate.
      return Gate(GateKind::RZ, g.qubits, {-M_PI / 2.0});
    case GateKind::CU:
      return Gate(GateKind::CU, g.qubits,
                  {-g.params[0], -g.params[2], -g.params[1], -g.params[3]});
  }
  throw ValidationError("unknown gate kind");
}

}  // namespace cutmit
