// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cutmit/checks.hpp"
#include "cutmit/circuit.hpp"
#include "cutmit/distribution.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/gate.hpp"

namespace cutmit {

/// Hardware-efficient ansatz shape: an X on each occupied qubit, a rotation
/// layer, a CZ cascade over neighboring qubits, and a second rotation layer.
struct AnsatzSpec {
  int num_qubits = 0;
  std::vector<GateKind> rotations = {GateKind::RY, GateKind::RZ};  // per qubit, per layer
  std::string occupation;  // '0'/'1' per qubit; empty means all zeros

  int parameter_count() const {
    return 2 * num_qubits * static_cast<int>(rotations.size());
  }

  bool occupied(int q) const {
    return !occupation.empty() && occupation[static_cast<size_t>(q)] == '1';
  }

  void validate() const {
    if (num_qubits < 1) throw ValidationError("ansatz needs at least one qubit");
    if (rotations.empty()) throw ValidationError("ansatz needs at least one rotation per layer slot");
    for (GateKind k : rotations)
      if (k != GateKind::RX && k != GateKind::RY && k != GateKind::RZ)
        throw ValidationError("ansatz layers accept rotation gates only");
    if (!occupation.empty()) {
      if (static_cast<int>(occupation.size()) != num_qubits)
        throw ValidationError("occupation string length must match the qubit count");
      for (char c : occupation)
        if (c != '0' && c != '1') throw ValidationError("occupation characters must be 0 or 1");
    }
  }
};

namespace detail {

/// Rotation gates of one layer acting on qubit q, in application order.
/// Parameter order is layer-major, then qubit, then layer slot.
inline std::vector<Gate> layer_gates_on(const AnsatzSpec& spec, const std::vector<double>& params,
                                        int layer, int q) {
  const int r = static_cast<int>(spec.rotations.size());
  std::vector<Gate> gates;
  gates.reserve(static_cast<size_t>(r));
  for (int s = 0; s < r; ++s) {
    double theta = params[static_cast<size_t>(layer * spec.num_qubits * r + q * r + s)];
    gates.push_back(Gate{spec.rotations[static_cast<size_t>(s)], {q}, {theta}});
  }
  return gates;
}

inline std::vector<Gate> reversed_inverses(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.push_back(gate_inverse(*it));
  return out;
}

}  // namespace detail

/// Occupation X gates, rotation layer, CZ cascade, rotation layer; all
/// qubits measured. Gate count: occupied + 2 * num_qubits * slots + (n - 1).
inline Circuit build_ansatz(const AnsatzSpec& spec, const std::vector<double>& params) {
  spec.validate();
  if (static_cast<int>(params.size()) != spec.parameter_count())
    throw ValidationError("expected " + std::to_string(spec.parameter_count()) +
                          " parameters, got " + std::to_string(params.size()));
  Circuit c(spec.num_qubits);
  for (int q = 0; q < spec.num_qubits; ++q)
    if (spec.occupied(q)) c.add(g_x(q));
  for (int q = 0; q < spec.num_qubits; ++q)
    for (const Gate& g : detail::layer_gates_on(spec, params, 0, q)) c.add(g);
  for (int q = 0; q + 1 < spec.num_qubits; ++q) c.add(g_cz(q, q + 1));
  for (int q = 0; q < spec.num_qubits; ++q)
    for (const Gate& g : detail::layer_gates_on(spec, params, 1, q)) c.add(g);
  c.measure_all();
  return c;
}

/// Conjugated Z-check frames for the ansatz on qubit k. With W the qubit's
/// first-layer gates (occupation X first) and V the second-layer gates, the
/// pair is left = W^-1 Z W and right = V Z V^-1: the inner conjugation
/// cancels everything before the cascade, Z commutes through the CZ cascade,
/// and the outer conjugation cancels the second layer, so the wrap condition
/// holds exactly.
inline CheckPair ansatz_check_pair(const AnsatzSpec& spec, const std::vector<double>& params,
                                   int k) {
  spec.validate();
  if (static_cast<int>(params.size()) != spec.parameter_count())
    throw ValidationError("expected " + std::to_string(spec.parameter_count()) +
                          " parameters, got " + std::to_string(params.size()));
  if (k < 0 || k >= spec.num_qubits) throw ValidationError("checked qubit out of range");

  std::vector<Gate> w;
  if (spec.occupied(k)) w.push_back(g_x(k));
  for (const Gate& g : detail::layer_gates_on(spec, params, 0, k)) w.push_back(g);
  std::vector<Gate> v = detail::layer_gates_on(spec, params, 1, k);

  CheckPair pair;
  pair.target_qubit = k;
  pair.left = w;
  pair.left.push_back(g_z(k));
  for (const Gate& g : detail::reversed_inverses(w)) pair.left.push_back(g);
  pair.right = detail::reversed_inverses(v);
  pair.right.push_back(g_z(k));
  for (const Gate& g : v) pair.right.push_back(g);
  return pair;
}

inline AnsatzSpec ansatz_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != "cutmit.ansatz/v1")
    throw ParseError("expected a cutmit.ansatz/v1 object");
  AnsatzSpec spec;
  spec.num_qubits = j.value("num_qubits", 0);
  if (j.contains("rotations")) {
    spec.rotations.clear();
    for (const auto& name : j.at("rotations")) {
      auto kind = gate_kind_from_name(name.get<std::string>());
      if (!kind) throw ParseError("unknown rotation gate " + name.get<std::string>());
      spec.rotations.push_back(*kind);
    }
  }
  spec.occupation = j.value("occupation", std::string{});
  try {
    spec.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

inline json ansatz_to_json(const AnsatzSpec& spec) {
  json j;
  j["format"] = "cutmit.ansatz/v1";
  j["num_qubits"] = spec.num_qubits;
  json rot = json::array();
  for (GateKind k : spec.rotations) rot.push_back(gate_name(k));
  j["rotations"] = rot;
  j["occupation"] = spec.occupation.empty() ? std::string(static_cast<size_t>(spec.num_qubits), '0')
                                            : spec.occupation;
  return j;
}

inline std::vector<double> parameters_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != "cutmit.params/v1")
    throw ParseError("expected a cutmit.params/v1 object");
  std::vector<double> values;
  for (const auto& v : j.at("values")) values.push_back(v.get<double>());
  return values;
}

inline json parameters_to_json(const std::vector<double>& values) {
  json j;
  j["format"] = "cutmit.params/v1";
  j["values"] = values;
  return j;
}

}  // namespace cutmit
