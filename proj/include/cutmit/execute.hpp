// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "cutmit/circuit.hpp"
#include "cutmit/density_matrix.hpp"
#include "cutmit/distribution.hpp"
#include "cutmit/noise.hpp"
#include "cutmit/pauli.hpp"
#include "cutmit/rng.hpp"
#include "cutmit/statevector.hpp"

namespace cutmit {

inline void apply_preparation_noise(DensityMatrix& dm, const NoiseModel& noise) {
  if (noise.spam_flip == 0.0) return;
  for (int q = 0; q < dm.num_qubits(); ++q) dm.bit_flip(q, noise.spam_flip);
}

/// Gate followed by its attached stochastic noise: arity-matched depolarizing
/// first, then the per-qubit Pauli rates of every touched qubit.
inline void apply_gate_noisy(DensityMatrix& dm, const Gate& g, const NoiseModel& noise) {
  dm.apply(g);
  if (g.qubits.size() == 1) {
    if (noise.depolarizing_1q > 0.0) dm.depolarize_1q(noise.depolarizing_1q, g.qubits[0]);
  } else {
    if (noise.depolarizing_2q > 0.0)
      dm.depolarize_2q(noise.depolarizing_2q, g.qubits[0], g.qubits[1]);
  }
  for (int q : g.qubits)
    if (auto it = noise.per_qubit_pauli.find(q); it != noise.per_qubit_pauli.end())
      dm.pauli_channel(q, it->second.px, it->second.py, it->second.pz);
}

inline void apply_gates_noisy(DensityMatrix& dm, const std::vector<Gate>& gates,
                              const NoiseModel& noise) {
  for (const Gate& g : gates) apply_gate_noisy(dm, g, noise);
}

/// Full noisy state after preparation noise and every gate, before any
/// measurement effects.
inline DensityMatrix evolve_density(const Circuit& c, const NoiseModel& noise) {
  c.validate();
  noise.validate();
  std::vector<PrepState> preps = c.initial_preparations;
  if (preps.empty()) preps.assign(static_cast<size_t>(c.num_qubits), PrepState::Zero);
  DensityMatrix dm = DensityMatrix::from_preparations(preps);
  apply_preparation_noise(dm, noise);
  apply_gates_noisy(dm, c.gates, noise);
  return dm;
}

/// Diagonal marginal over the listed qubits, key position k reading qubit
/// measured[k]. No readout error here.
inline Distribution measured_marginal(const DensityMatrix& dm, const std::vector<int>& measured) {
  Distribution d(static_cast<int>(measured.size()), DistributionKind::Exact);
  std::vector<double> diag = dm.diagonal_probabilities();
  for (std::uint64_t idx = 0; idx < diag.size(); ++idx) {
    double p = diag[idx];
    if (p == 0.0) continue;
    std::string key(measured.size(), '0');
    for (size_t k = 0; k < measured.size(); ++k)
      if ((idx >> measured[k]) & 1u) key[k] = '1';
    d.table[key] += p;
  }
  d.prune();
  return d;
}

/// Applies independent per-bit classical flips: bit k flips with the rate of
/// the qubit it reads.
inline void apply_readout_flips(Distribution& d, const std::vector<int>& measured,
                                const NoiseModel& noise) {
  for (size_t k = 0; k < measured.size(); ++k) {
    auto it = noise.readout_flip.find(measured[k]);
    if (it == noise.readout_flip.end() || it->second == 0.0) continue;
    const double f = it->second;
    std::map<std::string, double> next;
    for (const auto& [key, w] : d.table) {
      std::string flipped = key;
      flipped[k] = (key[k] == '0') ? '1' : '0';
      next[key] += (1.0 - f) * w;
      next[flipped] += f * w;
    }
    d.table = std::move(next);
  }
}

/// Exact outcome distribution of the measured qubits, including readout
/// error. Requires a measurement spec.
inline Distribution exact_distribution(const Circuit& c, const NoiseModel& noise) {
  if (c.measured_qubits.empty())
    throw ValidationError("circuit has no measured qubits");
  DensityMatrix dm = evolve_density(c, noise);
  Distribution d = measured_marginal(dm, c.measured_qubits);
  apply_readout_flips(d, c.measured_qubits, noise);
  return d;
}

/// Noise-free exact distribution through the pure-state path.
inline Distribution exact_distribution_pure(const Circuit& c) {
  c.validate();
  if (c.measured_qubits.empty())
    throw ValidationError("circuit has no measured qubits");
  std::vector<PrepState> preps = c.initial_preparations;
  if (preps.empty()) preps.assign(static_cast<size_t>(c.num_qubits), PrepState::Zero);
  Statevector sv = Statevector::from_preparations(preps);
  sv.apply_all(c.gates);
  std::vector<double> probs = sv.probabilities();
  Distribution d(static_cast<int>(c.measured_qubits.size()), DistributionKind::Exact);
  for (std::uint64_t idx = 0; idx < probs.size(); ++idx) {
    double p = probs[idx];
    if (p == 0.0) continue;
    std::string key(c.measured_qubits.size(), '0');
    for (size_t k = 0; k < c.measured_qubits.size(); ++k)
      if ((idx >> c.measured_qubits[k]) & 1u) key[k] = '1';
    d.table[key] += p;
  }
  d.prune();
  return d;
}

/// Finite-shot estimate: inverse-CDF draws from the pre-readout marginal in
/// key order, then per-shot readout flips. Weights are counts over shots.
inline Distribution sample_distribution(const Circuit& c, const NoiseModel& noise,
                                        std::uint64_t shots, Rng& rng) {
  if (shots == 0) throw ValidationError("shot count must be positive");
  if (c.measured_qubits.empty())
    throw ValidationError("circuit has no measured qubits");
  DensityMatrix dm = evolve_density(c, noise);
  Distribution ideal = measured_marginal(dm, c.measured_qubits);

  std::vector<std::pair<std::string, double>> cdf;
  cdf.reserve(ideal.table.size());
  double acc = 0.0;
  for (const auto& [key, w] : ideal.table) {
    acc += std::max(0.0, w);
    cdf.emplace_back(key, acc);
  }
  if (cdf.empty() || acc <= 0.0)
    throw ExecutionError("state has no measurable support");

  std::vector<double> flip(c.measured_qubits.size(), 0.0);
  bool any_flip = false;
  for (size_t k = 0; k < c.measured_qubits.size(); ++k)
    if (auto it = noise.readout_flip.find(c.measured_qubits[k]); it != noise.readout_flip.end()) {
      flip[k] = it->second;
      any_flip = any_flip || it->second > 0.0;
    }

  Distribution out(static_cast<int>(c.measured_qubits.size()), DistributionKind::Sampled);
  out.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.next_double() * acc;
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u,
                               [](const auto& e, double v) { return e.second < v; });
    if (it == cdf.end()) it = std::prev(cdf.end());
    std::string key = it->first;
    if (any_flip)
      for (size_t k = 0; k < key.size(); ++k)
        if (flip[k] > 0.0 && rng.next_double() < flip[k]) key[k] = (key[k] == '0') ? '1' : '0';
    out.table[key] += 1.0;
  }
  for (auto& [key, w] : out.table) w /= static_cast<double>(shots);
  return out;
}

/// tr(P rho). Pauli words act as signed permutations, so the trace reads one
/// matrix entry per basis index.
inline double expectation(const DensityMatrix& dm, const PauliString& word) {
  if (word.num_qubits() != dm.num_qubits())
    throw ValidationError("Pauli word length does not match state qubit count");
  const Eigen::MatrixXcd& rho = dm.matrix();

  std::uint64_t flip_mask = 0;
  for (int q = 0; q < word.num_qubits(); ++q) {
    char l = word.at(q);
    if (l == 'X' || l == 'Y') flip_mask |= (1ull << q);
  }
  complexd total = 0.0;
  const std::uint64_t dim = 1ull << dm.num_qubits();
  for (std::uint64_t k = 0; k < dim; ++k) {
    // tr(P rho) = sum_k phase(j) rho(j, k) with j = k ^ mask, where
    // P|j> = phase(j) |j ^ mask>.
    const std::uint64_t j = k ^ flip_mask;
    complexd phase = 1.0;
    for (int q = 0; q < word.num_qubits(); ++q) {
      const bool bit = (j >> q) & 1u;
      switch (word.at(q)) {
        case 'Y': phase *= bit ? complexd(0, -1) : complexd(0, 1); break;
        case 'Z': if (bit) phase = -phase; break;
        default: break;
      }
    }
    total += phase * rho(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k));
  }
  return total.real();
}

/// Expectation of a Pauli word on the noisy pre-measurement state of c.
inline double pauli_expectation(const Circuit& c, const NoiseModel& noise,
                                const PauliString& word) {
  if (word.num_qubits() != c.num_qubits)
    throw ValidationError("Pauli word length does not match circuit");
  return expectation(evolve_density(c, noise), word);
}

}  // namespace cutmit
