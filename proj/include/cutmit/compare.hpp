// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cutmit/ansatz.hpp"
#include "cutmit/energy.hpp"
#include "cutmit/execute.hpp"
#include "cutmit/measurement.hpp"
#include "cutmit/pipeline.hpp"
#include "cutmit/postselect.hpp"
#include "cutmit/recombine.hpp"
#include "cutmit/rng.hpp"

namespace cutmit {

struct ComparisonConfig {
  std::uint64_t shots = 10000;        // per measurement-group run; 0 = exact
  std::uint64_t seed = 0;
  std::vector<int> protected_qubits;  // empty = every qubit
  RecombinationConfig recombination;
  bool mitigation_spam = false;
};

struct ComparisonResult {
  EnergyReport noiseless;
  EnergyReport unmitigated;
  std::map<int, EnergyReport> pcs_noisy;  // sandwich run entirely on the noisy backend
  std::map<int, EnergyReport> sqem;       // per protected qubit
  EnergyReport recombined;
  std::map<int, double> retained_fraction;  // mean over measurement groups
  bool recombination_converged = true;
  std::int64_t recombination_iterations = 0;  // max over groups
  double recombination_delta = 0.0;           // max over groups
  std::int64_t executed_configurations = 0;

  std::vector<const EnergyReport*> all_reports() const {
    std::vector<const EnergyReport*> r{&noiseless, &unmitigated};
    for (const auto& [k, rep] : pcs_noisy) r.push_back(&rep);
    for (const auto& [k, rep] : sqem) r.push_back(&rep);
    r.push_back(&recombined);
    return r;
  }
};

namespace detail {

inline Distribution run_grouped(const Circuit& c, const NoiseModel& noise, std::uint64_t shots,
                                std::uint64_t seed) {
  if (shots > 0) {
    Rng rng(seed);
    return sample_distribution(c, noise, shots, rng);
  }
  return exact_distribution(c, noise);
}

}  // namespace detail

/// Runs every estimation method on one (ansatz, Hamiltonian, noise) setting
/// with one root seed. Paired methods reuse the same unmitigated sampling:
/// the recombination input distributions are exactly the unmitigated and
/// per-qubit mitigated runs reported alongside.
inline ComparisonResult run_comparison(const AnsatzSpec& spec, const std::vector<double>& params,
                                       const Hamiltonian& h, const NoiseModel& noise,
                                       const ComparisonConfig& cfg) {
  spec.validate();
  h.validate();
  noise.validate();
  if (h.num_qubits != spec.num_qubits)
    throw ValidationError("Hamiltonian and ansatz qubit counts differ");
  std::vector<int> protected_qubits = cfg.protected_qubits;
  if (protected_qubits.empty())
    for (int q = 0; q < spec.num_qubits; ++q) protected_qubits.push_back(q);
  for (int k : protected_qubits)
    if (k < 0 || k >= spec.num_qubits)
      throw ValidationError("protected qubit q" + std::to_string(k) + " out of range");

  const Circuit ansatz = build_ansatz(spec, params);
  const std::vector<MeasurementGroup> groups = measurement_groups(h);
  const size_t ng = groups.size();

  ComparisonResult out;

  std::vector<Distribution> noiseless(ng), unmitigated(ng);
  std::map<int, std::vector<Distribution>> mitigated;  // qubit -> per group
  std::map<int, std::vector<Distribution>> pcs_noisy;

  for (size_t gi = 0; gi < ng; ++gi) {
    const std::string gl = "g" + std::to_string(gi);
    const Circuit grouped = grouped_circuit(ansatz, groups[gi]);
    noiseless[gi] = exact_distribution_pure(grouped);
    unmitigated[gi] = detail::run_grouped(grouped, noise, cfg.shots,
                                          derive_seed(cfg.seed, "unmitigated/" + gl));
    out.executed_configurations += 1;

    for (int k : protected_qubits) {
      const std::string kl = "q" + std::to_string(k) + "/" + gl;
      CheckPair pair = ansatz_check_pair(spec, params, k);
      std::vector<Gate> suffix = basis_change_gates(groups[gi].basis);

      // Whole sandwich on the noisy backend: the checks themselves add noise.
      SandwichCircuit s = wrap(ansatz, {pair});
      for (const Gate& g : suffix) s.circuit.add(g);
      Distribution raw = detail::run_grouped(s.circuit, noise, cfg.shots,
                                             derive_seed(cfg.seed, "pcs/" + kl));
      out.executed_configurations += 1;
      pcs_noisy[k].push_back(post_select(raw, s.ancilla_bits).distribution);

      SqemJob job;
      job.base_circuit = ansatz;
      job.protected_qubit = k;
      job.noise = noise;
      job.shots_per_variant = cfg.shots;
      job.seed = derive_seed(cfg.seed, "sqem/" + kl);
      job.pair = pair;
      job.measurement_suffix = suffix;
      job.mitigation_spam = cfg.mitigation_spam;
      SqemJobResult jr = run_job(job);
      out.executed_configurations += jr.executed_configurations;
      out.retained_fraction[k] += jr.retained_fraction / static_cast<double>(ng);
      mitigated[k].push_back(std::move(jr.mitigated));
    }
  }

  out.noiseless = energy_from_distributions(h, groups, noiseless, "noiseless", 0);
  out.unmitigated = energy_from_distributions(h, groups, unmitigated, "unmitigated", cfg.shots);
  for (int k : protected_qubits) {
    out.pcs_noisy[k] = energy_from_distributions(h, groups, pcs_noisy[k],
                                                 "pcs_noisy_q" + std::to_string(k), cfg.shots);
    out.sqem[k] = energy_from_distributions(h, groups, mitigated[k],
                                            "sqem_q" + std::to_string(k), cfg.shots);
  }

  std::vector<Distribution> recombined(ng);
  for (size_t gi = 0; gi < ng; ++gi) {
    std::map<int, Distribution> per_qubit;
    for (int k : protected_qubits) per_qubit[k] = mitigated[k][gi];
    RecombinationResult rr = recombine(unmitigated[gi], per_qubit, cfg.recombination);
    out.recombination_converged = out.recombination_converged && rr.converged;
    out.recombination_iterations = std::max(out.recombination_iterations, rr.iterations);
    out.recombination_delta = std::max(out.recombination_delta, rr.achieved_delta);
    recombined[gi] = std::move(rr.result);
  }
  out.recombined = energy_from_distributions(h, groups, recombined, "recombined", cfg.shots);
  return out;
}

}  // namespace cutmit
