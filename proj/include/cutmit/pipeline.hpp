// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cutmit/checks.hpp"
#include "cutmit/cutting.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/execute.hpp"
#include "cutmit/noise.hpp"
#include "cutmit/postselect.hpp"
#include "cutmit/reconstruct.hpp"
#include "cutmit/rng.hpp"
#include "cutmit/sandwich.hpp"
#include "cutmit/variants.hpp"

namespace cutmit {

/// Cut placements that split a sandwiched circuit into a mitigation fragment
/// (checks, ancilla, and the protected qubit's preparation and measurement)
/// and a main fragment (the wrapped payload): one cut immediately after the
/// left check's gate on the protected qubit, one immediately before the
/// right check's gate on it.
inline std::vector<CutPoint> plan_cuts_for_check(const SandwichCircuit& s, int k) {
  int pi;
  try {
    pi = s.pair_index_for(k);
  } catch (const ValidationError& e) {
    throw PlanningError(e.what());
  }
  CutPoint first{k, s.left_gate_index[static_cast<size_t>(pi)] + 1};
  CutPoint second{k, s.right_gate_index[static_cast<size_t>(pi)]};
  if (first.position >= second.position)
    throw PlanningError("no gate separates the checks on q" + std::to_string(k) +
                        "; the cut boundaries coincide");
  return {first, second};
}

/// One protected-qubit mitigation job: wrap, cut, reconstruct, post-select.
struct SqemJob {
  Circuit base_circuit;
  int protected_qubit = -1;
  NoiseModel noise;
  std::uint64_t shots_per_variant = 0;  // 0 runs each configuration exactly
  std::uint64_t seed = 0;
  std::optional<CheckPair> pair;        // default: plain Z/Z check
  // Basis-change gates appended after the closing checks, before measurement.
  // They are outside the wrap condition, so the pair is verified against the
  // base circuit alone.
  std::vector<Gate> measurement_suffix;
  // Alternative regime for the protected qubit's preparation and
  // measurement: run the mitigation fragment with the job's SPAM and
  // readout flip rates (gates stay noiseless) instead of fully noiseless.
  bool mitigation_spam = false;
};

struct SqemJobResult {
  Distribution mitigated;  // over the base circuit's measured qubits
  double retained_fraction = 0.0;
  double clipped_mass = 0.0;
  double negativity = 0.0;
  std::int64_t terms = 0;
  std::int64_t executed_configurations = 0;
};

namespace detail {

constexpr int kMitigationFragment = 0;
constexpr int kMainFragment = 1;

inline void assert_fragment_split(const FragmentSet& fs, size_t base_gates,
                                  const std::vector<Gate>& suffix, int protected_qubit) {
  // Wrapped layout: [H, left check, base..., right check, H, suffix...].
  // The main fragment must hold exactly the base gates plus the suffix gates
  // that avoid the protected qubit; the mitigation fragment holds the two
  // checks, the ancilla H pair, and the protected qubit's suffix gates.
  std::set<size_t> expect_main;
  std::set<size_t> expect_mitigation{0, 1, base_gates + 2, base_gates + 3};
  for (size_t i = 0; i < base_gates; ++i) expect_main.insert(2 + i);
  for (size_t i = 0; i < suffix.size(); ++i) {
    size_t origin = base_gates + 4 + i;
    if (suffix[i].touches(protected_qubit)) expect_mitigation.insert(origin);
    else expect_main.insert(origin);
  }
  const auto& main = fs.fragments[kMainFragment].gate_origin;
  const auto& mit = fs.fragments[kMitigationFragment].gate_origin;
  bool ok = std::set<size_t>(main.begin(), main.end()) == expect_main &&
            std::set<size_t>(mit.begin(), mit.end()) == expect_mitigation;
  if (!ok) throw ExecutionError("cut planning produced an unexpected fragment split");
}

}  // namespace detail

inline SqemJobResult run_job(const SqemJob& j) {
  j.base_circuit.validate();
  j.noise.validate();
  if (j.protected_qubit < 0 || j.protected_qubit >= j.base_circuit.num_qubits)
    throw ValidationError("protected qubit out of range");
  if (j.base_circuit.measured_qubits.empty())
    throw ValidationError("mitigation job needs measured qubits");

  CheckPair pair = j.pair ? *j.pair : build_z_check(j.base_circuit, j.protected_qubit);
  if (pair.target_qubit != j.protected_qubit)
    throw ValidationError("check pair targets a different qubit than the job protects");

  SandwichCircuit s = wrap(j.base_circuit, {pair});
  for (const Gate& g : j.measurement_suffix) {
    if (g.touches(s.pairs[0].ancilla))
      throw ValidationError("measurement suffix must not touch the ancilla");
    s.circuit.add(g);
  }
  std::vector<CutPoint> cuts = plan_cuts_for_check(s, j.protected_qubit);
  FragmentSet fs = cut_wires(s.circuit, cuts, detail::kMainFragment);
  detail::assert_fragment_split(fs, j.base_circuit.gates.size(), j.measurement_suffix,
                                j.protected_qubit);
  fs.backend_tags[detail::kMainFragment] = BackendTag::HardwareEmulated;
  fs.backend_tags[detail::kMitigationFragment] =
      j.mitigation_spam ? BackendTag::HardwareEmulated : BackendTag::NoiselessExact;

  std::array<BackendConfig, 2> backends;
  backends[detail::kMainFragment] = {BackendTag::HardwareEmulated, j.noise};
  if (j.mitigation_spam) {
    NoiseModel spam_only;
    spam_only.spam_flip = j.noise.spam_flip;
    spam_only.readout_flip = j.noise.readout_flip;
    backends[detail::kMitigationFragment] = {BackendTag::HardwareEmulated, spam_only};
  } else {
    backends[detail::kMitigationFragment] = {BackendTag::NoiselessExact, NoiseModel{}};
  }

  std::vector<VariantAssignment> variants = enumerate_variants(fs);
  ReconstructionResult rec =
      execute_and_reconstruct(fs, variants, backends, j.shots_per_variant, j.seed);
  PostSelectionResult ps = post_select(rec.joint, s.ancilla_bits);

  SqemJobResult r;
  r.mitigated = std::move(ps.distribution);
  r.mitigated.shots = j.shots_per_variant;
  r.retained_fraction = ps.retained_fraction;
  r.clipped_mass = ps.clipped_mass;
  r.negativity = rec.negativity;
  r.terms = rec.terms_executed;
  r.executed_configurations = rec.executed_configurations;
  return r;
}

/// Full mitigation campaign: one unmitigated baseline plus one job per
/// protected qubit, all seeded from one root.
struct SqemCampaignConfig {
  Circuit base_circuit;
  std::vector<int> qubits;  // protected qubits, distinct
  NoiseModel noise;
  std::uint64_t shots = 0;  // per configuration and for the baseline; 0 = exact
  std::uint64_t seed = 0;
  std::map<int, CheckPair> pairs;  // optional per-qubit frames
  bool mitigation_spam = false;
};

struct SqemCampaign {
  Distribution unmitigated;
  std::map<int, Distribution> mitigated;
  std::map<int, double> retained_fraction;
  std::map<int, double> clipped_mass;
  std::map<int, double> negativity;
  std::int64_t executed_configurations = 0;  // includes the baseline run
  std::uint64_t seed = 0;
};

using JobProgress = std::function<void(int qubit, const SqemJobResult&)>;

/// The campaign's unmitigated baseline run, reproducible on its own: the
/// sampling seed is derived from the campaign root by a fixed label.
inline Distribution campaign_baseline(const SqemCampaignConfig& cfg) {
  if (cfg.shots > 0) {
    Rng rng(derive_seed(cfg.seed, "unmitigated"));
    return sample_distribution(cfg.base_circuit, cfg.noise, cfg.shots, rng);
  }
  return exact_distribution(cfg.base_circuit, cfg.noise);
}

inline SqemCampaign run_campaign(const SqemCampaignConfig& cfg,
                                 const JobProgress& on_job_done = {}) {
  cfg.base_circuit.validate();
  cfg.noise.validate();
  std::set<int> seen;
  for (int k : cfg.qubits) {
    if (k < 0 || k >= cfg.base_circuit.num_qubits)
      throw ValidationError("protected qubit q" + std::to_string(k) + " out of range");
    if (!seen.insert(k).second)
      throw ValidationError("duplicate protected qubit q" + std::to_string(k));
  }

  SqemCampaign out;
  out.seed = cfg.seed;
  out.unmitigated = campaign_baseline(cfg);
  out.executed_configurations = 1;

  for (int k : cfg.qubits) {
    SqemJob job;
    job.base_circuit = cfg.base_circuit;
    job.protected_qubit = k;
    job.noise = cfg.noise;
    job.shots_per_variant = cfg.shots;
    job.seed = derive_seed(cfg.seed, "job/q" + std::to_string(k));
    job.mitigation_spam = cfg.mitigation_spam;
    auto it = cfg.pairs.find(k);
    if (it != cfg.pairs.end()) job.pair = it->second;
    SqemJobResult r = run_job(job);
    if (on_job_done) on_job_done(k, r);
    out.executed_configurations += r.executed_configurations;
    out.retained_fraction[k] = r.retained_fraction;
    out.clipped_mass[k] = r.clipped_mass;
    out.negativity[k] = r.negativity;
    out.mitigated[k] = std::move(r.mitigated);
  }
  return out;
}

}  // namespace cutmit
