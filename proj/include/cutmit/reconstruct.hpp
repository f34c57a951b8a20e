// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "cutmit/cutting.hpp"
#include "cutmit/distribution.hpp"
#include "cutmit/execute.hpp"
#include "cutmit/rng.hpp"
#include "cutmit/variants.hpp"

namespace cutmit {

/// Execution target for one fragment. A noiseless backend must not carry a
/// noise model; this is asserted before anything runs.
struct BackendConfig {
  BackendTag tag = BackendTag::NoiselessExact;
  NoiseModel noise;
};

struct ReconstructionResult {
  Distribution joint;  // quasi-probability over the original measured slots
  long long terms_executed = 0;
  double negativity = 0.0;  // total negative mass in joint
  long long executed_configurations = 0;
};

namespace detail {

/// Bare fragment circuit specialized to one cut configuration: prepare
/// terminals receive eigenstates, measure terminals get basis-change
/// suffixes ahead of the final measurement.
inline Circuit configured_fragment(const Fragment& frag,
                                   const std::vector<CutBasis>& measure_settings,
                                   const std::vector<PrepState>& preps) {
  Circuit c = frag.circuit;
  for (size_t i = 0; i < frag.prepare_terminal_cuts.size(); ++i) {
    // Local wire of the prepare terminal: the run beginning at this cut.
    for (size_t l = 0; l < frag.wires.size(); ++l)
      if (frag.wires[l].begin_cut == frag.prepare_terminal_cuts[i])
        c.prepare(static_cast<int>(l), preps[i]);
  }
  for (size_t i = 0; i < frag.measure_terminal_cuts.size(); ++i) {
    int wire = -1;
    for (size_t l = 0; l < frag.wires.size(); ++l)
      if (frag.wires[l].end_cut == frag.measure_terminal_cuts[i]) wire = static_cast<int>(l);
    switch (measure_settings[i]) {
      case CutBasis::X:
        c.add(g_h(wire));
        break;
      case CutBasis::Y:
        c.add(g_rz(wire, -std::numbers::pi / 2));
        c.add(g_h(wire));
        break;
      default:
        break;
    }
  }
  return c;
}

}  // namespace detail

/// Runs every needed fragment configuration (memoized), reduces measure
/// terminals with their eigenvalue signs, and combines fragments per variant
/// into the joint quasi-probability table.
///
/// shots_per_variant > 0 samples each hardware-emulated configuration with
/// that many shots; 0 evaluates exactly. Noiseless fragments are always
/// exact. Identical seed and inputs give identical results.
inline ReconstructionResult execute_and_reconstruct(
    const FragmentSet& f, const std::vector<VariantAssignment>& variants,
    const std::array<BackendConfig, 2>& backends, std::uint64_t shots_per_variant,
    std::uint64_t seed) {
  for (int fi = 0; fi < 2; ++fi)
    if (backends[static_cast<size_t>(fi)].tag == BackendTag::NoiselessExact &&
        !backends[static_cast<size_t>(fi)].noise.is_trivial())
      throw ValidationError("noiseless backend for fragment " + std::to_string(fi) +
                            " must not carry a noise model");

  ReconstructionResult result;
  result.joint = Distribution(static_cast<int>(f.output_map.size()),
                              DistributionKind::Reconstructed);

  std::map<std::string, Distribution> exec_cache;
  std::map<std::string, std::map<std::string, double>> reduce_cache;

  auto execute_config = [&](int fi, const std::vector<CutBasis>& settings,
                            const std::vector<PrepState>& preps) -> const Distribution& {
    std::string key = "frag" + std::to_string(fi) + "/m";
    for (CutBasis b : settings) key.push_back(cut_basis_letter(b));
    key += "/p";
    for (PrepState p : preps) key += prep_label(p) + ",";
    auto it = exec_cache.find(key);
    if (it != exec_cache.end()) return it->second;

    const Fragment& frag = f.fragments[static_cast<size_t>(fi)];
    const BackendConfig& backend = backends[static_cast<size_t>(fi)];
    Distribution d(0);
    if (frag.empty() || frag.circuit.measured_qubits.empty()) {
      d.table[""] = 1.0;
    } else {
      Circuit c = detail::configured_fragment(frag, settings, preps);
      try {
        if (backend.tag == BackendTag::NoiselessExact) {
          d = exact_distribution_pure(c);
        } else {
          NoiseModel local = backend.noise.remapped(frag.local_to_original());
          if (shots_per_variant > 0) {
            Rng rng(derive_seed(seed, key));
            d = sample_distribution(c, local, shots_per_variant, rng);
          } else {
            d = exact_distribution(c, local);
          }
        }
      } catch (const Error& e) {
        throw ExecutionError("fragment " + std::to_string(fi) + " config '" + key +
                             "' failed: " + e.what());
      }
      ++result.executed_configurations;
    }
    return exec_cache.emplace(std::move(key), std::move(d)).first->second;
  };

  // Reduced table: marginalize terminal bits against their eigenvalue signs,
  // leaving the fragment's own output bits.
  auto reduced_table = [&](int fi, const VariantAssignment& v)
      -> const std::map<std::string, double>& {
    const Fragment& frag = f.fragments[static_cast<size_t>(fi)];
    std::vector<CutBasis> exact_bases, exec_settings;
    std::vector<PrepState> preps;
    for (int ci : frag.measure_terminal_cuts) {
      exact_bases.push_back(v.settings[static_cast<size_t>(ci)].basis);
      exec_settings.push_back(v.settings[static_cast<size_t>(ci)].measured_setting());
    }
    for (int ci : frag.prepare_terminal_cuts)
      preps.push_back(v.settings[static_cast<size_t>(ci)].prep_state());

    std::string key = "frag" + std::to_string(fi) + "/b";
    for (CutBasis b : exact_bases) key.push_back(cut_basis_letter(b));
    key += "/p";
    for (PrepState p : preps) key += prep_label(p) + ",";
    auto it = reduce_cache.find(key);
    if (it != reduce_cache.end()) return it->second;

    const Distribution& d = execute_config(fi, exec_settings, preps);
    const size_t n_out = frag.output_slots.size();
    std::map<std::string, double> reduced;
    for (const auto& [bits, w] : d.table) {
      double factor = 1.0;
      for (size_t t = 0; t < frag.measure_terminal_cuts.size(); ++t) {
        CutSetting cs{exact_bases[t], 0};
        factor *= cs.outcome_eigenvalue(bits[n_out + t]);
      }
      reduced[bits.substr(0, n_out)] += factor * w;
    }
    return reduce_cache.emplace(std::move(key), std::move(reduced)).first->second;
  };

  for (const VariantAssignment& v : variants) {
    const auto& r0 = reduced_table(0, v);
    const auto& r1 = reduced_table(1, v);
    for (const auto& [k0, w0] : r0) {
      if (w0 == 0.0) continue;
      for (const auto& [k1, w1] : r1) {
        if (w1 == 0.0) continue;
        std::string key(f.output_map.size(), '0');
        for (size_t slot = 0; slot < f.output_map.size(); ++slot) {
          auto [fi, pos] = f.output_map[slot];
          key[slot] = (fi == 0 ? k0 : k1)[static_cast<size_t>(pos)];
        }
        result.joint.table[key] += v.weight * w0 * w1;
      }
    }
    ++result.terms_executed;
  }

  for (const auto& [k, w] : result.joint.table)
    if (w < 0.0) result.negativity += -w;
  return result;
}

}  // namespace cutmit
