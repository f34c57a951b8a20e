// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cutmit/circuit_io.hpp"
#include "cutmit/compare.hpp"
#include "cutmit/distribution.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/pipeline.hpp"
#include "cutmit/postselect.hpp"
#include "cutmit/recombine.hpp"
#include "cutmit/reconstruct.hpp"
#include "cutmit/rng.hpp"
#include "cutmit/version.hpp"

namespace cutmit {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExecutionError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Writes via a sibling temp file and an atomic rename; creates parent
/// directories as needed.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ExecutionError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw ExecutionError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

/// Content hash of a byte string, as a fixed-width hex literal.
inline std::string digest_hex(const std::string& bytes) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

/// Provenance record written next to every successful run's artifacts.
struct RunManifest {
  std::string command;
  json config = json::object();
  std::uint64_t root_seed = 0;
  struct Input {
    std::string name;
    std::string path;
    std::string digest;
  };
  std::vector<Input> inputs;
  std::vector<std::string> outputs;  // paths relative to the manifest
  double wall_clock_seconds = 0.0;

  void add_input(const std::string& name, const std::filesystem::path& path) {
    inputs.push_back({name, path.string(), digest_hex(read_file(path))});
  }
};

inline json manifest_to_json(const RunManifest& m) {
  json j;
  j["format"] = "cutmit.run_manifest/v1";
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = m.command;
  j["config"] = m.config;
  j["seeds"] = json{{"root", m.root_seed}};
  json inputs = json::array();
  for (const RunManifest::Input& in : m.inputs)
    inputs.push_back(json{{"name", in.name}, {"path", in.path}, {"digest", in.digest}});
  j["inputs"] = inputs;
  j["outputs"] = m.outputs;
  j["wall_clock_seconds"] = m.wall_clock_seconds;
  return j;
}

inline json reconstruction_to_json(const ReconstructionResult& r) {
  json j;
  j["format"] = "cutmit.reconstruction/v1";
  j["joint"] = distribution_to_json(r.joint);
  j["terms_executed"] = r.terms_executed;
  j["negativity"] = r.negativity;
  j["executed_configurations"] = r.executed_configurations;
  return j;
}

inline json postselection_to_json(const PostSelectionResult& r) {
  json j;
  j["format"] = "cutmit.postselection/v1";
  j["distribution"] = distribution_to_json(r.distribution);
  j["retained_fraction"] = r.retained_fraction;
  j["clipped_mass"] = r.clipped_mass;
  return j;
}

inline json recombination_to_json(const RecombinationResult& r) {
  json j;
  j["format"] = "cutmit.recombination/v1";
  j["distribution"] = distribution_to_json(r.result);
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["final_step"] = r.final_step;
  j["achieved_delta"] = r.achieved_delta;
  return j;
}

inline std::string recombination_trace_csv(const RecombinationResult& r) {
  std::ostringstream out;
  out << "iteration,hellinger_step,max_marginal_delta\n";
  for (const RecombinationTracePoint& p : r.trace)
    out << p.iteration << "," << format_double(p.step) << "," << format_double(p.delta) << "\n";
  return out.str();
}

inline json energy_report_to_json(const EnergyReport& r) {
  json j;
  j["format"] = "cutmit.energy_report/v1";
  j["method"] = r.method;
  j["energy"] = r.energy;
  j["shots"] = r.shots;
  json terms = json::object();
  for (const auto& [word, e] : r.per_term) terms[word] = e;
  j["per_term"] = terms;
  return j;
}

/// Flat method -> energy map for one comparison run, used by the per-seed
/// records in comparison artifacts.
inline std::map<std::string, double> comparison_energies(const ComparisonResult& r) {
  std::map<std::string, double> m;
  for (const EnergyReport* rep : r.all_reports()) m[rep->method] = rep->energy;
  return m;
}

inline json comparison_seed_to_json(const ComparisonResult& r, std::uint64_t seed) {
  json j;
  j["seed"] = seed;
  json energies = json::object();
  for (const auto& [method, e] : comparison_energies(r)) energies[method] = e;
  j["energies"] = energies;
  j["recombination"] = json{{"converged", r.recombination_converged},
                            {"iterations", r.recombination_iterations},
                            {"achieved_delta", r.recombination_delta}};
  j["executed_configurations"] = r.executed_configurations;
  return j;
}

}  // namespace cutmit
